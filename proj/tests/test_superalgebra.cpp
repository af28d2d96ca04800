#include <catch2/catch_amalgamated.hpp>

#include "zinbiel/superalgebra.hpp"

using namespace zinbiel;

namespace {

const char* kZ61 =
    "dim 6 0\n"
    "e1*e2 = e3\n"
    "e2*e1 = e4\n"
    "e2*e2 = e5\n"
    "e1*e5 = e6\n"
    "e5*e1 = -1 e6\n"
    "e2*e4 = -2 e6\n"
    "e4*e2 = -1 e6\n"
    "e2*e3 = e6\n"
    "e3*e2 = 2 e6\n";

const char* kN61 =
    "dim 6 0\n"
    "e1*e1 = e3\n"
    "e1*e2 = e4\n"
    "e2*e1 = e5\n"
    "e2*e2 = e6\n";

}  // namespace

TEST_CASE("element multiplication through the structure tensor") {
  SECTION("e1*e1 = e2 in the 3-dim algebra with a single product") {
    SuperAlgebra a(3, 0);
    a.set_c(0, 0, 1, Scalar(1));
    CHECK(a.basis(0) * a.basis(0) == a.basis(1));
  }
  SECTION("multiplication by zero") {
    auto a = parse(kZ61).algebra;
    for (int i = 0; i < a.dim(); ++i) CHECK((a.basis(i) * a.zero()).is_zero());
  }
  SECTION("e2*e4 = -2 e6 in the 6-dim three-step algebra") {
    auto a = parse(kZ61).algebra;
    CHECK(a.basis(1) * a.basis(3) == a.basis(5).scaled(Scalar(-2)));
  }
  SECTION("elements of different algebras cannot be multiplied") {
    auto a = parse(kZ61).algebra;
    auto b = parse(kN61).algebra;
    CHECK_THROWS(a.basis(0) * b.basis(0));
  }
  SECTION("bilinearity on a mixed element") {
    auto a = parse(kZ61).algebra;
    Element x = a.basis(0) + a.basis(1).scaled(Scalar(1, 2));
    Element y = a.basis(4);
    // (e1 + 1/2 e2) e5 = e6 + 0
    CHECK(x * y == a.basis(5));
  }
}

TEST_CASE("parse") {
  SECTION("the one-generated (2,0) algebra") {
    auto f = parse("dim 2 0\ne1*e1 = e2\n");
    CHECK(f.algebra.n_even() == 2);
    CHECK(f.algebra.n_odd() == 0);
    CHECK(f.algebra.c(0, 0, 1) == 1);
    CHECK(!f.gram);
  }
  SECTION("the one-generated (1,1) superalgebra") {
    auto f = parse("dim 1 1\ne2*e2 = e1\n");
    CHECK(f.algebra.parity(1).odd());
    CHECK(f.algebra.c(1, 1, 0) == 1);
  }
  SECTION("grading violation is rejected") {
    CHECK_THROWS_AS(parse("dim 1 1\ne1*e1 = e2\n"), ParseError);
  }
  SECTION("syntax error carries the line number") {
    try {
      parse("dim 2 0\ne1*e1 = e2\ne1 e2\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SECTION("duplicate product line is rejected") {
    CHECK_THROWS_AS(parse("dim 2 0\ne1*e1 = e2\ne1*e1 = e2\n"), ParseError);
  }
  SECTION("unknown basis name") {
    CHECK_THROWS_AS(parse("dim 2 0\ne1*e7 = e2\n"), ParseError);
  }
  SECTION("comments, custom labels, rational coefficients") {
    auto f = parse(
        "# a comment\n"
        "dim 2 0\n"
        "basis a b\n"
        "a*a = 1/2 b  # half\n");
    CHECK(f.algebra.label(1) == "b");
    CHECK(f.algebra.c(0, 0, 1) == Scalar(1, 2));
  }
  SECTION("form block with supersymmetric completion") {
    auto f = parse(
        "dim 1 1\n"
        "e2*e2 = e1\n"
        "form e1,e1 = 1\n"
        "form e1,e2 = 0\n");
    REQUIRE(f.gram);
    CHECK((*f.gram)(0, 0) == 1);
    auto g = parse("dim 0 2\nform e1,e2 = 1\n");
    REQUIRE(g.gram);
    CHECK((*g.gram)(0, 1) == 1);
    CHECK((*g.gram)(1, 0) == -1);  // odd-odd completion flips the sign
  }
}

TEST_CASE("serialize round-trips") {
  for (const char* text : {kZ61, kN61}) {
    auto f = parse(text);
    auto g = parse(serialize(f.algebra));
    CHECK(f.algebra.same_table(g.algebra));
  }
  SECTION("with a form block") {
    auto f = parse("dim 2 0\ne1*e1 = e2\nform e1,e2 = 1\nform e1,e1 = 2\n");
    auto g = parse(serialize(f.algebra, f.gram));
    REQUIRE(g.gram);
    CHECK(*g.gram == *f.gram);
  }
}

TEST_CASE("subalgebra closure") {
  auto a = parse(kN61).algebra;
  SECTION("generated by e1") {
    int iters = 0;
    Subspace s = a.subalgebra_span({a.basis(0).coeffs()}, &iters);
    CHECK(s.dim() == 2);
    CHECK(s.contains(a.basis(0).coeffs()));
    CHECK(s.contains(a.basis(2).coeffs()));
    CHECK(iters <= a.dim());
  }
  SECTION("generated by the full basis") {
    std::vector<Vec> gens;
    for (int i = 0; i < a.dim(); ++i) gens.push_back(a.basis(i).coeffs());
    CHECK(a.subalgebra_span(gens).dim() == a.dim());
  }
  SECTION("restriction to a closed subspace") {
    Subspace s = a.subalgebra_span({a.basis(0).coeffs()});
    auto r = restrict_to_subspace(a, s);
    CHECK(r.algebra.dim() == 2);
    // e1 e1 = e3 becomes the only product of the restricted algebra
    int nonzero = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (!is_zero(r.algebra.product_of_basis(i, j))) ++nonzero;
    CHECK(nonzero == 1);
  }
}

TEST_CASE("opposite algebra") {
  SECTION("opposite of a commutative algebra has the same tensor") {
    auto a = parse("dim 3 0\ne1*e1 = e3\ne1*e2 = e3\ne2*e1 = e3\n").algebra;
    CHECK(a.opposite().same_table(a));
  }
  SECTION("ungraded opposite swaps the arguments") {
    auto a = parse(kZ61).algebra;
    auto op = a.opposite();
    CHECK(op.c(3, 1, 5) == a.c(1, 3, 5));
  }
  SECTION("odd-odd products flip sign in the super-opposite") {
    auto a = parse("dim 1 1\ne2*e2 = e1\n").algebra;
    CHECK(a.opposite().c(1, 1, 0) == -1);
  }
}

TEST_CASE("homogeneous degree of elements") {
  auto a = parse("dim 1 1\ne2*e2 = e1\n").algebra;
  CHECK(a.basis(0).homogeneous_degree() == kEven);
  CHECK(a.basis(1).homogeneous_degree() == kOdd);
  CHECK(!(a.basis(0) + a.basis(1)).homogeneous_degree());
  CHECK(a.zero().homogeneous_degree() == kEven);
}
