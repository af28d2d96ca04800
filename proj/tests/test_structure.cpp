#include <catch2/catch_amalgamated.hpp>

#include "zinbiel/catalog.hpp"
#include "zinbiel/structure.hpp"

using namespace zinbiel;

TEST_CASE("nil_report") {
  SECTION("N5_1 is 2-step") {
    auto r = nil_report(catalog_get("N5_1"));
    CHECK(r.nil_index == 3);
    CHECK(r.step_class == "2-step");
    CHECK(r.power_dims == std::vector<int>{5, 3, 0});
  }
  SECTION("Z8_1 is 3-step") {
    auto r = nil_report(catalog_get("Z8_1"));
    CHECK(r.nil_index == 4);
    CHECK(r.step_class == "3-step");
  }
  SECTION("one-dimensional zero algebra is abelian with nil index 2") {
    auto r = nil_report(SuperAlgebra(1, 0));
    CHECK(r.nil_index == 2);
    CHECK(r.step_class == "abelian");
  }
  SECTION("zero-dimensional algebra") {
    CHECK(nil_report(SuperAlgebra(0, 0)).nil_index == 1);
  }
  SECTION("non-nilpotent input reports 'other' with no index up to the bound") {
    auto r = nil_report(parse("dim 2 0\ne1*e2 = e2\ne2*e1 = -1 e2\n").algebra);
    CHECK(!r.nil_index);
    CHECK(r.step_class == "other");
  }
  SECTION("power dims weakly decrease from length 2 on") {
    for (const char* n : {"N3_1", "Z6_1", "Z8_1"}) {
      auto r = nil_report(catalog_get(n));
      for (std::size_t k = 2; k + 1 < r.power_dims.size(); ++k)
        CHECK(r.power_dims[k] >= r.power_dims[k + 1]);
    }
  }
  SECTION("left-comb enumeration agrees with all bracketings on 2-step algebras") {
    for (const char* n : {"N3_2", "N4_4", "N5_3", "N6_1"}) {
      auto a = catalog_get(n);
      auto all = power_spans(a, 4);
      auto combs = left_comb_spans(a, 4);
      for (int k = 0; k < 4; ++k) CHECK(all[k].dim() == combs[k].dim());
    }
  }
}

TEST_CASE("cube_zero") {
  SECTION("Z7_1 has x^3 = 0") { CHECK(cube_zero(catalog_get("Z7_1"))); }
  SECTION("idempotent algebra fails") {
    std::optional<Counterexample> w;
    CHECK(!cube_zero(parse("dim 1 0\ne1*e1 = e1\n").algebra, &w));
    REQUIRE(w);
  }
  SECTION("entire catalog of symmetric Zinbiel algebras") {
    for (const auto& inst : catalog_instances())
      if (inst.entry->claims(VarietyName::SymmetricZinbiel, true))
        CHECK(cube_zero(inst.algebra));
  }
  SECTION("graded pointwise check: odd cube violation is caught") {
    // (e2 e2) e2 = e1 e2 = e2 != 0 for the odd generator e2, even though the
    // signed multilinear forms vanish (the all-odd alternating sum cancels).
    auto a = parse("dim 1 1\ne2*e2 = e1\ne1*e2 = e2\n").algebra;
    SignedIdentity pol = polarize(ids::sq_x_left());
    CHECK(!holds(a, pol).has_value());
    CHECK(!cube_zero(a));
  }
}

TEST_CASE("annihilator") {
  SECTION("N3_1: span{e2, e3}") {
    auto g = annihilator(catalog_get("N3_1"));
    CHECK(g.dim() == 2);
    auto a = catalog_get("N3_1");
    CHECK(g.whole.contains(a.basis(1).coeffs()));
    CHECK(g.whole.contains(a.basis(2).coeffs()));
  }
  SECTION("zero algebra: everything") {
    CHECK(annihilator(SuperAlgebra(3, 0)).dim() == 3);
  }
  SECTION("Z6_1: even annihilator contains e6") {
    auto a = catalog_get("Z6_1");
    auto g = annihilator(a);
    CHECK(g.even.contains(a.basis(5).coeffs()));
  }
  SECTION("graded split") {
    auto a = parse("dim 1 1\ne2*e2 = e1\n").algebra;
    auto g = annihilator(a);
    CHECK(g.even.dim() == 1);
    CHECK(g.odd.dim() == 0);
  }
}

TEST_CASE("generator count and dimension bound") {
  SECTION("N6_1: d = 2, bound 34") {
    auto a = catalog_get("N6_1");
    CHECK(generator_count(a) == 2);
    CHECK(dim_bound_check(a));
  }
  SECTION("one-generated (2,0): d = 1, dim 2 <= 3") {
    auto a = catalog_get("OneGen_2_0");
    CHECK(generator_count(a) == 1);
    CHECK(dim_bound_check(a));
  }
  SECTION("Z8_1: d = 2, dim 8 <= 34") {
    auto a = catalog_get("Z8_1");
    CHECK(generator_count(a) == 2);
    CHECK(dim_bound_check(a));
  }
  SECTION("non-nilpotent input is rejected") {
    CHECK_THROWS_AS(generator_count(parse("dim 1 0\ne1*e1 = e1\n").algebra), NotNilpotentError);
  }
}

TEST_CASE("odd generator regrading") {
  SECTION("N3_2 regrades to a valid (1,2) superalgebra") {
    auto r = odd_generator_grading_check(catalog_get("N3_2"));
    REQUIRE(r.regraded);
    CHECK(r.regraded->n_even() == 1);
    CHECK(r.regraded->n_odd() == 2);
    CHECK(in_variety(*r.regraded, VarietyName::SymmetricZinbiel).member);
  }
  SECTION("N3_1 regrades with its actual generators e1, e3 odd") {
    auto r = odd_generator_grading_check(catalog_get("N3_1"));
    REQUIRE(r.regraded);
    CHECK(r.regraded->n_even() == 1);
    CHECK(r.regraded->n_odd() == 2);
  }
  SECTION("every 2-step two-generated family admits the odd-generator grading") {
    for (const auto& inst : catalog_instances()) {
      if (inst.entry->role != "two-generated") continue;
      auto r = odd_generator_grading_check(inst.algebra);
      INFO(inst.display() << ": " << r.violation);
      CHECK(r.regraded.has_value());
    }
  }
  SECTION("three-step algebras admit no odd-generator grading") {
    for (const char* n : {"Z6_1", "Z6_2", "Z7_1", "Z8_1"}) {
      auto r = odd_generator_grading_check(catalog_get(n));
      INFO(n);
      CHECK(!r.regraded.has_value());
      CHECK(!r.violation.empty());
    }
  }
  SECTION("zero algebra with two odd vectors is valid") {
    auto r = odd_generator_grading_check(SuperAlgebra(2, 0));
    REQUIRE(r.regraded);
    CHECK(r.regraded->n_odd() == 2);
  }
}
