#pragma once

// Signed multilinear identities, characteristic-zero polarization, and the
// registry of variety membership predicates.
//
// A term of an identity is a rational coefficient, a binary bracketing over
// numbered variables, and an explicit sign specification: a set of unordered
// variable pairs P and a set of single variables S, the term carrying the
// factor (-1)^{sum_{(a,b) in P} |x_a||x_b| + sum_{a in S} |x_a|} when
// evaluated on homogeneous arguments. Multilinearity makes evaluation over
// basis tuples a complete decision procedure; identities with repeated
// variables are polarized first (valid in characteristic zero) and are
// restricted to ungraded algebras until then.

#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "zinbiel/superalgebra.hpp"

namespace zinbiel {

/// A binary bracketing whose leaves name variables (0-based, repeats allowed).
class Monomial {
 public:
  static Monomial leaf(int var) {
    Monomial m;
    m.nodes_.push_back({var, -1, -1});
    return m;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.nodes_ = a.nodes_;
    int shift = int(m.nodes_.size());
    for (const Node& n : b.nodes_)
      m.nodes_.push_back({n.var, n.left < 0 ? -1 : n.left + shift, n.right < 0 ? -1 : n.right + shift});
    m.nodes_.push_back({-1, shift - 1, int(m.nodes_.size()) - 1});
    return m;
  }

  int size() const { return int(nodes_.size()); }
  bool is_leaf() const { return nodes_.back().var >= 0; }
  /// Left/right factor of the top product; throws on a bare leaf.
  Monomial left_factor() const { return subtree(nodes_[nodes_.size() - 1].left); }
  Monomial right_factor() const { return subtree(nodes_[nodes_.size() - 1].right); }
  /// Variables in left-to-right leaf order.
  std::vector<int> leaf_sequence() const {
    std::vector<int> out;
    walk(int(nodes_.size()) - 1, out);
    return out;
  }
  Monomial rename(const std::vector<int>& map) const {
    Monomial m = *this;
    for (Node& n : m.nodes_)
      if (n.var >= 0) n.var = map[n.var];
    return m;
  }
  /// Renames the k-th leaf (in left-to-right order) to new_vars[k]. Works
  /// because leaf()/operator* append nodes so that leaves occur in the node
  /// list in left-to-right tree order.
  Monomial rename_leaves_by_position(const std::vector<int>& new_vars) const {
    Monomial m = *this;
    int k = 0;
    for (Node& n : m.nodes_)
      if (n.var >= 0) n.var = new_vars[k++];
    return m;
  }

  Vec evaluate(const SuperAlgebra& a, const std::vector<int>& assignment) const {
    return eval_node(int(nodes_.size()) - 1, a, assignment);
  }

  std::string str(const std::string& vars = "xyzw") const { return str_node(int(nodes_.size()) - 1, vars); }

 private:
  struct Node {
    int var, left, right;  // leaf iff var >= 0
  };
  Monomial subtree(int root) const {
    if (root < 0) throw std::runtime_error("monomial has no factors");
    Monomial m;
    std::function<int(int)> copy = [&](int idx) -> int {
      const Node& n = nodes_[idx];
      if (n.var >= 0) {
        m.nodes_.push_back({n.var, -1, -1});
      } else {
        int l = copy(n.left);
        int r = copy(n.right);
        m.nodes_.push_back({-1, l, r});
      }
      return int(m.nodes_.size()) - 1;
    };
    copy(root);
    return m;
  }
  void walk(int idx, std::vector<int>& out) const {
    const Node& n = nodes_[idx];
    if (n.var >= 0) {
      out.push_back(n.var);
      return;
    }
    walk(n.left, out);
    walk(n.right, out);
  }
  Vec eval_node(int idx, const SuperAlgebra& a, const std::vector<int>& assignment) const {
    const Node& n = nodes_[idx];
    if (n.var >= 0) return a.basis(assignment[n.var]).coeffs();
    const Node& l = nodes_[n.left];
    const Node& r = nodes_[n.right];
    if (l.var >= 0 && r.var >= 0) return a.product_of_basis(assignment[l.var], assignment[r.var]);
    return a.multiply_vec(eval_node(n.left, a, assignment), eval_node(n.right, a, assignment));
  }
  std::string str_node(int idx, const std::string& vars) const {
    const Node& n = nodes_[idx];
    if (n.var >= 0) return n.var < int(vars.size()) ? std::string(1, vars[n.var]) : "v" + std::to_string(n.var);
    return "(" + str_node(n.left, vars) + str_node(n.right, vars) + ")";
  }
  std::vector<Node> nodes_;
};

inline Monomial V(int i) { return Monomial::leaf(i); }

struct IdentityTerm {
  Scalar coeff;
  Monomial monomial;
  std::vector<std::pair<int, int>> sign_pairs;  // unordered variable pairs
  std::vector<int> sign_singles;
};

struct SignedIdentity {
  int num_vars = 0;
  std::vector<IdentityTerm> terms;
  std::string name;

  bool multilinear() const {
    for (const IdentityTerm& t : terms)
      for (int count : multiplicities(t))
        if (count != 1) return false;
    return true;
  }
  bool has_signs() const {
    for (const IdentityTerm& t : terms)
      if (!t.sign_pairs.empty() || !t.sign_singles.empty()) return true;
    return false;
  }
  std::vector<int> multiplicities(const IdentityTerm& t) const {
    std::vector<int> counts(num_vars, 0);
    for (int v : t.monomial.leaf_sequence()) ++counts[v];
    return counts;
  }
  /// Every term must use the identical multiset of variables.
  void validate() const {
    if (terms.empty()) throw std::runtime_error("identity with no terms");
    auto ref = multiplicities(terms[0]);
    for (const IdentityTerm& t : terms)
      if (multiplicities(t) != ref)
        throw std::runtime_error("identity '" + name + "': terms use different variable multisets");
  }
  SignedIdentity unsigned_form() const {
    SignedIdentity out = *this;
    for (IdentityTerm& t : out.terms) {
      t.sign_pairs.clear();
      t.sign_singles.clear();
    }
    return out;
  }
};

namespace detail {
inline int parity_of(const SuperAlgebra& a, int basis_index) { return a.parity(basis_index).parity; }

inline Scalar term_sign(const IdentityTerm& t, const SuperAlgebra& a, const std::vector<int>& tuple) {
  int e = 0;
  for (auto [p, q] : t.sign_pairs) e += parity_of(a, tuple[p]) * parity_of(a, tuple[q]);
  for (int s : t.sign_singles) e += parity_of(a, tuple[s]);
  return (e % 2 == 0) ? Scalar(1) : Scalar(-1);
}

/// Koszul sign pairs for a leaf sequence relative to the order 0,1,...,m-1:
/// one pair per inversion.
inline std::vector<std::pair<int, int>> inversion_pairs(const std::vector<int>& seq) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) pairs.push_back({seq[j], seq[i]});
  return pairs;
}
}  // namespace detail

struct Counterexample {
  std::vector<int> tuple;  // basis indices, one per variable
  Vec residual;
  std::string identity;
  std::string describe(const SuperAlgebra& a) const {
    std::string s = identity + " fails at (";
    for (std::size_t i = 0; i < tuple.size(); ++i)
      s += (i ? "," : "") + a.label(tuple[i]);
    s += "), residual " + a.element(residual).str();
    return s;
  }
};

/// Full linearization over a characteristic-zero field: each variable of
/// multiplicity k is replaced by k fresh variables summed over all
/// placements. The result is multilinear and, over char 0, holds on an
/// algebra iff the input does. Emitted terms carry Koszul inversion signs so
/// the polarized identity is also meaningful on graded algebras; these are
/// inert when evaluation is ungraded.
inline SignedIdentity polarize(const SignedIdentity& id) {
  id.validate();
  if (id.multilinear()) return id;
  if (id.has_signs())
    throw std::runtime_error("polarize: identity '" + id.name +
                             "' has repeated variables and an explicit graded sign spec; unsupported");
  std::vector<int> mult = id.multiplicities(id.terms[0]);
  // variable v occupies new indices base[v] .. base[v]+mult[v]-1
  std::vector<int> base(id.num_vars, 0);
  int total = 0;
  for (int v = 0; v < id.num_vars; ++v) {
    base[v] = total;
    total += mult[v];
  }
  SignedIdentity out;
  out.num_vars = total;
  out.name = id.name + " (polarized)";
  for (const IdentityTerm& t : id.terms) {
    // per-term: enumerate, per variable, bijections of fresh slots onto the
    // occurrences of that variable, composed into a leaf renaming
    std::vector<int> seq = t.monomial.leaf_sequence();
    std::vector<std::vector<int>> occurrence_positions(id.num_vars);
    for (int pos = 0; pos < int(seq.size()); ++pos) occurrence_positions[seq[pos]].push_back(pos);
    std::vector<std::vector<int>> perms(id.num_vars);  // current permutation per variable
    for (int v = 0; v < id.num_vars; ++v) {
      perms[v].resize(mult[v]);
      std::iota(perms[v].begin(), perms[v].end(), 0);
    }
    for (;;) {
      std::vector<int> leaf_rename(seq.size());
      for (int v = 0; v < id.num_vars; ++v)
        for (int occ = 0; occ < mult[v]; ++occ)
          leaf_rename[occurrence_positions[v][occ]] = base[v] + perms[v][occ];
      Monomial renamed = t.monomial.rename_leaves_by_position(leaf_rename);
      IdentityTerm nt;
      nt.coeff = t.coeff;
      nt.monomial = renamed;
      nt.sign_pairs = detail::inversion_pairs(renamed.leaf_sequence());
      out.terms.push_back(std::move(nt));
      // advance the odometer of permutations
      int v = 0;
      while (v < id.num_vars && !std::next_permutation(perms[v].begin(), perms[v].end())) ++v;
      if (v == id.num_vars) break;
    }
  }
  return out;
}

struct EvalOptions {
  int max_vars = 4;  // enough for every in-scope identity
};

/// Decides the identity on the whole algebra by evaluating on every tuple of
/// homogeneous basis vectors with the term signs from the sign spec. The
/// first counterexample in lexicographic tuple order is returned.
/// Identities with repeated variables are auto-polarized; on graded input
/// that requires an unsigned source identity.
inline std::optional<Counterexample> holds(const SuperAlgebra& a, const SignedIdentity& id_in,
                                           const EvalOptions& opts = {}) {
  id_in.validate();
  const SignedIdentity* idp = &id_in;
  SignedIdentity storage;
  if (!id_in.multilinear()) {
    if (a.graded() && id_in.has_signs())
      throw std::runtime_error("holds: identity '" + id_in.name +
                               "' with repeated variables cannot be decided on a graded algebra");
    storage = polarize(id_in);
    idp = &storage;
  }
  const SignedIdentity& id = *idp;
  if (id.num_vars > opts.max_vars)
    throw std::runtime_error("holds: identity '" + id.name + "' uses " + std::to_string(id.num_vars) +
                             " variables, above the configured bound " + std::to_string(opts.max_vars));
  int n = a.dim();
  if (n == 0) return std::nullopt;
  std::vector<int> tuple(id.num_vars, 0);
  for (;;) {
    Vec residual(n);
    for (const IdentityTerm& t : id.terms) {
      Scalar f = t.coeff * detail::term_sign(t, a, tuple);
      if (!f.is_zero()) add_scaled(residual, f, t.monomial.evaluate(a, tuple));
    }
    if (!is_zero(residual)) return Counterexample{tuple, residual, id.name};
    int k = id.num_vars - 1;
    while (k >= 0 && ++tuple[k] == n) tuple[k--] = 0;
    if (k < 0) break;
  }
  return std::nullopt;
}

// -- identity registry -------------------------------------------------------

namespace ids {

inline SignedIdentity make(std::string name, int nvars, std::vector<IdentityTerm> terms) {
  SignedIdentity id{nvars, std::move(terms), std::move(name)};
  id.validate();
  return id;
}

// x=0, y=1, z=2 throughout.

/// (xy)z = x(yz) + (-1)^{|y||z|} x(zy)
inline SignedIdentity left_zinbiel() {
  Monomial x = V(0), y = V(1), z = V(2);
  return make("left-zinbiel", 3,
              {{Scalar(1), (x * y) * z, {}, {}},
               {Scalar(-1), x * (y * z), {}, {}},
               {Scalar(-1), x * (z * y), {{1, 2}}, {}}});
}

/// x(yz) = (xy)z + (-1)^{|x||y|} (yx)z
inline SignedIdentity right_zinbiel() {
  Monomial x = V(0), y = V(1), z = V(2);
  return make("right-zinbiel", 3,
              {{Scalar(1), x * (y * z), {}, {}},
               {Scalar(-1), (x * y) * z, {}, {}},
               {Scalar(-1), (y * x) * z, {{0, 1}}, {}}});
}

/// x(yz) = (xy)z + (-1)^{|x||y|} y(xz)   (standard left Leibniz)
inline SignedIdentity left_leibniz() {
  Monomial x = V(0), y = V(1), z = V(2);
  return make("left-leibniz", 3,
              {{Scalar(1), x * (y * z), {}, {}},
               {Scalar(-1), (x * y) * z, {}, {}},
               {Scalar(-1), y * (x * z), {{0, 1}}, {}}});
}

/// (xy)z = x(yz) + (-1)^{|y||z|} (xz)y   (standard right Leibniz)
inline SignedIdentity right_leibniz() {
  Monomial x = V(0), y = V(1), z = V(2);
  return make("right-leibniz", 3,
              {{Scalar(1), (x * y) * z, {}, {}},
               {Scalar(-1), x * (y * z), {}, {}},
               {Scalar(-1), (x * z) * y, {{1, 2}}, {}}});
}

/// (xy)z = (-1)^{|y||z|} (xz)y
inline SignedIdentity lr_right_commutative() {
  Monomial x = V(0), y = V(1), z = V(2);
  return make("lr-right-commutative", 3,
              {{Scalar(1), (x * y) * z, {}, {}}, {Scalar(-1), (x * z) * y, {{1, 2}}, {}}});
}

/// x(yz) = (-1)^{|x||y|} y(xz)
inline SignedIdentity lr_left_commutative() {
  Monomial x = V(0), y = V(1), z = V(2);
  return make("lr-left-commutative", 3,
              {{Scalar(1), x * (y * z), {}, {}}, {Scalar(-1), y * (x * z), {{0, 1}}, {}}});
}

/// (x,y,z) = (-1)^{|x||y| + |z|(|x|+|y|)} (z,y,x), associators expanded
inline SignedIdentity anti_flexible() {
  Monomial x = V(0), y = V(1), z = V(2);
  std::vector<std::pair<int, int>> s{{0, 1}, {0, 2}, {1, 2}};
  return make("anti-flexible", 3,
              {{Scalar(1), (x * y) * z, {}, {}},
               {Scalar(-1), x * (y * z), {}, {}},
               {Scalar(-1), (z * y) * x, s, {}},
               {Scalar(1), z * (y * x), s, {}}});
}

/// (xy)z = -(-1)^{|x|(|y|+|z|)} y(zx)
inline SignedIdentity cyclic_left() {
  Monomial x = V(0), y = V(1), z = V(2);
  return make("cyclic-left", 3,
              {{Scalar(1), (x * y) * z, {}, {}}, {Scalar(1), y * (z * x), {{0, 1}, {0, 2}}, {}}});
}

/// (xy)z = -(-1)^{|x||y|+|y||z|+|z||x|} z(yx)
inline SignedIdentity reversal() {
  Monomial x = V(0), y = V(1), z = V(2);
  return make("reversal", 3,
              {{Scalar(1), (x * y) * z, {}, {}},
               {Scalar(1), z * (y * x), {{0, 1}, {1, 2}, {0, 2}}, {}}});
}

inline SignedIdentity associative() {
  Monomial x = V(0), y = V(1), z = V(2);
  return make("associative", 3, {{Scalar(1), (x * y) * z, {}, {}}, {Scalar(-1), x * (y * z), {}, {}}});
}

inline SignedIdentity triples_left_zero() {
  Monomial x = V(0), y = V(1), z = V(2);
  return make("left-triples-zero", 3, {{Scalar(1), (x * y) * z, {}, {}}});
}
inline SignedIdentity triples_right_zero() {
  Monomial x = V(0), y = V(1), z = V(2);
  return make("right-triples-zero", 3, {{Scalar(1), x * (y * z), {}, {}}});
}

// Ungraded identity systems (repeated variables; polarized on use).

inline SignedIdentity square_zero() {
  Monomial x = V(0);
  return make("x^2 = 0", 1, {{Scalar(1), x * x, {}, {}}});
}
inline SignedIdentity sq_x_left() {  // x^2 x = 0
  Monomial x = V(0);
  return make("x^2 x = 0", 1, {{Scalar(1), (x * x) * x, {}, {}}});
}
inline SignedIdentity sq_x_right() {  // x x^2 = 0
  Monomial x = V(0);
  return make("x x^2 = 0", 1, {{Scalar(1), x * (x * x), {}, {}}});
}
inline SignedIdentity sq_sq() {  // x^2 x^2 = 0
  Monomial x = V(0);
  return make("x^2 x^2 = 0", 1, {{Scalar(1), (x * x) * (x * x), {}, {}}});
}

inline std::vector<SignedIdentity> mono_symmetric_zinbiel() {
  return {sq_x_left(), sq_x_right(), sq_sq()};
}
inline std::vector<SignedIdentity> mono_left_leibniz() { return {sq_x_left(), sq_sq()}; }

inline std::vector<SignedIdentity> mono_left_zinbiel() {
  Monomial x = V(0);
  return {make("x x^2 = 2 x^2 x", 1,
               {{Scalar(1), x * (x * x), {}, {}}, {Scalar(-2), (x * x) * x, {}, {}}}),
          make("x^2 x^2 = 3 (x^2 x) x", 1,
               {{Scalar(1), (x * x) * (x * x), {}, {}}, {Scalar(-3), ((x * x) * x) * x, {}, {}}})};
}

inline std::vector<SignedIdentity> binary_left_zinbiel() {
  Monomial x = V(0), y = V(1);
  return {make("x(yx) = (xy+yx)x", 2,
               {{Scalar(1), x * (y * x), {}, {}},
                {Scalar(-1), (x * y) * x, {}, {}},
                {Scalar(-1), (y * x) * x, {}, {}}}),
          make("x(xy) = 2 x^2 y", 2,
               {{Scalar(1), x * (x * y), {}, {}}, {Scalar(-2), (x * x) * y, {}, {}}})};
}

inline std::vector<SignedIdentity> binary_symmetric_zinbiel_a() {
  Monomial x = V(0), y = V(1);
  auto v = binary_left_zinbiel();
  v.push_back(make("(xy)x = x(yx+xy)", 2,
                   {{Scalar(1), (x * y) * x, {}, {}},
                    {Scalar(-1), x * (y * x), {}, {}},
                    {Scalar(-1), x * (x * y), {}, {}}}));
  v.push_back(make("(yx)x = 2 y x^2", 2,
                   {{Scalar(1), (y * x) * x, {}, {}}, {Scalar(-2), y * (x * x), {}, {}}}));
  return v;
}

inline std::vector<SignedIdentity> binary_symmetric_zinbiel_b() {
  Monomial x = V(0), y = V(1);
  return {make("x^2 y = 0", 2, {{Scalar(1), (x * x) * y, {}, {}}}),
          make("x(yx) = (xy)x", 2,
               {{Scalar(1), x * (y * x), {}, {}}, {Scalar(-1), (x * y) * x, {}, {}}}),
          make("x(y(xy)) = (xy)(xy) + y(x(xy))", 2,
               {{Scalar(1), x * (y * (x * y)), {}, {}},
                {Scalar(-1), (x * y) * (x * y), {}, {}},
                {Scalar(-1), y * (x * (x * y)), {}, {}}}),
          make("y x^2 = 0", 2, {{Scalar(1), y * (x * x), {}, {}}}),
          make("(xy)(xy) = ((xy)x)y + x((xy)y)", 2,
               {{Scalar(1), (x * y) * (x * y), {}, {}},
                {Scalar(-1), ((x * y) * x) * y, {}, {}},
                {Scalar(-1), x * ((x * y) * y), {}, {}}})};
}

inline std::vector<SignedIdentity> binary_left_leibniz() {
  Monomial x = V(0), y = V(1);
  return {make("x^2 y = 0", 2, {{Scalar(1), (x * x) * y, {}, {}}}),
          make("x(yx) = (xy)x + y x^2", 2,
               {{Scalar(1), x * (y * x), {}, {}},
                {Scalar(-1), (x * y) * x, {}, {}},
                {Scalar(-1), y * (x * x), {}, {}}}),
          make("x(y(xy)) = (xy)(xy) + y(x(xy))", 2,
               {{Scalar(1), x * (y * (x * y)), {}, {}},
                {Scalar(-1), (x * y) * (x * y), {}, {}},
                {Scalar(-1), y * (x * (x * y)), {}, {}}})};
}

/// Both normed triple products alternate with the sign of the permutation.
inline std::vector<SignedIdentity> alternating_triples() {
  Monomial x = V(0), y = V(1), z = V(2);
  return {make("(xy)z + (yx)z = 0", 3,
               {{Scalar(1), (x * y) * z, {}, {}}, {Scalar(1), (y * x) * z, {}, {}}}),
          make("(xy)z + (xz)y = 0", 3,
               {{Scalar(1), (x * y) * z, {}, {}}, {Scalar(1), (x * z) * y, {}, {}}}),
          make("x(yz) + y(xz) = 0", 3,
               {{Scalar(1), x * (y * z), {}, {}}, {Scalar(1), y * (x * z), {}, {}}}),
          make("x(yz) + x(zy) = 0", 3,
               {{Scalar(1), x * (y * z), {}, {}}, {Scalar(1), x * (z * y), {}, {}}})};
}

/// (xy)z = x(yz - zy) and x(yz) = (xy - yx)z
inline std::vector<SignedIdentity> omega() {
  Monomial x = V(0), y = V(1), z = V(2);
  return {make("(xy)z = x(yz-zy)", 3,
               {{Scalar(1), (x * y) * z, {}, {}},
                {Scalar(-1), x * (y * z), {}, {}},
                {Scalar(1), x * (z * y), {}, {}}}),
          make("x(yz) = (xy-yx)z", 3,
               {{Scalar(1), x * (y * z), {}, {}},
                {Scalar(-1), (x * y) * z, {}, {}},
                {Scalar(1), (y * x) * z, {}, {}}})};
}

}  // namespace ids

enum class VarietyName {
  LeftZinbiel,
  RightZinbiel,
  SymmetricZinbiel,
  LeftLeibniz,
  RightLeibniz,
  SymmetricLeibniz,
  LR,
  AntiFlexible,
  MonoSymZinbiel,
  BinarySymZinbielA,
  BinarySymZinbielB,
  MonoLeftLeibniz,
  BinaryLeftLeibniz,
  MonoLeftZinbiel,
  BinaryLeftZinbiel,
  Associative,
  Lie1,
  IntersectionSLSZ,
  TriplesZero,
  Omega,
};

inline const std::vector<std::pair<VarietyName, std::string>>& variety_names() {
  static const std::vector<std::pair<VarietyName, std::string>> names = {
      {VarietyName::LeftZinbiel, "left-zinbiel"},
      {VarietyName::RightZinbiel, "right-zinbiel"},
      {VarietyName::SymmetricZinbiel, "symmetric-zinbiel"},
      {VarietyName::LeftLeibniz, "left-leibniz"},
      {VarietyName::RightLeibniz, "right-leibniz"},
      {VarietyName::SymmetricLeibniz, "symmetric-leibniz"},
      {VarietyName::LR, "lr"},
      {VarietyName::AntiFlexible, "anti-flexible"},
      {VarietyName::MonoSymZinbiel, "mono-symmetric-zinbiel"},
      {VarietyName::BinarySymZinbielA, "binary-symmetric-zinbiel-a"},
      {VarietyName::BinarySymZinbielB, "binary-symmetric-zinbiel-b"},
      {VarietyName::MonoLeftLeibniz, "mono-left-leibniz"},
      {VarietyName::BinaryLeftLeibniz, "binary-left-leibniz"},
      {VarietyName::MonoLeftZinbiel, "mono-left-zinbiel"},
      {VarietyName::BinaryLeftZinbiel, "binary-left-zinbiel"},
      {VarietyName::Associative, "associative"},
      {VarietyName::Lie1, "lie-1"},
      {VarietyName::IntersectionSLSZ, "intersection-sl-sz"},
      {VarietyName::TriplesZero, "triples-zero"},
      {VarietyName::Omega, "omega"},
  };
  return names;
}

inline std::string variety_string(VarietyName v) {
  for (auto& [name, text] : variety_names())
    if (name == v) return text;
  throw std::runtime_error("unknown variety");
}
inline std::optional<VarietyName> variety_from_string(const std::string& text) {
  for (auto& [name, s] : variety_names())
    if (s == text) return name;
  return std::nullopt;
}

/// Identity list defining a variety, plus whether graded evaluation is
/// meaningful (the mono/binary systems and other polarization-based
/// varieties are ungraded-only).
struct VarietyDefinition {
  std::vector<SignedIdentity> identities;
  bool graded_capable = true;
};

inline VarietyDefinition variety_definition(VarietyName v) {
  using namespace ids;
  switch (v) {
    case VarietyName::LeftZinbiel: return {{left_zinbiel()}, true};
    case VarietyName::RightZinbiel: return {{right_zinbiel()}, true};
    case VarietyName::SymmetricZinbiel: return {{left_zinbiel(), right_zinbiel()}, true};
    case VarietyName::LeftLeibniz: return {{left_leibniz()}, true};
    case VarietyName::RightLeibniz: return {{right_leibniz()}, true};
    case VarietyName::SymmetricLeibniz: return {{left_leibniz(), right_leibniz()}, true};
    case VarietyName::LR: return {{lr_right_commutative(), lr_left_commutative()}, true};
    case VarietyName::AntiFlexible: return {{anti_flexible()}, true};
    case VarietyName::MonoSymZinbiel: return {mono_symmetric_zinbiel(), false};
    case VarietyName::BinarySymZinbielA: return {binary_symmetric_zinbiel_a(), false};
    case VarietyName::BinarySymZinbielB: return {binary_symmetric_zinbiel_b(), false};
    case VarietyName::MonoLeftLeibniz: return {mono_left_leibniz(), false};
    case VarietyName::BinaryLeftLeibniz: return {binary_left_leibniz(), false};
    case VarietyName::MonoLeftZinbiel: return {mono_left_zinbiel(), false};
    case VarietyName::BinaryLeftZinbiel: return {binary_left_zinbiel(), false};
    case VarietyName::Associative: return {{associative()}, true};
    case VarietyName::Lie1: return {{square_zero()}, false};
    case VarietyName::IntersectionSLSZ: return {alternating_triples(), false};
    case VarietyName::TriplesZero: return {{triples_left_zero(), triples_right_zero()}, true};
    case VarietyName::Omega: return {omega(), false};
  }
  throw std::runtime_error("unknown variety");
}

struct VarietyResult {
  bool member;
  std::optional<Counterexample> certificate;  // first violated identity + witness
};

inline VarietyResult in_variety(const SuperAlgebra& a, VarietyName v, const EvalOptions& opts = {}) {
  VarietyDefinition def = variety_definition(v);
  if (a.graded() && !def.graded_capable)
    throw std::runtime_error("variety '" + variety_string(v) + "' is defined for ungraded algebras only");
  for (const SignedIdentity& id : def.identities)
    if (auto ce = holds(a, id, opts)) return {false, std::move(ce)};
  return {true, std::nullopt};
}

/// Cross-validation oracle for the closed-form mono/binary registries: true
/// iff every subalgebra generated by i combinations from a deterministic
/// sample family lies in v. Not the primary predicate.
inline bool subalgebra_variety_check(const SuperAlgebra& a, VarietyName v, int i,
                                     const EvalOptions& opts = {}) {
  if (i != 1 && i != 2) throw std::runtime_error("subalgebra_variety_check: i must be 1 or 2");
  if (a.graded()) throw std::runtime_error("subalgebra_variety_check: ungraded algebras only");
  int n = a.dim();
  std::vector<Vec> family;
  for (int k = 0; k < n; ++k) family.push_back(a.basis(k).coeffs());
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      for (int ck : {1, -1, 2})
        for (int cl : {1, 3}) {
          Vec vsum(n);
          vsum[k] = ck;
          vsum[l] = Scalar(cl, 2);
          family.push_back(std::move(vsum));
        }
  auto check_gens = [&](const std::vector<Vec>& gens) {
    Subspace s = a.subalgebra_span(gens);
    auto r = restrict_to_subspace(a, s);
    return in_variety(r.algebra, v, opts).member;
  };
  if (i == 1) {
    for (const Vec& g : family)
      if (!check_gens({g})) return false;
  } else {
    // pairs from a trimmed family to keep the sweep small
    std::size_t limit = std::min<std::size_t>(family.size(), std::size_t(n) + 6);
    for (std::size_t p = 0; p < limit; ++p)
      for (std::size_t q = p + 1; q < limit; ++q)
        if (!check_gens({family[p], family[q]})) return false;
  }
  return true;
}

}  // namespace zinbiel
