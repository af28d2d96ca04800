#pragma once

// Z2-graded algebras given by structure constants over exact rationals,
// their element arithmetic, and the line-oriented text file format.
//
// Basis convention: the first n_even basis vectors are even, the rest odd,
// so parity is a function of the index. Products omitted from a file are
// zero. All values are immutable after construction and safe to share
// across threads.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zinbiel/matrix.hpp"

namespace zinbiel {

/// Parity in Z2.
struct Degree {
  int parity = 0;  // 0 or 1
  friend Degree operator+(Degree a, Degree b) { return {(a.parity + b.parity) % 2}; }
  friend bool operator==(Degree a, Degree b) { return a.parity == b.parity; }
  bool odd() const { return parity == 1; }
};
inline constexpr Degree kEven{0};
inline constexpr Degree kOdd{1};

/// Thrown by parse() with a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class GradingError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class SuperAlgebra;

/// An element of a fixed algebra, as a coefficient vector over its basis.
class Element {
 public:
  Element(const SuperAlgebra* alg, Vec coeffs) : alg_(alg), coeffs_(std::move(coeffs)) {}

  const Vec& coeffs() const { return coeffs_; }
  const SuperAlgebra* algebra() const { return alg_; }
  bool is_zero() const { return zinbiel::is_zero(coeffs_); }

  Element operator+(const Element& o) const {
    check_same(o);
    Vec c = coeffs_;
    add_scaled(c, Scalar(1), o.coeffs_);
    return {alg_, std::move(c)};
  }
  Element operator-(const Element& o) const {
    check_same(o);
    Vec c = coeffs_;
    add_scaled(c, Scalar(-1), o.coeffs_);
    return {alg_, std::move(c)};
  }
  Element scaled(const Scalar& f) const {
    Vec c = coeffs_;
    for (auto& x : c) x *= f;
    return {alg_, std::move(c)};
  }
  Element operator*(const Element& o) const;  // bilinear product, defined below

  bool operator==(const Element& o) const { return alg_ == o.alg_ && coeffs_ == o.coeffs_; }

  /// Homogeneous iff the support lies in one grading block; returns its
  /// parity then, nullopt for mixed (or zero -> even by convention).
  std::optional<Degree> homogeneous_degree() const;

  std::string str() const;

 private:
  void check_same(const Element& o) const {
    if (alg_ != o.alg_) throw std::runtime_error("elements belong to different algebras");
  }
  const SuperAlgebra* alg_;
  Vec coeffs_;
};

class SuperAlgebra {
 public:
  SuperAlgebra(int n_even, int n_odd, std::vector<std::string> labels = {})
      : n_even_(n_even), n_odd_(n_odd), labels_(std::move(labels)) {
    int n = dim();
    if (labels_.empty())
      for (int i = 0; i < n; ++i) labels_.push_back("e" + std::to_string(i + 1));
    if (int(labels_.size()) != n) throw std::runtime_error("label count mismatch");
    products_.assign(std::size_t(n) * n, Vec(n));
  }

  int n_even() const { return n_even_; }
  int n_odd() const { return n_odd_; }
  int dim() const { return n_even_ + n_odd_; }
  bool graded() const { return n_odd_ > 0; }
  Degree parity(int i) const { return i < n_even_ ? kEven : kOdd; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Scalar& c(int i, int j, int k) const { return products_[std::size_t(i) * dim() + j][k]; }
  /// Coefficient vector of e_i * e_j.
  const Vec& product_of_basis(int i, int j) const { return products_[std::size_t(i) * dim() + j]; }

  /// Sets e_i * e_j = v (construction-time only; callers keep values frozen
  /// after validate_grading()).
  void set_product(int i, int j, Vec v) {
    if (int(v.size()) != dim()) throw std::runtime_error("product vector length mismatch");
    products_[std::size_t(i) * dim() + j] = std::move(v);
  }
  void set_c(int i, int j, int k, const Scalar& value) { products_[std::size_t(i) * dim() + j][k] = value; }

  /// Checks c[i][j][k] = 0 unless deg(k) = deg(i)+deg(j).
  void validate_grading() const {
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j)
        for (int k = 0; k < dim(); ++k)
          if (!c(i, j, k).is_zero() && !(parity(i) + parity(j) == parity(k)))
            throw GradingError("product " + labels_[i] + "*" + labels_[j] + " has a component on " +
                               labels_[k] + " in the wrong parity block");
  }

  Element zero() const { return Element(this, Vec(dim())); }
  Element basis(int i) const {
    Vec v(dim());
    v[i] = 1;
    return Element(this, std::move(v));
  }
  Element element(Vec coeffs) const {
    if (int(coeffs.size()) != dim()) throw std::runtime_error("coefficient length mismatch");
    return Element(this, std::move(coeffs));
  }

  Vec multiply_vec(const Vec& x, const Vec& y) const {
    Vec out(dim());
    for (int i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim(); ++j) {
        if (y[j].is_zero()) continue;
        Scalar f = x[i] * y[j];
        add_scaled(out, f, product_of_basis(i, j));
      }
    }
    return out;
  }

  /// Super-opposite algebra: x o y = (-1)^{|x||y|} y x (plain swap when ungraded).
  SuperAlgebra opposite() const {
    SuperAlgebra op(n_even_, n_odd_, labels_);
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) {
        Vec v = product_of_basis(j, i);
        if (parity(i).odd() && parity(j).odd())
          for (auto& s : v) s = -s;
        op.set_product(i, j, std::move(v));
      }
    return op;
  }

  /// Span closure of a generating set under multiplication; stabilizes in
  /// at most dim() iterations.
  Subspace subalgebra_span(const std::vector<Vec>& generators, int* iterations = nullptr) const {
    Subspace s = Subspace::span(dim(), generators);
    int iter = 0;
    for (;;) {
      ++iter;
      std::vector<Vec> next;
      for (int i = 0; i < s.dim(); ++i) next.push_back(s.basis_vector(i));
      for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j) next.push_back(multiply_vec(s.basis_vector(i), s.basis_vector(j)));
      Subspace grown = Subspace::span(dim(), next);
      if (grown.dim() == s.dim()) break;
      s = grown;
    }
    if (iterations) *iterations = iter;
    return s;
  }

  bool same_table(const SuperAlgebra& o) const {
    return n_even_ == o.n_even_ && n_odd_ == o.n_odd_ && products_ == o.products_;
  }

 private:
  int n_even_, n_odd_;
  std::vector<std::string> labels_;
  std::vector<Vec> products_;  // row (i,j) = coefficients of e_i e_j
};

inline Element Element::operator*(const Element& o) const {
  check_same(o);
  return Element(alg_, alg_->multiply_vec(coeffs_, o.coeffs_));
}

inline std::optional<Degree> Element::homogeneous_degree() const {
  bool even = false, odd = false;
  for (int i = 0; i < alg_->dim(); ++i)
    if (!coeffs_[i].is_zero()) (alg_->parity(i).odd() ? odd : even) = true;
  if (even && odd) return std::nullopt;
  return odd ? kOdd : kEven;
}

inline std::string Element::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < alg_->dim(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    if (coeffs_[i] != 1) os << to_string(coeffs_[i]) << " ";
    os << alg_->label(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

/// A SuperAlgebra restricted to an invariant subspace, with the change of
/// coordinates kept for mapping elements back and forth.
struct RestrictedAlgebra {
  SuperAlgebra algebra;
  Matrix embedding;  // columns = sub-basis vectors in ambient coordinates
};

/// Expresses the algebra induced on a multiplicatively closed subspace in the
/// subspace's own basis (even vectors first). Throws if not closed or if the
/// subspace has no homogeneous basis.
inline RestrictedAlgebra restrict_to_subspace(const SuperAlgebra& a, const Subspace& s) {
  std::vector<Vec> even_rows, odd_rows;
  for (int i = 0; i < s.dim(); ++i) {
    Vec v = s.basis_vector(i);
    Vec ev(v.size()), od(v.size());
    for (int k = 0; k < a.dim(); ++k) (a.parity(k).odd() ? od : ev)[k] = v[k];
    // RREF basis vectors of a graded subspace need not be homogeneous,
    // so split per parity and re-span.
    if (!is_zero(ev)) even_rows.push_back(ev);
    if (!is_zero(od)) odd_rows.push_back(od);
  }
  Subspace even_part = Subspace::span(a.dim(), even_rows);
  Subspace odd_part = Subspace::span(a.dim(), odd_rows);
  if (even_part.dim() + odd_part.dim() != s.dim())
    throw GradingError("subspace is not graded");
  std::vector<Vec> basis;
  for (int i = 0; i < even_part.dim(); ++i) basis.push_back(even_part.basis_vector(i));
  for (int i = 0; i < odd_part.dim(); ++i) basis.push_back(odd_part.basis_vector(i));

  Matrix emb(a.dim(), int(basis.size()));
  for (int j = 0; j < int(basis.size()); ++j)
    for (int i = 0; i < a.dim(); ++i) emb(i, j) = basis[j][i];

  SuperAlgebra sub(even_part.dim(), odd_part.dim());
  for (int i = 0; i < int(basis.size()); ++i)
    for (int j = 0; j < int(basis.size()); ++j) {
      Vec prod = a.multiply_vec(basis[i], basis[j]);
      auto coords = solve(emb, prod);
      if (!coords) throw std::runtime_error("subspace is not multiplicatively closed");
      sub.set_product(i, j, *coords);
    }
  sub.validate_grading();
  return {std::move(sub), std::move(emb)};
}

// ---------------------------------------------------------------------------
// File format
//
//   dim <n_even> <n_odd>
//   basis <name1> <name2> ...                  (optional; defaults e1..eN)
//   <name>*<name> = <coeff> <name> [ + ... ]   (coeff "p" or "p/q"; 1 omissible)
//   form <name>,<name> = <coeff>               (optional gram entries;
//                                               supersymmetric completion)
//   # comment to end of line
// ---------------------------------------------------------------------------

struct AlgebraFile {
  SuperAlgebra algebra;
  std::optional<Matrix> gram;  // present iff the file has a form block
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

inline int find_label(const std::vector<std::string>& labels, const std::string& name, int line) {
  for (int i = 0; i < int(labels.size()); ++i)
    if (labels[i] == name) return i;
  throw ParseError(line, "unknown basis name '" + name + "'");
}

// Parses "<coeff> <name>" terms joined by '+'.
inline Vec parse_combination(const std::string& rhs, const std::vector<std::string>& labels, int line) {
  Vec out(labels.size());
  std::string chunk;
  std::vector<std::string> parts;
  std::istringstream is(rhs);
  std::string tok;
  std::string current;
  while (is >> tok) {
    if (tok == "+") {
      parts.push_back(current);
      current.clear();
    } else {
      if (!current.empty()) current += " ";
      current += tok;
    }
  }
  parts.push_back(current);
  for (const std::string& part : parts) {
    auto ts = tokens(part);
    if (ts.empty()) throw ParseError(line, "empty term");
    if (ts.size() == 1 && ts[0] == "0") continue;
    Scalar coeff(1);
    std::string name;
    if (ts.size() == 1) {
      name = ts[0];
    } else if (ts.size() == 2) {
      try {
        coeff = parse_rational(ts[0]);
      } catch (const std::exception& e) {
        throw ParseError(line, e.what());
      }
      name = ts[1];
    } else {
      throw ParseError(line, "malformed term '" + part + "'");
    }
    out[find_label(labels, name, line)] += coeff;
  }
  return out;
}

}  // namespace detail

inline AlgebraFile parse(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::optional<SuperAlgebra> alg;
  std::optional<Matrix> gram;
  std::map<std::pair<int, int>, int> seen_products;  // -> line introduced
  std::map<std::pair<int, int>, int> seen_form;
  std::vector<std::string> pending_basis;
  int n_even = -1, n_odd = -1;
  bool basis_line_seen = false;

  auto ensure_alg = [&]() -> SuperAlgebra& {
    if (!alg) {
      if (n_even < 0) throw ParseError(lineno, "missing 'dim' header");
      std::vector<std::string> labels = pending_basis;
      alg.emplace(n_even, n_odd, labels);
    }
    return *alg;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    auto ts = detail::tokens(line);
    if (ts.empty()) continue;

    if (ts[0] == "dim") {
      if (n_even >= 0) throw ParseError(lineno, "duplicate 'dim' line");
      if (ts.size() != 3) throw ParseError(lineno, "expected 'dim <n_even> <n_odd>'");
      try {
        n_even = std::stoi(ts[1]);
        n_odd = std::stoi(ts[2]);
      } catch (const std::exception&) {
        throw ParseError(lineno, "malformed dimensions");
      }
      if (n_even < 0 || n_odd < 0) throw ParseError(lineno, "negative dimension");
      continue;
    }
    if (ts[0] == "basis") {
      if (n_even < 0) throw ParseError(lineno, "'basis' before 'dim'");
      if (basis_line_seen || alg) throw ParseError(lineno, "'basis' line out of place");
      if (int(ts.size()) - 1 != n_even + n_odd) throw ParseError(lineno, "basis name count mismatch");
      pending_basis.assign(ts.begin() + 1, ts.end());
      basis_line_seen = true;
      continue;
    }
    if (ts[0] == "form") {
      SuperAlgebra& a = ensure_alg();
      auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError(lineno, "form line missing '='");
      std::string lhs = line.substr(0, eq);
      auto lt = detail::tokens(lhs);  // "form" "<name>,<name>" possibly split
      std::string pair;
      for (std::size_t i = 1; i < lt.size(); ++i) pair += lt[i];
      auto comma = pair.find(',');
      if (comma == std::string::npos) throw ParseError(lineno, "form line needs '<name>,<name>'");
      int i = detail::find_label(a.labels(), pair.substr(0, comma), lineno);
      int j = detail::find_label(a.labels(), pair.substr(comma + 1), lineno);
      Scalar v;
      try {
        v = parse_rational(detail::tokens(line.substr(eq + 1)).at(0));
      } catch (const std::exception& e) {
        throw ParseError(lineno, std::string("bad form coefficient: ") + e.what());
      }
      if (!gram) gram.emplace(a.dim(), a.dim());
      if (seen_form.count({i, j}))
        throw ParseError(lineno, "duplicate form entry (first at line " +
                                     std::to_string(seen_form[{i, j}]) + ")");
      seen_form[{i, j}] = lineno;
      (*gram)(i, j) = v;
      if (i != j && !seen_form.count({j, i})) {
        // supersymmetric completion: B(y,x) = (-1)^{|x||y|} B(x,y)
        Scalar sym = (a.parity(i).odd() && a.parity(j).odd()) ? -v : v;
        (*gram)(j, i) = sym;
        seen_form[{j, i}] = lineno;
      }
      continue;
    }

    // product line: <name>*<name> = rhs
    auto eq = line.find('=');
    auto star = line.find('*');
    if (eq == std::string::npos || star == std::string::npos || star > eq)
      throw ParseError(lineno, "expected '<name>*<name> = ...'");
    SuperAlgebra& a = ensure_alg();
    auto lts0 = detail::tokens(line.substr(0, star));
    auto lts1 = detail::tokens(line.substr(star + 1, eq - star - 1));
    if (lts0.size() != 1 || lts1.size() != 1) throw ParseError(lineno, "malformed product left side");
    int i = detail::find_label(a.labels(), lts0[0], lineno);
    int j = detail::find_label(a.labels(), lts1[0], lineno);
    if (seen_products.count({i, j}))
      throw ParseError(lineno, "duplicate product line for " + lts0[0] + "*" + lts1[0] +
                                   " (first at line " + std::to_string(seen_products[{i, j}]) + ")");
    seen_products[{i, j}] = lineno;
    Vec rhs = detail::parse_combination(line.substr(eq + 1), a.labels(), lineno);
    Degree want = a.parity(i) + a.parity(j);
    for (int k = 0; k < a.dim(); ++k)
      if (!rhs[k].is_zero() && !(a.parity(k) == want))
        throw ParseError(lineno, "grading violation: " + lts0[0] + "*" + lts1[0] +
                                     " cannot have a component on " + a.label(k));
    a.set_product(i, j, std::move(rhs));
  }
  if (n_even < 0) throw ParseError(lineno, "missing 'dim' header");
  SuperAlgebra& a = ensure_alg();
  a.validate_grading();
  return {std::move(a), std::move(gram)};
}

/// Canonical text: rationals in lowest terms with positive denominator,
/// only nonzero products listed, coefficient 1 omitted.
inline std::string serialize(const SuperAlgebra& a, const std::optional<Matrix>& gram = std::nullopt) {
  std::ostringstream os;
  os << "dim " << a.n_even() << " " << a.n_odd() << "\n";
  bool default_labels = true;
  for (int i = 0; i < a.dim(); ++i)
    if (a.label(i) != "e" + std::to_string(i + 1)) default_labels = false;
  if (!default_labels) {
    os << "basis";
    for (int i = 0; i < a.dim(); ++i) os << " " << a.label(i);
    os << "\n";
  }
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const Vec& p = a.product_of_basis(i, j);
      if (is_zero(p)) continue;
      os << a.label(i) << "*" << a.label(j) << " = ";
      bool first = true;
      for (int k = 0; k < a.dim(); ++k) {
        if (p[k].is_zero()) continue;
        if (!first) os << " + ";
        if (p[k] != 1) os << to_string(p[k]) << " ";
        os << a.label(k);
        first = false;
      }
      os << "\n";
    }
  if (gram) {
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) {
        if ((*gram)(i, j).is_zero()) continue;
        // emit upper triangle; mirror entries are implied by supersymmetry
        bool mirror_implied = j < i && (*gram)(i, j) == ((a.parity(i).odd() && a.parity(j).odd())
                                                             ? -(*gram)(j, i)
                                                             : (*gram)(j, i));
        if (mirror_implied) continue;
        os << "form " << a.label(i) << "," << a.label(j) << " = " << to_string((*gram)(i, j)) << "\n";
      }
  }
  return os.str();
}

}  // namespace zinbiel
