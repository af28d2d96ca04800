#pragma once

// Machine-readable library of the small symmetric Zinbiel (super)algebra
// tables: the two-generated 2-step families N3*..N6*, the three-step
// algebras Z6*..Z8*, both one-generated algebras, and the variety-lattice
// witnesses. Entries carry their claimed properties; verify_catalog_entries
// re-derives every claim with the identity and structure machinery.

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zinbiel/representations.hpp"
#include "zinbiel/structure.hpp"

namespace zinbiel {

struct CatalogEntry {
  std::string name;
  bool parametrized = false;
  // file-format text; "LAMBDA" is substituted for parametrized families
  std::string table;
  std::string claimed_step;   // "2-step", "3-step", "other"
  int claimed_generators = -1;  // -1: unclaimed
  std::vector<std::pair<VarietyName, bool>> claimed_memberships;
  std::string role;  // "two-generated", "three-step", "one-generated", "lattice-witness"

  SuperAlgebra build(const std::optional<Scalar>& lambda = std::nullopt) const {
    std::string text = table;
    if (parametrized) {
      if (!lambda) throw std::runtime_error("catalog entry '" + name + "' needs a lambda parameter");
      std::string l = to_string(*lambda);
      for (std::size_t pos; (pos = text.find("LAMBDA")) != std::string::npos;)
        text.replace(pos, 6, l);
    } else if (lambda) {
      throw std::runtime_error("catalog entry '" + name + "' takes no parameter");
    }
    return parse(text).algebra;
  }
  bool claims(VarietyName v, bool value) const {
    for (auto& [name_, val] : claimed_memberships)
      if (name_ == v) return val == value;
    return false;
  }
};

inline const std::vector<Scalar>& lambda_samples() {
  static const std::vector<Scalar> s = {Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(1, 2)};
  return s;
}

namespace detail {

inline std::vector<std::pair<VarietyName, bool>> zinbiel_claims(bool two_step) {
  std::vector<std::pair<VarietyName, bool>> m = {
      {VarietyName::SymmetricZinbiel, true},
      {VarietyName::BinarySymZinbielA, true},
      {VarietyName::MonoSymZinbiel, true},
      {VarietyName::LR, true},
      {VarietyName::AntiFlexible, true},
      {VarietyName::BinarySymZinbielB, two_step},   // the two defining sets split on 3-step algebras
      {VarietyName::TriplesZero, two_step},
      {VarietyName::SymmetricLeibniz, two_step},
  };
  return m;
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  auto two_gen = [&](std::string name, int dim, bool param, std::string products) {
    cat.push_back({std::move(name), param, "dim " + std::to_string(dim) + " 0\n" + products,
                   "2-step", 2, zinbiel_claims(true), "two-generated"});
  };
  two_gen("N3_1", 3, false, "e1*e1 = e2\n");
  two_gen("N3_2", 3, false, "e1*e1 = e3\ne2*e2 = e3\n");
  two_gen("N3_3", 3, false, "e1*e2 = e3\ne2*e1 = -1 e3\n");
  two_gen("N3_4", 3, true, "e1*e1 = LAMBDA e3\ne2*e1 = e3\ne2*e2 = e3\n");
  two_gen("N4_1", 4, false, "e1*e2 = e3\ne2*e1 = e4\n");
  two_gen("N4_2", 4, false, "e1*e1 = e3\ne2*e1 = e4\n");
  two_gen("N4_3", 4, false, "e1*e1 = e3\ne2*e2 = e4\n");
  two_gen("N4_4", 4, false, "e1*e1 = e3\ne1*e2 = e3\ne2*e1 = e4\ne2*e2 = e3\n");
  two_gen("N4_5", 4, true, "e1*e1 = e3\ne2*e1 = e4\ne2*e2 = e3 + LAMBDA e4\n");
  two_gen("N4_6", 4, true, "e1*e1 = e3\ne1*e2 = e4\ne2*e1 = LAMBDA e4\n");
  two_gen("N5_1", 5, false, "e1*e2 = e3\ne2*e1 = e4\ne2*e2 = e5\n");
  two_gen("N5_2", 5, false, "e1*e1 = e5\ne1*e2 = e3\ne2*e1 = e4\ne2*e2 = e5\n");
  two_gen("N5_3", 5, false, "e1*e1 = e3\ne1*e2 = e4\ne2*e1 = e4\ne2*e2 = e5\n");
  two_gen("N5_4", 5, true, "e1*e1 = e3 + LAMBDA e5\ne1*e2 = e3\ne2*e1 = e4\ne2*e2 = e5\n");
  two_gen("N6_1", 6, false, "e1*e1 = e3\ne1*e2 = e4\ne2*e1 = e5\ne2*e2 = e6\n");

  const std::string z61_core =
      "e1*e2 = e3\ne2*e1 = e4\ne1*e5 = e6\ne5*e1 = -1 e6\ne2*e4 = -2 e6\n"
      "e4*e2 = -1 e6\ne2*e3 = e6\ne3*e2 = 2 e6\n";
  auto three_step = [&](std::string name, int dim, std::string products) {
    cat.push_back({std::move(name), false, "dim " + std::to_string(dim) + " 0\n" + products,
                   "3-step", 2, zinbiel_claims(false), "three-step"});
  };
  three_step("Z6_1", 6, "e2*e2 = e5\n" + z61_core);
  three_step("Z6_2", 6, "e2*e2 = e5 + e6\n" + z61_core);
  three_step("Z6_2_proof_variant", 6, "e1*e1 = e6\ne2*e2 = e5\n" + z61_core);
  three_step("Z7_1", 7, "e1*e1 = e7\ne2*e2 = e5\n" + z61_core);
  three_step("Z8_1", 8,
             "e1*e1 = e3\ne1*e2 = e4\ne1*e4 = 2 e7\ne1*e5 = -1 e7\ne1*e6 = e8\n"
             "e2*e1 = e5\ne2*e2 = e6\ne2*e3 = -1 e7\ne2*e4 = e8\ne2*e5 = -2 e8\n"
             "e3*e2 = e7\ne4*e1 = e7\ne4*e2 = 2 e8\ne5*e1 = -2 e7\ne5*e2 = -1 e8\ne6*e1 = -1 e8\n");

  cat.push_back({"OneGen_2_0", false, "dim 2 0\ne1*e1 = e2\n", "2-step", 1,
                 zinbiel_claims(true), "one-generated"});
  cat.push_back({"OneGen_1_1", false, "dim 1 1\ne2*e2 = e1\n", "2-step", 1,
                 {{VarietyName::SymmetricZinbiel, true}, {VarietyName::TriplesZero, true}},
                 "one-generated"});

  // Lattice witnesses. The first shares the Z6_1 table; the third is the
  // non-unital Grassmann algebra on three generators; the fourth is the same
  // with the composite-times-generator products removed.
  cat.push_back({"LatticeWitness_SZ", false, "dim 6 0\ne2*e2 = e5\n" + z61_core, "3-step", 2,
                 {{VarietyName::SymmetricZinbiel, true},
                  {VarietyName::BinarySymZinbielA, true},
                  {VarietyName::MonoSymZinbiel, true},
                  {VarietyName::TriplesZero, false},
                  {VarietyName::IntersectionSLSZ, false},
                  {VarietyName::BinarySymZinbielB, false},
                  {VarietyName::SymmetricLeibniz, false}},
                 "lattice-witness"});
  cat.push_back({"LatticeWitness_SL", false,
                 "dim 4 0\ne1*e2 = e3\ne2*e1 = -1 e3\ne2*e3 = e4\ne3*e2 = -1 e4\n", "3-step", 2,
                 {{VarietyName::SymmetricLeibniz, true},
                  {VarietyName::SymmetricZinbiel, false},
                  {VarietyName::TriplesZero, false}},
                 "lattice-witness"});
  cat.push_back({"LatticeWitness_AssLie1", false,
                 "dim 7 0\n"
                 "e1*e2 = e4\ne1*e3 = e5\ne1*e6 = e7\ne2*e1 = -1 e4\ne2*e3 = e6\ne2*e5 = -1 e7\n"
                 "e3*e1 = -1 e5\ne3*e2 = -1 e6\ne3*e4 = e7\ne4*e3 = e7\ne5*e2 = -1 e7\ne6*e1 = e7\n",
                 "3-step", 3,
                 {{VarietyName::Associative, true},
                  {VarietyName::IntersectionSLSZ, true},
                  {VarietyName::MonoSymZinbiel, true},
                  {VarietyName::Lie1, false},
                  {VarietyName::TriplesZero, false}},
                 "lattice-witness"});
  cat.push_back({"LatticeWitness_SL2", false,
                 "dim 7 0\n"
                 "e1*e2 = e4\ne1*e3 = e5\ne1*e6 = e7\ne2*e1 = -1 e4\ne2*e3 = e6\ne2*e5 = -1 e7\n"
                 "e3*e1 = -1 e5\ne3*e2 = -1 e6\ne3*e4 = e7\n",
                 "3-step", 3,
                 {{VarietyName::IntersectionSLSZ, true},
                  {VarietyName::BinarySymZinbielB, true},
                  {VarietyName::BinarySymZinbielA, true},
                  {VarietyName::SymmetricLeibniz, false},
                  {VarietyName::SymmetricZinbiel, false},
                  {VarietyName::Associative, false}},
                 "lattice-witness"});
  cat.push_back({"LatticeWitness_SZ1", false, "dim 2 0\ne1*e2 = e2\ne2*e1 = -1 e2\n", "other", -1,
                 {{VarietyName::MonoSymZinbiel, true},
                  {VarietyName::BinarySymZinbielB, true},
                  {VarietyName::BinarySymZinbielA, false},
                  {VarietyName::IntersectionSLSZ, false}},
                 "lattice-witness"});
  return cat;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = detail::build_catalog();
  return cat;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e;
  throw std::runtime_error("unknown catalog entry '" + name + "'");
}

inline SuperAlgebra catalog_get(const std::string& name, const std::optional<Scalar>& lambda = std::nullopt) {
  return catalog_entry(name).build(lambda);
}

/// Every concrete instance of an entry: one per lambda sample for
/// parametrized families, a single build otherwise.
struct CatalogInstance {
  const CatalogEntry* entry;
  std::optional<Scalar> lambda;
  SuperAlgebra algebra;
  std::string display() const {
    return entry->name + (lambda ? "(" + to_string(*lambda) + ")" : "");
  }
};

inline std::vector<CatalogInstance> catalog_instances() {
  std::vector<CatalogInstance> out;
  for (const CatalogEntry& e : catalog()) {
    if (e.parametrized) {
      for (const Scalar& l : lambda_samples()) out.push_back({&e, l, e.build(l)});
    } else {
      out.push_back({&e, std::nullopt, e.build()});
    }
  }
  return out;
}

/// Cocycle data reconstructing each three-step catalog algebra as a central
/// extension of its two-generated core. Entries are (row, col, value) on the
/// core's basis, one matrix per appended central line.
struct ReconstructionRecipe {
  std::string core, result;
  std::vector<std::vector<std::tuple<int, int, int>>> cocycles;  // 1-indexed (i, j, value)
};

inline const std::vector<ReconstructionRecipe>& central_extension_recipes() {
  using Entries = std::vector<std::tuple<int, int, int>>;
  static const Entries z6_core = {{1, 5, 1}, {5, 1, -1}, {2, 4, -2}, {4, 2, -1}, {2, 3, 1}, {3, 2, 2}};
  auto with = [](Entries base, std::tuple<int, int, int> extra) {
    base.push_back(extra);
    return base;
  };
  static const std::vector<ReconstructionRecipe> recipes = {
      {"N5_1", "Z6_1", {z6_core}},
      {"N5_1", "Z6_2", {with(z6_core, {2, 2, 1})}},
      {"N5_1", "Z6_2_proof_variant", {with(z6_core, {1, 1, 1})}},
      {"N5_1", "Z7_1", {z6_core, Entries{{1, 1, 1}}}},
      {"N6_1", "Z8_1",
       {Entries{{1, 4, 2}, {1, 5, -1}, {2, 3, -1}, {3, 2, 1}, {4, 1, 1}, {5, 1, -2}},
        Entries{{1, 6, 1}, {2, 4, 1}, {2, 5, -2}, {4, 2, 2}, {5, 2, -1}, {6, 1, -1}}}},
  };
  return recipes;
}

inline Matrix recipe_cocycle_matrix(int dim, const std::vector<std::tuple<int, int, int>>& entries) {
  Matrix m(dim, dim);
  for (auto [i, j, v] : entries) m(i - 1, j - 1) = Scalar(v);
  return m;
}

struct VerificationLine {
  std::string instance, check;
  bool pass;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationLine> lines;
  std::vector<std::string> variety_set_disagreements;  // instances where the
  // two binary-symmetric-Zinbiel defining sets give different verdicts
  bool all_passed() const {
    for (auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
  int failures() const {
    int f = 0;
    for (auto& l : lines)
      if (!l.pass) ++f;
    return f;
  }
};

/// Re-derives every claimed property of every catalog instance: variety
/// memberships, step class, generator count, the x^3 = 0 and dimension-bound
/// corollaries, and the coadjoint representation criterion.
inline VerificationReport verify_catalog_entries() {
  VerificationReport rpt;
  auto add = [&](const std::string& inst, const std::string& check, bool pass, std::string detail = "") {
    rpt.lines.push_back({inst, check, pass, std::move(detail)});
  };
  for (const CatalogInstance& inst : catalog_instances()) {
    const SuperAlgebra& a = inst.algebra;
    std::string nm = inst.display();
    for (auto& [variety, expected] : inst.entry->claimed_memberships) {
      if (a.graded() && !variety_definition(variety).graded_capable) continue;
      auto res = in_variety(a, variety);
      add(nm, variety_string(variety) + (expected ? " holds" : " fails"), res.member == expected,
          res.certificate ? res.certificate->describe(a) : "");
    }
    NilReport nil = nil_report(a);
    add(nm, "step class " + inst.entry->claimed_step, nil.step_class == inst.entry->claimed_step,
        "got " + nil.step_class);
    if (inst.entry->claimed_generators >= 0) {
      int d = generator_count(a);
      add(nm, "generator count " + std::to_string(inst.entry->claimed_generators),
          d == inst.entry->claimed_generators, "got " + std::to_string(d));
    }
    bool is_sz = inst.entry->claims(VarietyName::SymmetricZinbiel, true);
    if (is_sz) {
      add(nm, "nil index <= 4", nil.nilpotent() && *nil.nil_index <= 4);
      add(nm, "cube zero", cube_zero(a));
      add(nm, "dimension bound", dim_bound_check(a));
      bool corep = coadjoint_is_representation(a);
      bool two_step = nil.nilpotent() && *nil.nil_index <= 3;
      add(nm, "coadjoint representation iff 2-step", corep == two_step,
          std::string("coadjoint ") + (corep ? "is" : "is not") + " a representation");
      add(nm, "adjoint is a representation", is_representation(a, adjoint_pair(a)));
    }
    if (!a.graded()) {
      bool in_a = in_variety(a, VarietyName::BinarySymZinbielA).member;
      bool in_b = in_variety(a, VarietyName::BinarySymZinbielB).member;
      if (in_a != in_b)
        rpt.variety_set_disagreements.push_back(nm + ": first defining set " +
                                                (in_a ? "holds" : "fails") +
                                                ", second " + (in_b ? "holds" : "fails"));
    }
  }
  // coverage against the manifest
  int two_gen = 0, three_step = 0, one_gen = 0, witnesses = 0;
  for (const CatalogEntry& e : catalog()) {
    if (e.role == "two-generated") ++two_gen;
    if (e.role == "three-step" && e.name != "Z6_2_proof_variant") ++three_step;
    if (e.role == "one-generated") ++one_gen;
    if (e.role == "lattice-witness") ++witnesses;
  }
  add("catalog", "manifest coverage 15+4+2+5",
      two_gen == 15 && three_step == 4 && one_gen == 2 && witnesses == 5,
      std::to_string(two_gen) + "+" + std::to_string(three_step) + "+" + std::to_string(one_gen) +
          "+" + std::to_string(witnesses));
  return rpt;
}

}  // namespace zinbiel
