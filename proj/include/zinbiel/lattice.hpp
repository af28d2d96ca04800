#pragma once

// Strict-inclusion certificates for the variety lattice around symmetric
// Zinbiel and symmetric Leibniz algebras. For each edge (smaller, larger)
// the designated witness must lie in the larger variety and outside the
// smaller one.
//
// Node conventions:
//   SZ1 = SL1 is the mono-symmetric system {x^2x = xx^2 = x^2x^2 = 0};
//   SZ2 is the first binary-symmetric defining set, SL2 the second;
//   SL2 meet SZ2 is the alternating-triples system;
//   the associative node is checked as associativity plus the alternating
//   system (equivalently x^2 y = y x^2 = 0: its witness realizes x^2 = 0
//   only modulo the annihilator, so the plain anticommutative law is not
//   the membership test here).

#include <functional>
#include <string>
#include <vector>

#include "zinbiel/catalog.hpp"

namespace zinbiel {

struct LatticeNode {
  std::string label;
  std::function<bool(const SuperAlgebra&)> member;
};

struct LatticeEdge {
  std::string smaller, larger;
  std::string witness;  // catalog entry: in larger, out of smaller
};

struct LatticeCertificate {
  LatticeEdge edge;
  bool witness_in_larger = false;
  bool witness_outside_smaller = false;
  bool certified() const { return witness_in_larger && witness_outside_smaller; }
};

struct LatticeReport {
  std::vector<LatticeCertificate> certificates;
  std::vector<std::string> characterization_failures;  // triples-zero vs SL meet SZ
  bool all_certified() const {
    for (const auto& c : certificates)
      if (!c.certified()) return false;
    return characterization_failures.empty();
  }
};

inline const std::vector<LatticeNode>& lattice_nodes() {
  auto var = [](VarietyName v) {
    return [v](const SuperAlgebra& a) { return in_variety(a, v).member; };
  };
  static const std::vector<LatticeNode> nodes = {
      {"SL&SZ", var(VarietyName::TriplesZero)},
      {"SZ", var(VarietyName::SymmetricZinbiel)},
      {"SL", var(VarietyName::SymmetricLeibniz)},
      {"SZ2", var(VarietyName::BinarySymZinbielA)},
      {"SL2", var(VarietyName::BinarySymZinbielB)},
      {"SL2&SZ2", var(VarietyName::IntersectionSLSZ)},
      {"SZ1=SL1", var(VarietyName::MonoSymZinbiel)},
      {"Ass&Lie1",
       [](const SuperAlgebra& a) {
         return in_variety(a, VarietyName::Associative).member &&
                in_variety(a, VarietyName::IntersectionSLSZ).member;
       }},
  };
  return nodes;
}

inline const std::vector<LatticeEdge>& lattice_edges() {
  static const std::vector<LatticeEdge> edges = {
      {"SL&SZ", "SZ", "LatticeWitness_SZ"},
      {"SL2&SZ2", "SZ2", "LatticeWitness_SZ"},
      {"SL2", "SZ1=SL1", "LatticeWitness_SZ"},
      {"SL&SZ", "SL", "LatticeWitness_SL"},
      {"SL&SZ", "Ass&Lie1", "LatticeWitness_AssLie1"},
      {"Ass&Lie1", "SL2&SZ2", "LatticeWitness_SL2"},
      {"SL", "SL2", "LatticeWitness_SL2"},
      {"SZ", "SZ2", "LatticeWitness_SL2"},
      {"SZ2", "SZ1=SL1", "LatticeWitness_SZ1"},
      {"SL2&SZ2", "SL2", "LatticeWitness_SZ1"},
  };
  return edges;
}

inline const LatticeNode& lattice_node(const std::string& label) {
  for (const LatticeNode& n : lattice_nodes())
    if (n.label == label) return n;
  throw std::runtime_error("unknown lattice node " + label);
}

/// Certifies every strict inclusion of the lattice and re-checks the
/// triples-zero characterization of SL meet SZ on the whole catalog.
inline LatticeReport lattice_report() {
  LatticeReport rpt;
  for (const LatticeEdge& e : lattice_edges()) {
    SuperAlgebra w = catalog_get(e.witness);
    LatticeCertificate cert{e};
    cert.witness_in_larger = lattice_node(e.larger).member(w);
    cert.witness_outside_smaller = !lattice_node(e.smaller).member(w);
    rpt.certificates.push_back(std::move(cert));
  }
  for (const CatalogInstance& inst : catalog_instances()) {
    if (inst.algebra.graded()) continue;
    bool tz = in_variety(inst.algebra, VarietyName::TriplesZero).member;
    bool sl = in_variety(inst.algebra, VarietyName::SymmetricLeibniz).member;
    bool sz = in_variety(inst.algebra, VarietyName::SymmetricZinbiel).member;
    bool sz2 = in_variety(inst.algebra, VarietyName::BinarySymZinbielA).member;
    if (tz != (sl && sz) || tz != (sl && sz2))
      rpt.characterization_failures.push_back(inst.display());
  }
  return rpt;
}

/// The catalog sweep plus the lattice certificates, as one report.
inline VerificationReport verify_all() {
  VerificationReport rpt = verify_catalog_entries();
  LatticeReport lat = lattice_report();
  for (const auto& c : lat.certificates) {
    rpt.lines.push_back({c.edge.witness,
                         "certifies " + c.edge.smaller + " strictly inside " + c.edge.larger,
                         c.certified(),
                         c.witness_in_larger ? (c.witness_outside_smaller ? "" : "witness inside the smaller variety")
                                             : "witness outside the larger variety"});
  }
  rpt.lines.push_back({"lattice", "triples-zero characterization of SL&SZ",
                       lat.characterization_failures.empty(),
                       lat.characterization_failures.empty() ? "" : lat.characterization_failures[0]});
  return rpt;
}

}  // namespace zinbiel
