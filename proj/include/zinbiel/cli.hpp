#pragma once

// Command-line front door: load algebra files, run variety and structure
// checks, build extensions, and emit deterministic human- or machine-
// readable reports.
//
// Exit codes: 0 all requested checks pass; 1 a check failed; 2 usage or
// parse errors; 3 computed data contradicts a structural invariant.

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "zinbiel/envelope.hpp"
#include "zinbiel/extensions.hpp"
#include "zinbiel/lattice.hpp"

namespace zinbiel::cli {

struct CheckLine {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::vector<std::string> argv;
  std::vector<CheckLine> checks;
  nlohmann::json data = nlohmann::json::object();
  std::string payload;  // algebra-file text emitted raw in text mode
  int exit_code = 0;
  bool json_output = false;

  void check(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
    if (!pass && exit_code == 0) exit_code = 1;
  }
  void note(std::string name, std::string detail) { checks.push_back({std::move(name), true, std::move(detail)}); }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = argv;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json line;
      line["name"] = c.name;
      line["pass"] = c.pass;
      if (!c.detail.empty()) line["detail"] = c.detail;
      j["checks"].push_back(line);
    }
    j["data"] = data;
    j["exit_code"] = exit_code;
    return j;
  }
  std::string text() const {
    std::ostringstream os;
    for (const auto& c : checks)
      os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
         << "\n";
    if (!data.empty()) os << data.dump(2) << "\n";
    os << "exit " << exit_code << "\n";
    return os.str();
  }
  std::string render() const {
    if (json_output) return to_json().dump(2) + "\n";
    if (!payload.empty() && exit_code == 0) return payload;
    return text();
  }
};

namespace detail {

inline AlgebraFile load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

inline std::vector<std::pair<Matrix, Degree>> load_cocycles(const std::string& path,
                                                            const SuperAlgebra& a) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::vector<std::pair<Matrix, Degree>> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream is(line);
    std::string head;
    if (!(is >> head)) continue;
    if (head == "cocycle") {
      std::string par;
      is >> par;
      if (par != "even" && par != "odd") throw ParseError(lineno, "expected 'cocycle even|odd'");
      out.push_back({Matrix(a.dim(), a.dim()), par == "odd" ? kOdd : kEven});
      continue;
    }
    if (out.empty()) throw ParseError(lineno, "entry before any 'cocycle' header");
    auto comma = head.find(',');
    if (comma == std::string::npos) throw ParseError(lineno, "expected '<name>,<name> = coeff'");
    std::string eq, coeff;
    if (!(is >> eq >> coeff) || eq != "=") throw ParseError(lineno, "expected '= <coeff>'");
    int i = -1, j = -1;
    for (int k = 0; k < a.dim(); ++k) {
      if (a.label(k) == head.substr(0, comma)) i = k;
      if (a.label(k) == head.substr(comma + 1)) j = k;
    }
    if (i < 0 || j < 0) throw ParseError(lineno, "unknown basis name");
    try {
      out.back().first(i, j) = parse_rational(coeff);
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return out;
}

struct ExtensionData {
  Matrix delta, D;
  Vec a0;
  Scalar alpha = 0;
  bool has_D = false;
};

inline ExtensionData load_extension_data(const std::string& path, const SuperAlgebra& a) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  ExtensionData d{Matrix(a.dim(), a.dim()), Matrix(a.dim(), a.dim()), Vec(a.dim())};
  std::string raw;
  int lineno = 0;
  auto label_index = [&](const std::string& name, int line) {
    for (int k = 0; k < a.dim(); ++k)
      if (a.label(k) == name) return k;
    throw ParseError(line, "unknown basis name '" + name + "'");
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream is(line);
    std::string head;
    if (!(is >> head)) continue;
    if (head == "alpha") {
      std::string eq, value;
      if (!(is >> eq >> value) || eq != "=") throw ParseError(lineno, "expected 'alpha = <coeff>'");
      d.alpha = parse_rational(value);
      continue;
    }
    if (head == "a0") {
      std::string eq;
      if (!(is >> eq) || eq != "=") throw ParseError(lineno, "expected 'a0 = ...'");
      std::string rest;
      std::getline(is, rest);
      d.a0 = zinbiel::detail::parse_combination(rest.empty() ? "0" : rest, a.labels(), lineno);
      continue;
    }
    if (head == "delta" || head == "D") {
      if (head == "D") d.has_D = true;
      std::string arg, eq;
      if (!(is >> arg >> eq) || eq != "=") throw ParseError(lineno, "expected '" + head + " <name> = ...'");
      int col = label_index(arg, lineno);
      std::string rest;
      std::getline(is, rest);
      Vec img = zinbiel::detail::parse_combination(rest.empty() ? "0" : rest, a.labels(), lineno);
      Matrix& m = head == "delta" ? d.delta : d.D;
      for (int r = 0; r < a.dim(); ++r) m(r, col) = img[r];
      continue;
    }
    throw ParseError(lineno, "unknown directive '" + head + "'");
  }
  return d;
}

inline nlohmann::json subspace_json(const SuperAlgebra& a, const Subspace& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < s.dim(); ++i) arr.push_back(a.element(s.basis_vector(i)).str());
  return arr;
}

}  // namespace detail

inline Report run(std::vector<std::string> args) {
  Report rpt;
  rpt.argv = args;

  CLI::App app{"exact-arithmetic toolkit for Zinbiel/Leibniz structure-constant (super)algebras"};
  app.require_subcommand(0, 1);
  bool json_flag = false;
  app.add_flag("--json", json_flag, "machine-readable report");

  std::string file, variety_name, cocycle_file, data_file, show_name, lambda_text;
  bool even_flag = false, odd_flag = false, adjoint_flag = false, coadjoint_flag = false;
  int grassmann_rank = 3;

  auto* check_cmd = app.add_subcommand("check", "variety membership of an algebra file");
  check_cmd->add_option("file", file)->required();
  check_cmd->add_option("--variety", variety_name)->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "nilpotency, annihilator, generators, bound");
  analyze_cmd->add_option("file", file)->required();

  auto* rep_cmd = app.add_subcommand("rep-check", "representation axioms for the adjoint or coadjoint pair");
  rep_cmd->add_option("file", file)->required();
  rep_cmd->add_flag("--adjoint", adjoint_flag);
  rep_cmd->add_flag("--coadjoint", coadjoint_flag);

  auto* extend_cmd = app.add_subcommand("extend", "build central extensions");
  auto* central_cmd = extend_cmd->add_subcommand("central", "central extension or cocycle-space dims");
  central_cmd->add_option("file", file)->required();
  central_cmd->add_option("--cocycles", cocycle_file);

  auto* double_cmd = app.add_subcommand("double-extend", "even or odd double extension");
  double_cmd->add_option("file", file)->required();
  double_cmd->add_flag("--even", even_flag);
  double_cmd->add_flag("--odd", odd_flag);
  double_cmd->add_option("--data", data_file)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "converse double-extension decomposition");
  decompose_cmd->add_option("file", file)->required();
  decompose_cmd->add_flag("--even", even_flag);
  decompose_cmd->add_flag("--odd", odd_flag);

  auto* catalog_cmd = app.add_subcommand("catalog", "bundled algebra tables");
  auto* list_cmd = catalog_cmd->add_subcommand("list", "entry names");
  auto* show_cmd = catalog_cmd->add_subcommand("show", "print an entry in the file format");
  show_cmd->add_option("name", show_name)->required();
  show_cmd->add_option("--lambda", lambda_text);
  auto* verify_cmd = catalog_cmd->add_subcommand("verify", "re-derive every claimed property");

  auto* lattice_cmd = app.add_subcommand("lattice-verify", "strict-inclusion certificates");

  auto* grassmann_cmd = app.add_subcommand("grassmann-check", "envelope cross-validation");
  grassmann_cmd->add_option("file", file)->required();
  grassmann_cmd->add_option("--rank", grassmann_rank);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    rpt.check("argument parsing", false, e.what());
    rpt.exit_code = 2;
    return rpt;
  }
  rpt.json_output = json_flag;

  try {
    if (check_cmd->parsed()) {
      auto v = variety_from_string(variety_name);
      if (!v) {
        rpt.check("variety name", false, "unknown variety '" + variety_name + "'");
        rpt.exit_code = 2;
        return rpt;
      }
      auto alg = detail::load_algebra(file);
      auto res = in_variety(alg.algebra, *v);
      rpt.check(variety_name + " membership", res.member,
                res.certificate ? res.certificate->describe(alg.algebra) : "");
    } else if (analyze_cmd->parsed()) {
      auto alg = detail::load_algebra(file);
      NilReport nil = nil_report(alg.algebra);
      rpt.data["dim"] = {{"even", alg.algebra.n_even()}, {"odd", alg.algebra.n_odd()}};
      rpt.data["step_class"] = nil.step_class;
      if (nil.nil_index)
        rpt.data["nil_index"] = *nil.nil_index;
      else
        rpt.data["nil_index"] = "none up to bound dim+1";
      rpt.data["power_dims"] = nil.power_dims;
      GradedSubspace ann = annihilator(alg.algebra);
      rpt.data["annihilator"] = {{"dim", ann.dim()},
                                 {"even", detail::subspace_json(alg.algebra, ann.even)},
                                 {"odd", detail::subspace_json(alg.algebra, ann.odd)}};
      if (nil.nilpotent()) {
        rpt.data["generators"] = generator_count(alg.algebra);
        rpt.check("dimension bound", dim_bound_check(alg.algebra));
      } else {
        rpt.note("analyze", "not nilpotent up to the bound; generator count skipped");
      }
    } else if (rep_cmd->parsed()) {
      if (adjoint_flag == coadjoint_flag) {
        rpt.check("flags", false, "exactly one of --adjoint/--coadjoint required");
        rpt.exit_code = 2;
        return rpt;
      }
      auto alg = detail::load_algebra(file);
      RepresentationPair rp = adjoint_flag ? adjoint_pair(alg.algebra) : coadjoint_pair(alg.algebra);
      std::optional<AxiomViolation> why;
      bool ok = is_representation(alg.algebra, rp, &why);
      rpt.check(std::string(adjoint_flag ? "adjoint" : "coadjoint") + " pair is a representation", ok,
                why ? why->describe(alg.algebra) : "");
    } else if (central_cmd->parsed()) {
      auto alg = detail::load_algebra(file);
      if (cocycle_file.empty()) {
        for (Degree par : {kEven, kOdd}) {
          auto cs = cocycle_space(alg.algebra, VarietyName::SymmetricZinbiel, par);
          std::string key = par.odd() ? "odd" : "even";
          rpt.data["cocycle_space"][key] = {{"z2", cs.z2_dim}, {"b2", cs.b2_dim}, {"h2", cs.h2_dim}};
        }
        rpt.note("cocycle space", "dimensions computed; pass --cocycles to build an extension");
      } else {
        auto omegas = detail::load_cocycles(cocycle_file, alg.algebra);
        SuperAlgebra out = central_extension(alg.algebra, omegas);
        rpt.check("cocycle constraints", true);
        rpt.data["result"] = serialize(out);
        rpt.payload = serialize(out);
      }
    } else if (double_cmd->parsed()) {
      if (even_flag == odd_flag) {
        rpt.check("flags", false, "exactly one of --even/--odd required");
        rpt.exit_code = 2;
        return rpt;
      }
      auto alg = detail::load_algebra(file);
      if (!alg.gram) throw ParseError(0, "double-extend needs a form block in the algebra file");
      BilinearForm b{*alg.gram};
      auto data = detail::load_extension_data(data_file, alg.algebra);
      QuadraticAlgebra out =
          even_flag ? even_double_extension(alg.algebra, b, data.delta, data.a0, data.alpha)
                    : odd_double_extension(alg.algebra, b, data.delta, data.D, data.a0);
      rpt.check("preconditions", true);
      rpt.check("output form checks", form_checks(out.algebra, out.form).all());
      rpt.check("output symmetric-zinbiel",
                in_variety(out.algebra, VarietyName::SymmetricZinbiel).member);
      rpt.data["result"] = serialize(out.algebra, out.form.gram);
      rpt.payload = serialize(out.algebra, out.form.gram);
    } else if (decompose_cmd->parsed()) {
      if (even_flag == odd_flag) {
        rpt.check("flags", false, "exactly one of --even/--odd required");
        rpt.exit_code = 2;
        return rpt;
      }
      auto alg = detail::load_algebra(file);
      if (!alg.gram) throw ParseError(0, "decompose needs a form block in the algebra file");
      BilinearForm b{*alg.gram};
      Degree par = even_flag ? kEven : kOdd;
      Decomposition dec = even_flag ? decompose_even(alg.algebra, b) : decompose_odd(alg.algebra, b);
      std::string why;
      rpt.check("round trip", verify_round_trip(alg.algebra, b, dec, par, &why), why);
      rpt.data["core"] = serialize(dec.core.algebra, dec.core.form.gram);
      rpt.data["alpha"] = to_string(dec.alpha);
      rpt.data["e"] = alg.algebra.element(dec.e).str();
      rpt.data["d"] = alg.algebra.element(dec.d).str();
    } else if (list_cmd->parsed()) {
      for (const CatalogEntry& e : catalog()) {
        nlohmann::json j;
        j["name"] = e.name;
        j["role"] = e.role;
        j["parametrized"] = e.parametrized;
        rpt.data["entries"].push_back(j);
      }
      rpt.note("catalog", std::to_string(catalog().size()) + " entries");
    } else if (show_cmd->parsed()) {
      std::optional<Scalar> lambda;
      if (!lambda_text.empty()) lambda = parse_rational(lambda_text);
      rpt.data["algebra"] = serialize(catalog_get(show_name, lambda));
      rpt.payload = "# " + show_name + "\n" + rpt.data["algebra"].get<std::string>();
    } else if (verify_cmd->parsed()) {
      VerificationReport v = verify_all();
      for (const auto& line : v.lines)
        if (!line.pass) rpt.check(line.instance + ": " + line.check, false, line.detail);
      rpt.check("catalog verification",
                v.all_passed(), std::to_string(v.lines.size()) + " checks");
      for (const auto& d : v.variety_set_disagreements)
        rpt.data["binary_set_disagreements"].push_back(d);
    } else if (lattice_cmd->parsed()) {
      LatticeReport lat = lattice_report();
      for (const auto& c : lat.certificates)
        rpt.check(c.edge.smaller + " strictly inside " + c.edge.larger + " via " + c.edge.witness,
                  c.certified());
      rpt.check("triples-zero characterization", lat.characterization_failures.empty());
    } else if (grassmann_cmd->parsed()) {
      auto alg = detail::load_algebra(file);
      for (const auto& v : envelope_cross_check(alg.algebra, grassmann_rank))
        rpt.check("verdict agreement for " + v.identity, v.agree(),
                  std::string("super ") + (v.super_holds ? "holds" : "fails") + ", envelope " +
                      (v.envelope_holds ? "holds" : "fails"));
    } else {
      rpt.check("usage", false, "a subcommand is required (try --help)");
      rpt.exit_code = 2;
    }
  } catch (const ParseError& e) {
    rpt.check("input parsing", false, e.what());
    rpt.exit_code = 2;
  } catch (const StructuralContradiction& e) {
    rpt.check("structural consistency", false, e.what());
    rpt.exit_code = 3;
  } catch (const CLI::Error& e) {
    rpt.check("argument parsing", false, e.what());
    rpt.exit_code = 2;
  } catch (const std::exception& e) {
    rpt.check("error", false, e.what());
    if (rpt.exit_code == 0) rpt.exit_code = 1;
  }
  return rpt;
}

}  // namespace zinbiel::cli
