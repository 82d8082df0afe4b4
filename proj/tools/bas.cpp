#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bas/catalog.hpp"
#include "bas/connections.hpp"
#include "bas/constructions.hpp"
#include "bas/document.hpp"
#include "bas/errors.hpp"
#include "bas/nomizu.hpp"
#include "bas/report.hpp"

namespace {

constexpr const char* kVersion = "basalg 1.0.0";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bas::ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void fill_verdicts(bas::Report& rep, const bas::Verdict& v, const std::vector<std::string>& names) {
  for (const auto& [check, res] : v.checks) {
    bas::Report::Entry e;
    e.pass = res.pass;
    if (!res.pass) e.witness = res.witness.first_nonzero(names);
    rep.verdicts[check] = e;
  }
}

int run_check(const std::string& path, const std::string& expect, const std::string& report_path,
              bool text) {
  std::string raw = slurp(path);
  bas::AlgebraDocument doc = bas::parse_document(raw);
  bas::HermitianData h = bas::document_hermitian(doc);
  bas::Report rep;
  rep.tool_version = kVersion;
  rep.input_digest = bas::fnv1a_hex(raw);
  bas::Verdict suite = bas::verdict_suite(h);
  fill_verdicts(rep, suite, h.carrier.names());
  auto an = bas::analyze_algebra(bas::document_algebra(doc));
  rep.presentation["dim"] = std::to_string(doc.dim);
  rep.presentation["centre_dim"] = std::to_string(an.centre.dim());
  rep.presentation["derived_dim"] = std::to_string(an.derived.dim());
  if (an.nilpotency_class)
    rep.presentation["nilpotency_class"] = std::to_string(*an.nilpotency_class);
  try {
    bas::NomizuAlgebra nom = bas::build_nomizu(h);
    bas::Presentation pres = bas::canonical_presentation(nom);
    rep.presentation["l_dim"] = std::to_string(pres.pair.l().dim());
    rep.presentation["u_dim"] = std::to_string(pres.pair.u().dim());
    bas::KostantForm Q = bas::kostant_form(pres.pair, pres.g);
    bas::ReductionData red = bas::canonical_reduction(pres.pair, pres.g, pres.J, Q);
    rep.presentation["f_dim"] = std::to_string(red.f.dim());
    rep.presentation["base_dim"] = std::to_string(red.b.dim());
  } catch (const bas::NotBASError&) {
    rep.notes["presentation"] = "skipped: structure is not BAS";
  } catch (const bas::NoKostantFormError& e) {
    rep.notes["reduction"] = std::string("skipped: ") + e.what();
  } catch (const bas::TrivialSubmoduleError& e) {
    rep.notes["reduction"] = std::string("skipped: ") + e.what();
  }
  std::string out = text ? bas::emit_report_text(rep) : bas::emit_report_json(rep);
  if (!report_path.empty()) {
    std::ofstream of(report_path, std::ios::binary);
    of << (text ? out : bas::emit_report_json(rep));
  }
  std::cout << out;
  for (const std::string& want : split_list(expect)) {
    auto it = rep.verdicts.find(want);
    if (it == rep.verdicts.end()) {
      std::cerr << "unknown check in --expect: " << want << "\n";
      return 2;
    }
    if (!it->second.pass) return 1;
  }
  return 0;
}

int run_catalog_verify(const std::string& name, bool all) {
  std::vector<std::string> names;
  if (all)
    names = bas::catalog_names();
  else
    names.push_back(name);
  int bad = 0;
  for (const std::string& n : names) {
    bas::CatalogEntry e = bas::catalog_build(n);
    auto mism = bas::catalog_verify(e);
    if (mism.empty()) {
      std::cout << n << ": OK\n";
    } else {
      ++bad;
      std::cout << n << ": MISMATCH";
      for (const auto& m : mism) std::cout << " " << m;
      std::cout << "\n";
    }
  }
  return bad == 0 ? 0 : 1;
}

int run_present(const std::string& path) {
  bas::AlgebraDocument doc = bas::parse_document(slurp(path));
  bas::HermitianData h = bas::document_hermitian(doc);
  bas::NomizuAlgebra nom = bas::build_nomizu(h);
  bas::Presentation pres = bas::canonical_presentation(nom);
  std::cout << "nomizu_dim: " << nom.algebra.dim() << "\n";
  std::cout << "stab_dim: " << nom.stab_dim() << "\n";
  std::cout << "l_dim: " << pres.pair.l().dim() << "\n";
  std::cout << "u_dim: " << pres.pair.u().dim() << "\n";
  std::cout << "m_dim: " << pres.pair.dim_m() << "\n";
  return 0;
}

int run_reduce(const std::string& path) {
  bas::AlgebraDocument doc = bas::parse_document(slurp(path));
  bas::HermitianData h = bas::document_hermitian(doc);
  bas::NomizuAlgebra nom = bas::build_nomizu(h);
  bas::Presentation pres = bas::canonical_presentation(nom);
  bas::KostantForm Q = bas::kostant_form(pres.pair, pres.g);
  bas::ReductionData red = bas::canonical_reduction(pres.pair, pres.g, pres.J, Q);
  std::cout << "f_dim: " << red.f.dim() << "\n";
  std::cout << "base_dim: " << red.b.dim() << "\n";
  std::cout << "fibre_abelian: yes\n";
  return 0;
}

int run_classify(const std::string& path) {
  bas::AlgebraDocument doc = bas::parse_document(slurp(path));
  bas::LieAlgebra n = bas::document_algebra(doc);
  bas::NilpotentDecision dec = bas::decide_nilpotent_bas(n);
  using Outcome = bas::NilpotentDecision::Outcome;
  const char* verdict = dec.verdict == Outcome::yes            ? "yes"
                        : dec.verdict == Outcome::no           ? "no"
                                                               : "indeterminate";
  std::cout << "verdict: " << verdict << "\n";
  std::cout << "reason: " << dec.reason << "\n";
  if (dec.obstruction_min_poly)
    std::cout << "obstruction_min_poly: " << dec.obstruction_min_poly->str() << "\n";
  if (dec.schwartz_zippel_flag) std::cout << "schwartz_zippel: probabilistic certificate\n";
  if (!dec.witness.empty()) {
    std::cout << "witness (exact, rows):\n";
    for (const auto& row : dec.witness) {
      std::cout << " ";
      for (const auto& x : row) std::cout << " " << bas::to_string(x);
      std::cout << "\n";
    }
  } else if (!dec.witness_num.empty()) {
    std::cout << "witness (numeric, rows):\n";
    for (const auto& row : dec.witness_num) {
      std::cout << " ";
      for (double x : row) std::cout << " " << x;
      std::cout << "\n";
    }
  }
  return dec.verdict == Outcome::no ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verdicts for special Hermitian structures on Lie groups"};
  app.require_subcommand(1);

  std::string check_file, expect, report_path;
  bool text = false;
  auto* check = app.add_subcommand("check", "run the verdict suite on an algebra file");
  check->add_option("file", check_file, "algebra json file")->required();
  check->add_option("--expect", expect, "comma-separated checks that must pass");
  check->add_option("--report", report_path, "write the json report to this path");
  check->add_flag("--text", text, "human-readable output");

  auto* catalog = app.add_subcommand("catalog", "built-in example catalog");
  auto* cat_list = catalog->add_subcommand("list", "list entry names");
  std::string verify_name;
  bool verify_all = false;
  auto* cat_verify = catalog->add_subcommand("verify", "recompute and compare fixtures");
  cat_verify->add_option("name", verify_name, "entry name");
  cat_verify->add_flag("--all", verify_all, "verify every entry");

  std::string present_file;
  auto* present = app.add_subcommand("present", "canonical presentation summary");
  present->add_option("file", present_file, "algebra json file")->required();

  std::string reduce_file;
  auto* reduce = app.add_subcommand("reduce", "canonical reduction data");
  reduce->add_option("file", reduce_file, "algebra json file")->required();

  std::string classify_file;
  auto* classify = app.add_subcommand("classify-nil", "nilpotent normal-form decision");
  classify->add_option("file", classify_file, "algebra json file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(check_file, expect, report_path, text);
    if (cat_list->parsed()) {
      for (const auto& n : bas::catalog_names()) std::cout << n << "\n";
      return 0;
    }
    if (cat_verify->parsed()) {
      if (!verify_all && verify_name.empty()) {
        std::cerr << "catalog verify needs a name or --all\n";
        return 2;
      }
      return run_catalog_verify(verify_name, verify_all);
    }
    if (present->parsed()) return run_present(present_file);
    if (reduce->parsed()) return run_reduce(reduce_file);
    if (classify->parsed()) return run_classify(classify_file);
  } catch (const bas::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const bas::NotALieAlgebraError& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    return 2;
  } catch (const bas::InputShapeError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const bas::InvalidHermitianError& e) {
    std::cerr << "invalid hermitian data: " << e.what() << "\n";
    return 2;
  } catch (const bas::NotASubalgebraError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const bas::UnknownEntryError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const bas::NotIntegrableError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const bas::NotBASError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
