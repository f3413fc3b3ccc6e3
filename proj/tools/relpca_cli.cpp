// Command-line frontend: verifies structure-constant algebras against the
// named axiom systems, runs the construction recipes, and enumerates
// antisymmetric Yang-Baxter solutions.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "relpca/laurent.hpp"
#include "relpca/textio.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw relpca::DocError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Reserved pseudo-files "laurent(a=<int>)" select the sparse Laurent fixture.
bool parse_laurent_name(const std::string& path, long long& a) {
  const std::string prefix = "laurent(a=";
  if (path.rfind(prefix, 0) != 0 || path.back() != ')') return false;
  std::string num = path.substr(prefix.size(), path.size() - prefix.size() - 1);
  try {
    size_t pos = 0;
    a = std::stoll(num, &pos);
    return pos == num.size();
  } catch (const std::exception&) {
    return false;
  }
}

bool parse_window(const std::string& spec, relpca::laurent::Window& w) {
  size_t dots = spec.find("..");
  if (dots == std::string::npos) return false;
  try {
    w.lo = std::stoll(spec.substr(0, dots));
    w.hi = std::stoll(spec.substr(dots + 2));
  } catch (const std::exception&) {
    return false;
  }
  return w.lo <= w.hi;
}

void print_report(const std::string& structure, const relpca::Conditions& conds,
                  const std::vector<std::string>& basis, const std::string& format,
                  const relpca::AlgebraDoc* constructed) {
  if (format == "json")
    std::cout << relpca::format_report_json(structure, conds, constructed);
  else
    std::cout << relpca::format_conditions_text(structure, conds, basis);
}

int run_check(const std::string& file, std::string kind, const std::string& format,
              const std::string& window_spec) {
  long long a = 0;
  if (parse_laurent_name(file, a)) {
    relpca::laurent::Window w;
    if (!window_spec.empty() && !parse_window(window_spec, w)) {
      std::cerr << "error: bad window '" << window_spec << "', expected lo..hi\n";
      return kExitInput;
    }
    relpca::Conditions conds = relpca::laurent::sampled_suite(a, w);
    print_report(file, conds, {}, format, nullptr);
    return conds.all() ? kExitPass : kExitFail;
  }
  relpca::AlgebraDoc doc = relpca::parse_doc(read_file(file));
  if (kind.empty()) kind = doc.kind;
  if (kind.empty()) throw relpca::DocError("no --as kind given and the document declares none");
  relpca::Conditions conds = relpca::check_kind(doc, kind);
  print_report(kind, conds, doc.basis, format, nullptr);
  return conds.all() ? kExitPass : kExitFail;
}

int run_construct(const std::string& recipe, const std::string& file, const std::string& arg,
                  const std::string& format, const std::string& out_path) {
  relpca::AlgebraDoc doc = relpca::parse_doc(read_file(file));
  relpca::AlgebraDoc out = relpca::run_recipe(doc, recipe, arg);
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw relpca::DocError("cannot write '" + out_path + "'");
    f << relpca::emit_doc(out);
  }
  if (format == "json") {
    relpca::Conditions none;
    std::cout << relpca::format_report_json(recipe, none, &out);
  } else if (out_path.empty()) {
    std::cout << relpca::emit_doc(out);
  }
  return kExitPass;
}

int run_enumerate(const std::string& file, const std::string& coeff_spec,
                  const std::string& format) {
  relpca::AlgebraDoc doc = relpca::parse_doc(read_file(file));
  relpca::RelPCA s{relpca::doc_op(doc, "dot"), relpca::doc_op(doc, "circ"),
                   relpca::doc_map(doc, "P"), relpca::doc_map(doc, "Q")};
  std::vector<relpca::Rat> coeffs;
  std::stringstream ss(coeff_spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) coeffs.push_back(relpca::rat_from_string(tok));
  if (coeffs.empty()) throw relpca::DocError("--coeffs needs a comma-separated list");
  if (doc.dim > 6) throw relpca::DocError("enumeration supported for dim <= 6");
  std::vector<relpca::Tensor2> sols = relpca::enumerate_ybe_solutions(s, coeffs);
  if (format == "json") {
    std::cout << "{\n  \"solutions\": [";
    for (size_t k = 0; k < sols.size(); ++k) {
      std::cout << (k ? ",\n    [" : "\n    [");
      bool first = true;
      for (int i = 0; i < sols[k].dl; ++i)
        for (int j = 0; j < sols[k].dr; ++j) {
          if (sols[k](i, j) == 0) continue;
          if (!first) std::cout << ", ";
          std::cout << "[" << i + 1 << ", " << j + 1 << ", \""
                    << relpca::rat_to_string(sols[k](i, j)) << "\"]";
          first = false;
        }
      std::cout << "]";
    }
    std::cout << "\n  ],\n  \"count\": " << sols.size() << "\n}\n";
  } else {
    std::cout << "solutions: " << sols.size() << "\n";
    for (size_t k = 0; k < sols.size(); ++k) {
      std::cout << "r" << k + 1 << ":";
      bool any = false;
      for (int i = 0; i < sols[k].dl; ++i)
        for (int j = 0; j < sols[k].dr; ++j)
          if (sols[k](i, j) != 0) {
            std::cout << " (" << i + 1 << "," << j + 1 << ")="
                      << relpca::rat_to_string(sols[k](i, j));
            any = true;
          }
      if (!any) std::cout << " 0";
      std::cout << "\n";
    }
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier and constructor for relative Poisson / PCA structures"};
  app.require_subcommand(1);
  app.fallthrough();  // accept --format both before and after the subcommand
  std::string format = "text";
  app.add_option("--format", format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "verify a structure file against an axiom system");
  std::string check_file, check_kind, window_spec;
  check->add_option("file", check_file, "structure file, or laurent(a=<int>)")->required();
  check->add_option("--as", check_kind, "structure kind to verify");
  check->add_option("--window", window_spec, "sample window lo..hi for laurent fixtures");

  auto* construct = app.add_subcommand("construct", "run a construction recipe");
  std::string recipe, cons_file, r_name, t_name, out_path;
  construct->add_option("recipe", recipe, "one of: witt, circ-from-admissible, pre-pca, "
                                          "sub-adjacent, double, manin, cobound, lift-o-operator")
      ->required();
  construct->add_option("file", cons_file, "input structure file")->required();
  construct->add_option("--r", r_name, "tensor name for cobound");
  construct->add_option("--T", t_name, "map name for lift-o-operator (default: identity)");
  construct->add_option("-o,--output", out_path, "write the constructed document here");

  auto* enumerate = app.add_subcommand("enumerate-ybe", "brute-force antisymmetric solutions");
  std::string enum_file, coeff_spec = "-1,0,1";
  enumerate->add_option("file", enum_file, "relative-pca structure file")->required();
  enumerate->add_option("--coeffs", coeff_spec, "comma-separated coefficient set");

  auto* report = app.add_subcommand("report", "parse a file and verify its declared kind");
  std::string report_file;
  report->add_option("file", report_file, "structure file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (check->parsed()) return run_check(check_file, check_kind, format, window_spec);
    if (construct->parsed())
      return run_construct(recipe, cons_file, r_name.empty() ? t_name : r_name, format, out_path);
    if (enumerate->parsed()) return run_enumerate(enum_file, coeff_spec, format);
    if (report->parsed()) return run_check(report_file, "", format, "");
  } catch (const relpca::PreconditionError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    std::cerr << relpca::format_conditions_text("precondition", e.details, {});
    return kExitFail;
  } catch (const relpca::DocError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const relpca::ShapeError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitPass;
}
