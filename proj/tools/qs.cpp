// Command-line front end: evaluate expressions, verify the identity suite or
// user identity files, print string-function tables, list the catalog.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qseries/catalog.hpp"

using namespace qseries;

namespace {

int run_coeffs(const std::string& text, long long order,
               const std::vector<std::string>& params) {
  Bindings env;
  for (const std::string& kv : params) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "qs: bad --param '" << kv << "', expected name=value\n";
      return 2;
    }
    env[kv.substr(0, eq)] = Int(kv.substr(eq + 1));
  }
  Series s = evaluate(parse_expression(text), env, order);
  Exp hi = std::min<Exp>(order, s.order());
  for (Exp e = std::min(s.lo_effective(), Exp(0)); e <= hi; ++e) {
    Rational c = s.at(e);
    std::cout << e << " " << numerator(c).str() << "/" << denominator(c).str() << "\n";
  }
  return 0;
}

int run_string(long long p, long long pp, long long m, long long l, long long order) {
  Series s = string_c(p, pp, m, l, order);
  for (Exp e = 0; e <= order; ++e) std::cout << e << " " << s.at(e).str() << "\n";
  return 0;
}

int run_verify(const std::string& suite, const std::string& file, long long order,
               unsigned jobs, const std::string& report_path) {
  Catalog catalog;
  SuiteSummary summary;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "qs: cannot open identity file " << file << "\n";
      return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::vector<Identity> ids = parse_identities(buf.str());
    auto t0 = std::chrono::steady_clock::now();
    for (const Identity& id : ids)
      for (const Bindings& b : assignments(id))
        summary.reports.push_back(verify(id, b, order));
    for (const Report& r : summary.reports) {
      if (r.status == Report::Status::Pass) ++summary.passed;
      else if (r.status == Report::Status::Fail) ++summary.failed;
      else ++summary.errors;
    }
    summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  } else {
    summary = verify_suite(catalog, suite, order, jobs);
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    write_report(out, summary);
  }
  write_report(std::cout, summary);
  std::cerr << "wall time: " << summary.wall_seconds << " s\n";
  return (summary.failed == 0 && summary.errors == 0) ? 0 : 1;
}

int run_catalog_list(const std::string& pattern) {
  Catalog catalog;
  for (const Identity* id : catalog.list(pattern))
    std::cout << id->name << "\t" << id->anchor << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-series kernel and identity verification harness"};
  app.require_subcommand(1);

  std::string expr_text;
  long long order = 20;
  std::vector<std::string> params;
  auto* coeffs = app.add_subcommand("coeffs", "print exponent/coefficient pairs");
  coeffs->add_option("expr", expr_text)->required();
  coeffs->add_option("--order", order)->required();
  coeffs->add_option("--param", params);

  std::string suite = "all", file, report_path;
  long long vorder = 60;
  unsigned jobs = 1;
  auto* verify_cmd = app.add_subcommand("verify", "verify catalog or identity file");
  verify_cmd->add_option("--suite", suite);
  verify_cmd->add_option("--file", file);
  verify_cmd->add_option("--order", vorder)->required();
  verify_cmd->add_option("--jobs", jobs);
  verify_cmd->add_option("--report", report_path);

  long long sp = 1, spp = 3, sm = 0, sl = 0, sorder = 20;
  auto* string_cmd = app.add_subcommand("string", "print string-function coefficients");
  string_cmd->add_option("--p", sp)->required();
  string_cmd->add_option("--pp", spp)->required();
  string_cmd->add_option("--m", sm)->required();
  string_cmd->add_option("--l", sl)->required();
  string_cmd->add_option("--order", sorder)->required();

  std::string pattern = "all";
  auto* catalog_cmd = app.add_subcommand("catalog", "catalog operations");
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list identities");
  list_cmd->add_option("pattern", pattern);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (coeffs->parsed()) return run_coeffs(expr_text, order, params);
    if (verify_cmd->parsed()) return run_verify(suite, file, vorder, jobs, report_path);
    if (string_cmd->parsed()) return run_string(sp, spp, sm, sl, sorder);
    if (catalog_cmd->parsed()) return run_catalog_list(pattern);
  } catch (const SyntaxError& e) {
    std::cerr << "qs: syntax error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "qs: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qs: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
