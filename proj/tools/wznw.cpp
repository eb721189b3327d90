// Command-line verifier: runs the identity suites and emits reports.
//
// Exit codes: 0 all checks pass, 1 residual over tolerance, 2 bad
// configuration, 3 internal numerical fault.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wznw/report.hpp"
#include "wznw/types.hpp"

namespace {

int run_verify(const std::string& suite, const wznw::SuiteConfig& cfg,
               const std::string& format, const std::string& out_path) {
  wznw::ResidualReport rep;
  try {
    rep = wznw::run_suite(suite, cfg);
  } catch (const wznw::DomainError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const wznw::InternalFaultError& e) {
    std::cerr << "internal fault: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal fault: " << e.what() << "\n";
    return 3;
  }

  const std::string text = wznw::emit_report(
      rep, format == "json" ? wznw::ReportFormat::json
                            : wznw::ReportFormat::text);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "configuration error: cannot open output file " << out_path
                << "\n";
      return 2;
    }
    f << text;
  }
  return rep.verdict ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verifier for dynamical r-matrix and Poisson-Lie "
               "groupoid identities"};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "cdybe | momentum | groupoid | compact | all")
      ->required();

  wznw::SuiteConfig cfg;
  std::string format = "text";
  std::string out_path;
  std::vector<std::string> tol_args;
  verify->add_option("--algebra", cfg.algebra, "sl2 | sl3 | su2 | su3");
  verify->add_option("--nu", cfg.nu, "deformation parameter (split case)");
  verify->add_option("--compact-theta", cfg.theta,
                     "deformation parameter (compact case)");
  verify->add_option("--samples", cfg.samples, "sample points per check");
  verify->add_option("--seed", cfg.seed, "RNG seed");
  verify->add_option("--domain-radius", cfg.domain_radius,
                     "coordinate sampling radius");
  verify->add_option("--fd-step", cfg.fd_step, "finite-difference step");
  verify->add_option("--tol", tol_args,
                     "tolerance override, name=value (repeatable)");
  verify->add_option("--format", format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "write the report to a file");

  CLI11_PARSE(app, argc, argv);

  for (const std::string& t : tol_args) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      std::cerr << "configuration error: --tol expects name=value, got '" << t
                << "'\n";
      return 2;
    }
    try {
      cfg.tol_overrides[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
    } catch (const std::exception&) {
      std::cerr << "configuration error: bad tolerance value in '" << t
                << "'\n";
      return 2;
    }
  }

  return run_verify(suite, cfg, format, out_path);
}
