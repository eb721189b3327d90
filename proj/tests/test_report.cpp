#include "wznw/report.hpp"

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "wznw/types.hpp"

using namespace wznw;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("suite names are validated") {
  for (const char* s : {"cdybe", "momentum", "groupoid", "compact", "all"})
    CHECK(is_suite_name(s));
  CHECK_FALSE(is_suite_name("cdybe2"));
  CHECK_FALSE(is_suite_name(""));
}

TEST_CASE("the sample stream is deterministic and bounded") {
  const double a = sample_uniform(42, "exchange-cdybe", 3, 1, 0.3);
  const double b = sample_uniform(42, "exchange-cdybe", 3, 1, 0.3);
  CHECK(a == b);
  CHECK(std::abs(a) <= 0.3);
  CHECK(sample_uniform(42, "exchange-cdybe", 3, 2, 0.3) != a);
  CHECK(sample_uniform(43, "exchange-cdybe", 3, 1, 0.3) != a);
  CHECK(sample_uniform(42, "kernel-cdybe", 3, 1, 0.3) != a);
}

TEST_CASE("invalid configurations are rejected") {
  SuiteConfig cfg;
  cfg.samples = 2;
  cfg.algebra = "so3";
  CHECK_THROWS_AS((void)run_suite("cdybe", cfg), DomainError);
  cfg.algebra = "sl2";
  CHECK_THROWS_AS((void)run_suite("compact", cfg), DomainError);
  cfg.tol_overrides["no-such-check"] = 1e-3;
  CHECK_THROWS_AS((void)run_suite("cdybe", cfg), DomainError);
}

TEST_CASE("reports round-trip through JSON") {
  SuiteConfig cfg;
  cfg.samples = 2;
  ResidualReport r = run_suite("momentum", cfg);
  CHECK(r.verdict);
  const std::string js = emit_report(r, ReportFormat::json);
  ResidualReport back = parse_report(js);
  CHECK(emit_report(back, ReportFormat::json) == js);
  CHECK(back.suite == r.suite);
  CHECK(back.records.size() == r.records.size());
  // the text rendering mentions every check id
  const std::string txt = emit_report(r, ReportFormat::text);
  for (const CheckRecord& rec : r.records)
    CHECK(txt.find(rec.id) != std::string::npos);
}

TEST_CASE("identical configurations give byte-identical reports") {
  SuiteConfig cfg;
  cfg.algebra = "su2";
  cfg.samples = 3;
  const std::string a = emit_report(run_suite("cdybe", cfg), ReportFormat::json);
  const std::string b = emit_report(run_suite("cdybe", cfg), ReportFormat::json);
  CHECK(a == b);
}

TEST_CASE("controls are first-class records and must fail loudly") {
  SuiteConfig cfg;
  cfg.samples = 2;
  ResidualReport r = run_suite("cdybe", cfg);
  int n_controls = 0;
  for (const CheckRecord& rec : r.records)
    if (rec.expect_fail) {
      ++n_controls;
      CHECK(rec.pass);
      CHECK(rec.max_residual > rec.tolerance);
    }
  CHECK(n_controls >= 1);
}

TEST_CASE("a tightened tolerance flips the verdict, not the run") {
  SuiteConfig cfg;
  cfg.samples = 2;
  cfg.tol_overrides["exchange-cdybe"] = 1e-300;
  ResidualReport r = run_suite("cdybe", cfg);
  CHECK_FALSE(r.verdict);
}

TEST_CASE("the frozen report is reproduced byte for byte") {
  SuiteConfig cfg;
  cfg.algebra = "sl2";
  cfg.nu = 0.35;
  cfg.samples = 5;
  cfg.seed = 42;
  ResidualReport r = run_suite("cdybe", cfg);
  const std::string got = emit_report(r, ReportFormat::json);
  const std::string want =
      read_file(std::string(TEST_DATA_DIR) + "/report_cdybe_sl2.json");
  CHECK(got == want);
}
