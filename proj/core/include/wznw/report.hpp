#pragma once

#include <map>
#include <string>
#include <vector>

#include "wznw/types.hpp"

namespace wznw {

// Configuration of a verification suite run. `algebra` selects both the
// Lie algebra and the case (split for sl*, compact for su*).
struct SuiteConfig {
  std::string algebra = "sl2";  // sl2 | sl3 | su2 | su3
  double nu = 0.35;
  double theta = 0.3;
  int samples = 100;
  std::uint64_t seed = 42;
  double domain_radius = 0.3;
  double fd_step = 1e-5;
  std::map<std::string, double> tol_overrides;  // check id -> tolerance
};

// One verified identity: residual statistics over the sampled points.
// Controls carry expect_fail = true and pass when the largest sampled
// residual is ABOVE the threshold (the broken input must be detected).
struct CheckRecord {
  std::string id;
  std::string anchor;  // identity label in the source text
  int sample_count = 0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  double tolerance = 0.0;
  bool expect_fail = false;
  bool pass = false;
};

struct ResidualReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckRecord> records;
  bool verdict = false;  // pass iff every record passes
  double wall_ms = 0.0;  // excluded from JSON to keep reports byte-stable
};

// Valid suite names: cdybe, momentum, groupoid, compact, all.
bool is_suite_name(const std::string& name);

// Throws DomainError on invalid configuration (bad algebra name, bad
// parameter ranges, tolerance override naming no check in the suite).
ResidualReport run_suite(const std::string& name, const SuiteConfig& config);

enum class ReportFormat { json, text };

std::string emit_report(const ResidualReport& report, ReportFormat format);

// Inverse of the JSON emitter (round-trip tested).
ResidualReport parse_report(const std::string& json_text);

// Deterministic stateless sample stream: component c of sample s of the
// check `key` under `seed`, uniform in [-radius, radius].
double sample_uniform(std::uint64_t seed, const std::string& key, int sample,
                      int component, double radius);

}  // namespace wznw
