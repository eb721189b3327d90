// One-shot generator for the golden test fixtures.
#include <cstdio>
#include <fstream>

#include "wznw/liealg.hpp"
#include "wznw/report.hpp"

using namespace wznw;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: gengold <golden-dir>\n");
    return 2;
  }
  const std::string dir = argv[1];
  {
    std::ofstream out(dir + "/algebra_sl2.json", std::ios::binary);
    out << algebra_to_json(build_sl(2));
  }
  {
    SuiteConfig cfg;
    cfg.algebra = "sl2";
    cfg.nu = 0.35;
    cfg.samples = 5;
    cfg.seed = 42;
    std::ofstream out(dir + "/report_cdybe_sl2.json", std::ios::binary);
    out << emit_report(run_suite("cdybe", cfg), ReportFormat::json);
  }
  std::printf("golden files written to %s\n", dir.c_str());
  return 0;
}
