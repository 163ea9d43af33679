// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Criterion 8 additionally drives the CLI on the bundled level-8 descriptors and
// compares its text report with the golden file.

#include <iostream>
#include <sstream>

#include "bwc/cli.hpp"
#include "bwc/selftest.hpp"

namespace {

bwc::selftest::CriterionResult with_golden(bwc::selftest::CriterionResult r) {
  bwc::cli::RunConfiguration config;
  config.command = bwc::cli::Command::Compare;
  config.input_paths = {std::string(BWC_DATA_DIR) + "/examples/elliptic-level8-dK4.json",
                        std::string(BWC_DATA_DIR) + "/examples/elliptic-level8-dK8.json"};
  std::ostringstream out, err;
  const int status = bwc::cli::run(config, out, err);
  std::string expected;
  try {
    expected = bwc::io::read_file(std::string(BWC_GOLDEN_DIR) + "/compare_level8_dk4_dk8.txt");
  } catch (const bwc::Error& e) {
    r.passed = false;
    r.detail += "; golden file unreadable: " + std::string(e.what());
    return r;
  }
  const bool same = status == 0 && out.str() == expected;
  r.passed = r.passed && same;
  r.detail += same ? "; CLI output matches golden file" : "; CLI output differs from golden file: " + err.str();
  return r;
}

}  // namespace

int main() {
  int failed = 0;
  for (auto r : bwc::selftest::run_all()) {
    if (r.id == 8) r = with_golden(std::move(r));
    failed += !r.passed;
    std::cout << bwc::selftest::format_line(r) << "\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
