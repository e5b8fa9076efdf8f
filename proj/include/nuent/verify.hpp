// verify.hpp
// Self-verification suite: every module invariant, every closed form against
// the brute-force partial-trace oracle, the variance identities, and the
// measured variance/entropy ratio constants, rolled into one report.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nuent::verify {

struct Check {
  std::string name;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::optional<double> constant;  // measured ratio, where applicable
};

struct Report {
  std::vector<Check> checks;

  bool all_pass() const;
  int failures() const;
};

// Runs every suite. `trials` sizes the random-draw checks; with trials = 0
// the random checks are omitted and the grid-based checks still run.
// Deterministic for a fixed seed.
Report run_all(std::uint64_t seed, int trials);

enum class ReportFormat { text, csv };

// Byte-deterministic rendering of a report.
void write_report(const Report& report, std::ostream& out, ReportFormat format);

}  // namespace nuent::verify
