#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace leuven::cli {

/// Everything a single distance computation needs.
struct ComputeConfig {
  std::string a;
  std::string b;
  std::string mode = "exact";       // exact | skip | approx
  std::size_t ell = 0;              // accuracy threshold for approx
  bool has_ell = false;
  std::string encoding = "ascii7";  // ascii7 | lower26 | dna4 | custom:<file>
  double budget = 4000.0;
  std::string key_encoding = "negated";  // negated | original
  bool preprocess = false;
};

/// Bootstrap accounting and result of one run. pbs_total always equals
/// pbs_equality + pbs_kernel + refresh_count + preprocessing_pbs.
struct RunReport {
  int distance = 0;
  std::string mode;
  std::size_t half_width = 0;
  std::uint64_t visited_cells = 0;
  std::uint64_t pbs_total = 0;
  std::uint64_t pbs_equality = 0;
  std::uint64_t pbs_kernel = 0;
  std::uint64_t refresh_count = 0;
  std::uint64_t preprocessing_pbs = 0;
  std::int64_t max_key_variance = 0;
  double wall_time_ms = 0.0;
};

RunReport compute_report(const ComputeConfig& config);

/// Compact JSON object for the report. Timing is excluded from batch
/// lines so equal inputs always serialize to equal bytes.
std::string report_json(const RunReport& report, bool include_timing);

/// Entry point behind the binary: args exclude the program name.
/// Exit codes: 0 success, 2 bad flags / alphabet violations, 3 band too
/// narrow, 1 anything else.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leuven::cli
