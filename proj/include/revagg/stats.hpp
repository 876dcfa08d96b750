#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace revagg {

// Wilcoxon signed-rank test for paired samples. Zero differences are dropped
// (Wilcoxon's original rule); |differences| are ranked with average ranks for
// ties; W is the smaller signed-rank sum. Two-sided p-value: exact when the
// effective sample is small, normal approximation with tie-corrected variance
// and continuity correction otherwise.

enum class WilcoxonMethod { Exact, NormalApprox };

inline constexpr std::size_t kWilcoxonExactLimit = 25;
inline constexpr double kDefaultAlpha = 0.05;

struct WilcoxonResult {
  double statistic_w = 0.0;      // min(W+, W-)
  double w_plus = 0.0;
  double w_minus = 0.0;
  std::size_t n_effective = 0;   // pairs left after zero-difference removal
  double p_value = 1.0;
  WilcoxonMethod method = WilcoxonMethod::Exact;
  double alpha = kDefaultAlpha;
  bool significant_at_alpha = false;
};

// Throws ArgumentError on length mismatch or empty input and
// DegenerateSampleError when every difference is zero.
WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a,
                                    const std::vector<double>& b,
                                    double alpha = kDefaultAlpha);

std::string wilcoxon_to_json(const WilcoxonResult& r);

}  // namespace revagg
