#include "revagg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <json.hpp>

#include "revagg/errors.hpp"

namespace revagg {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Exact null distribution of the scaled positive-rank sum via subset-sum
// counting. Ranks are multiples of 1/2, so doubling makes them integers; the
// count per sum stays below 2^25 and is exact in a double.
double exact_two_sided_p(const std::vector<long>& scaled_ranks,
                         long scaled_w_min) {
  long total = 0;
  for (long r : scaled_ranks) total += r;
  std::vector<double> counts(static_cast<std::size_t>(total) + 1, 0.0);
  counts[0] = 1.0;
  long reach = 0;
  for (long r : scaled_ranks) {
    reach += r;
    for (long s = reach; s >= r; --s) {
      counts[static_cast<std::size_t>(s)] +=
          counts[static_cast<std::size_t>(s - r)];
    }
  }
  double below = 0.0;
  for (long s = 0; s <= scaled_w_min; ++s) {
    below += counts[static_cast<std::size_t>(s)];
  }
  double p = 2.0 * below / std::pow(2.0, static_cast<double>(scaled_ranks.size()));
  return std::min(1.0, p);
}

}  // namespace

WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a,
                                    const std::vector<double>& b,
                                    double alpha) {
  if (a.size() != b.size()) {
    throw ArgumentError("wilcoxon: paired vectors differ in length");
  }
  if (a.empty()) throw ArgumentError("wilcoxon: empty sample");

  std::vector<double> diffs;
  diffs.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    if (d != 0.0) diffs.push_back(d);
  }
  if (diffs.empty()) {
    throw DegenerateSampleError(
        "wilcoxon: all paired differences are zero; the test is undefined");
  }

  std::size_t n = diffs.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::abs(diffs[x]) < std::abs(diffs[y]);
  });

  // Average ranks over tie groups; track group sizes for the tie correction.
  std::vector<double> ranks(n, 0.0);
  std::vector<std::size_t> tie_sizes;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n &&
           std::abs(diffs[order[j + 1]]) == std::abs(diffs[order[i]])) {
      ++j;
    }
    double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg_rank;
    tie_sizes.push_back(j - i + 1);
    i = j + 1;
  }

  double w_plus = 0.0;
  double w_minus = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (diffs[k] > 0.0) w_plus += ranks[k];
    else w_minus += ranks[k];
  }

  WilcoxonResult result;
  result.w_plus = w_plus;
  result.w_minus = w_minus;
  result.statistic_w = std::min(w_plus, w_minus);
  result.n_effective = n;
  result.alpha = alpha;

  if (n <= kWilcoxonExactLimit) {
    result.method = WilcoxonMethod::Exact;
    std::vector<long> scaled(n);
    for (std::size_t k = 0; k < n; ++k) {
      scaled[k] = std::lround(ranks[k] * 2.0);
    }
    long scaled_w = std::lround(result.statistic_w * 2.0);
    result.p_value = exact_two_sided_p(scaled, scaled_w);
  } else {
    result.method = WilcoxonMethod::NormalApprox;
    double dn = static_cast<double>(n);
    double mean = dn * (dn + 1.0) / 4.0;
    double variance = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0;
    for (std::size_t t : tie_sizes) {
      double dt = static_cast<double>(t);
      variance -= (dt * dt * dt - dt) / 48.0;
    }
    double sigma = std::sqrt(variance);
    // W <= mean by construction; the +0.5 is the continuity correction.
    double z = (result.statistic_w - mean + 0.5) / sigma;
    result.p_value = std::min(1.0, 2.0 * normal_cdf(z));
  }

  result.significant_at_alpha = result.p_value < alpha;
  return result;
}

std::string wilcoxon_to_json(const WilcoxonResult& r) {
  nlohmann::json j;
  j["statistic_w"] = r.statistic_w;
  j["w_plus"] = r.w_plus;
  j["w_minus"] = r.w_minus;
  j["n_effective"] = r.n_effective;
  j["p_value"] = r.p_value;
  j["method"] = r.method == WilcoxonMethod::Exact ? "exact" : "normal_approx";
  j["alpha"] = r.alpha;
  j["significant_at_alpha"] = r.significant_at_alpha;
  return j.dump();
}

}  // namespace revagg
