#include "agentfact/eval/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "agentfact/errors.hpp"

namespace agentfact::eval {

double normalize_human_score(int orig) {
  if (orig < 0 || orig > 2)
    throw std::out_of_range("human score must be 0, 1 or 2, got " + std::to_string(orig));
  return 1.0 - orig / 2.0;
}

WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& diffs) {
  std::vector<double> d;
  for (const double v : diffs)
    if (v != 0.0) d.push_back(v);

  WilcoxonResult result;
  result.n_nonzero = static_cast<int>(d.size());
  if (d.empty()) return result;

  const int n = static_cast<int>(d.size());
  std::vector<int> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return std::fabs(d[x]) < std::fabs(d[y]); });

  std::vector<double> ranks(d.size());
  double tie_term = 0.0;  // sum of t^3 - t over tie groups
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && std::fabs(d[order[j]]) == std::fabs(d[order[i]])) ++j;
    const double average = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = average;
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }

  double r_plus = 0.0;
  double r_minus = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k)
    (d[k] > 0.0 ? r_plus : r_minus) += ranks[k];
  result.w = std::min(r_plus, r_minus);

  if (n <= 25) {
    // Exact two-sided tail over the 2^n sign assignments. Doubling the
    // (possibly half-integral) average ranks keeps the subset sums integral.
    std::vector<long long> doubled(d.size());
    long long total = 0;
    for (std::size_t k = 0; k < ranks.size(); ++k) {
      doubled[k] = std::llround(2.0 * ranks[k]);
      total += doubled[k];
    }
    std::vector<double> count(static_cast<std::size_t>(total) + 1, 0.0);
    count[0] = 1.0;
    for (const long long r : doubled)
      for (long long s = total; s >= r; --s)
        count[static_cast<std::size_t>(s)] += count[static_cast<std::size_t>(s - r)];

    const long long t2 = std::llround(2.0 * r_plus);
    double below = 0.0;
    double above = 0.0;
    for (long long s = 0; s <= total; ++s) {
      if (s <= t2) below += count[static_cast<std::size_t>(s)];
      if (s >= t2) above += count[static_cast<std::size_t>(s)];
    }
    const double denom = std::ldexp(1.0, n);  // 2^n
    result.p = std::min(1.0, 2.0 * std::min(below, above) / denom);
  } else {
    const double dn = n;
    const double mean = dn * (dn + 1.0) / 4.0;
    const double variance = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0 - tie_term / 48.0;
    const double z = (r_plus - mean) / std::sqrt(variance);
    result.p = std::min(1.0, std::erfc(std::fabs(z) / std::sqrt(2.0)));
  }
  return result;
}

SignificanceResult paired_significance(const std::vector<double>& a,
                                       const std::vector<double>& b, std::uint64_t seed,
                                       int resamples) {
  if (a.size() != b.size())
    throw LengthMismatch("paired lists differ in length: " + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()));
  if (a.size() < 2) throw EmptyInput("paired_significance needs at least two pairs");
  if (resamples < 1) throw std::invalid_argument("resamples must be positive");

  std::vector<double> diffs(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diffs[i] = a[i] - b[i];

  SignificanceResult result;
  result.mean_delta =
      std::accumulate(diffs.begin(), diffs.end(), 0.0) / static_cast<double>(diffs.size());

  const auto wilcoxon = wilcoxon_signed_rank(diffs);
  result.wilcoxon_w = wilcoxon.w;
  result.wilcoxon_p = wilcoxon.p;
  result.all_zero_differences = wilcoxon.n_nonzero == 0;

  // Percentile bootstrap of the mean difference. Indices come straight off
  // the raw generator so the resample sequence is identical on every stdlib.
  std::mt19937_64 rng(seed);
  const std::size_t n = diffs.size();
  std::vector<double> means(static_cast<std::size_t>(resamples));
  for (auto& mean : means) {
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) sum += diffs[rng() % n];
    mean = sum / static_cast<double>(n);
  }
  std::sort(means.begin(), means.end());
  const auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(means.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, means.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return means[lo] * (1.0 - frac) + means[hi] * frac;
  };
  result.ci_low = quantile(0.025);
  result.ci_high = quantile(0.975);
  return result;
}

}  // namespace agentfact::eval
