#pragma once

#include <cstdint>
#include <vector>

namespace agentfact::eval {

// Maps a 0..2 human rating (0 best) onto a 0..1 score (1 best): 1 - orig/2.
// Throws std::out_of_range outside {0, 1, 2}.
double normalize_human_score(int orig);

struct WilcoxonResult {
  double w = 0.0;  // min of the positive and negative rank sums
  double p = 1.0;  // two-sided
  int n_nonzero = 0;
};

// Two-sided Wilcoxon signed-rank test over paired differences. Zeros are
// dropped, tied magnitudes share average ranks. Up to 25 nonzero pairs the
// p-value is exact (subset-sum distribution over doubled ranks); beyond that
// a normal approximation with tie-corrected variance and no continuity
// correction is used. All zero differences give w = 0, p = 1.
WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& diffs);

struct SignificanceResult {
  double mean_delta = 0.0;
  double wilcoxon_w = 0.0;
  double wilcoxon_p = 1.0;
  bool all_zero_differences = false;
  double ci_low = 0.0;   // 95% percentile bootstrap over the mean difference
  double ci_high = 0.0;
};

// Paired comparison of two score lists (a - b): mean difference, Wilcoxon
// signed-rank p, and a seeded percentile bootstrap CI of the mean.
// Throws LengthMismatch when sizes differ and EmptyInput below two pairs.
SignificanceResult paired_significance(const std::vector<double>& a,
                                       const std::vector<double>& b,
                                       std::uint64_t seed = 7u,
                                       int resamples = 10000);

}  // namespace agentfact::eval
