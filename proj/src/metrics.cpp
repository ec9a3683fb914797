#include "evostream/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace evostream {

ConfusionCounts count_confusion(std::span<const Prediction> predictions,
                                std::span<const Label> truths,
                                std::span<const Label> labels) {
  if (predictions.size() != truths.size()) {
    throw std::invalid_argument(
        "count_confusion: predictions/truths length mismatch");
  }
  ConfusionCounts counts;
  for (const auto& l : labels) counts.per_label[l];

  for (std::size_t i = 0; i < truths.size(); ++i) {
    const Label& truth = truths[i];
    auto truth_it = counts.per_label.find(truth);
    if (truth_it == counts.per_label.end()) {
      throw std::invalid_argument("count_confusion: unknown truth label '" +
                                  truth + "'");
    }
    const auto& pred = predictions[i];
    if (pred.unrecognised()) {
      ++truth_it->second.fn;
      continue;
    }
    if (*pred.label == truth) {
      ++truth_it->second.tp;
    } else {
      ++truth_it->second.fn;
      auto pred_it = counts.per_label.find(*pred.label);
      if (pred_it != counts.per_label.end()) ++pred_it->second.fp;
    }
  }
  return counts;
}

double macro_f1(std::span<const Prediction> predictions,
                std::span<const Label> truths, std::span<const Label> labels) {
  const ConfusionCounts counts = count_confusion(predictions, truths, labels);
  double sum = 0.0;
  int present = 0;
  for (const auto& [label, c] : counts.per_label) {
    if (c.tp + c.fp + c.fn == 0) continue;  // class absent from this window
    ++present;
    const double precision =
        c.tp + c.fp > 0 ? static_cast<double>(c.tp) / (c.tp + c.fp) : 0.0;
    const double recall =
        c.tp + c.fn > 0 ? static_cast<double>(c.tp) / (c.tp + c.fn) : 0.0;
    if (precision + recall > 0.0) {
      sum += 2.0 * precision * recall / (precision + recall);
    }
  }
  return present > 0 ? sum / present : 0.0;
}

namespace {

// Ranks of |d|, ascending, with average ranks for ties. Ranks are multiples
// of 0.5 and therefore exact in double.
std::vector<double> ranked_abs(const std::vector<double>& abs_d) {
  const std::size_t n = abs_d.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return abs_d[a] < abs_d[b]; });

  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && abs_d[order[j + 1]] == abs_d[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 +
                       1.0;  // ranks are 1-based
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

TestResult signed_rank_impl(const std::vector<double>& diffs) {
  std::vector<double> abs_d;
  std::vector<int> sign;
  for (double d : diffs) {
    if (d == 0.0) continue;
    abs_d.push_back(std::abs(d));
    sign.push_back(d > 0.0 ? 1 : -1);
  }
  const int n = static_cast<int>(abs_d.size());
  if (n == 0) return TestResult{0.0, 1.0, 0};

  const std::vector<double> ranks = ranked_abs(abs_d);
  double w_plus = 0.0;
  double w_minus = 0.0;
  for (int i = 0; i < n; ++i) {
    (sign[i] > 0 ? w_plus : w_minus) += ranks[i];
  }
  const double w = std::min(w_plus, w_minus);

  TestResult result;
  result.statistic = w;
  result.n_effective = n;

  if (n <= 12) {
    // Exact two-sided p: over all 2^n sign assignments of these ranks, the
    // fraction whose min(W+, W-) is at most the observed one.
    const double total = std::accumulate(ranks.begin(), ranks.end(), 0.0);
    const std::uint32_t assignments = 1u << n;
    std::uint32_t at_most = 0;
    for (std::uint32_t mask = 0; mask < assignments; ++mask) {
      double s_plus = 0.0;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) s_plus += ranks[i];
      }
      if (std::min(s_plus, total - s_plus) <= w) ++at_most;
    }
    result.p_value = static_cast<double>(at_most) / assignments;
    return result;
  }

  // Normal approximation with tie correction.
  const double nd = n;
  const double mean = nd * (nd + 1.0) / 4.0;
  double tie_term = 0.0;
  {
    std::vector<double> sorted = abs_d;
    std::sort(sorted.begin(), sorted.end());
    std::size_t i = 0;
    while (i < sorted.size()) {
      std::size_t j = i;
      while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
      const double t = static_cast<double>(j - i + 1);
      tie_term += t * t * t - t;
      i = j + 1;
    }
  }
  const double variance =
      nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0 - tie_term / 48.0;
  if (variance <= 0.0) {
    result.p_value = 1.0;
    return result;
  }
  const double z = (w - mean + 0.5) / std::sqrt(variance);
  result.p_value = std::clamp(2.0 * normal_cdf(z), 0.0, 1.0);
  return result;
}

}  // namespace

TestResult wilcoxon_signed_rank(std::span<const double> a,
                                std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("wilcoxon_signed_rank: length mismatch");
  }
  std::vector<double> diffs(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diffs[i] = a[i] - b[i];
  return signed_rank_impl(diffs);
}

TestResult wilcoxon_signed_rank(std::span<const double> a, double reference) {
  std::vector<double> diffs(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diffs[i] = a[i] - reference;
  return signed_rank_impl(diffs);
}

}  // namespace evostream
