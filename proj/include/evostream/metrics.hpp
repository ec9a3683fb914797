#pragma once

#include <chrono>
#include <map>
#include <span>
#include <utility>

#include "evostream/types.hpp"

namespace evostream {

/// Per-label true-positive / false-positive / false-negative tallies.
/// Unrecognised predictions count as a false negative for the true class and
/// as no prediction for any class.
struct ConfusionCounts {
  struct Counts {
    long tp = 0;
    long fp = 0;
    long fn = 0;
  };
  std::map<Label, Counts> per_label;
};

ConfusionCounts count_confusion(std::span<const Prediction> predictions,
                                std::span<const Label> truths,
                                std::span<const Label> labels);

/// Unweighted mean of per-class F1 = 2PR/(P+R) over the given label set.
/// Classes absent from the window (no actuals, no predictions) are excluded
/// from the mean; a present class with an undefined precision, recall or F1
/// denominator scores 0.
double macro_f1(std::span<const Prediction> predictions,
                std::span<const Label> truths, std::span<const Label> labels);

struct TestResult {
  double statistic = 0.0;  // W = min(W+, W-)
  double p_value = 1.0;
  int n_effective = 0;  // pairs left after dropping zero differences
};

/// Two-sided Wilcoxon signed-rank test on paired samples. Zero differences
/// are dropped, tied |d| get average ranks. Exact p by enumerating all sign
/// assignments for n_effective <= 12, normal approximation with tie
/// correction above. All-zero differences give p = 1.
TestResult wilcoxon_signed_rank(std::span<const double> a,
                                std::span<const double> b);

/// Same test against a constant reference broadcast to a's length.
TestResult wilcoxon_signed_rank(std::span<const double> a, double reference);

/// Runs op and returns its result with the monotonic wall time in seconds.
template <typename F>
auto timed(F&& op) {
  const auto start = std::chrono::steady_clock::now();
  auto result = std::forward<F>(op)();
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return std::make_pair(std::move(result), elapsed.count());
}

}  // namespace evostream
