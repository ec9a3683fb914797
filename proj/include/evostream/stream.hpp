#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "evostream/evolver.hpp"
#include "evostream/types.hpp"

namespace evostream {

/// One tumbling window: a disjoint, ordered chunk of the stream. Labels are
/// used only by the scorer, never by the model.
struct StreamWindow {
  std::span<const LabeledPoint> items;
  int index = 0;
};

/// Cuts a stream into tumbling windows of size w; the final window may be
/// shorter.
std::vector<StreamWindow> tumbling_windows(std::span<const LabeledPoint> stream,
                                           int window_size);

struct RunConfig {
  int window_size = 250;
  Mode mode = Mode::Abstain;
  EvolverConfig evolver;
  std::uint64_t seed = 0;
  int num_agents = 10;
  double radius = 1.0;
};

/// Everything one run produces: the per-window macro-F1 series, its mean,
/// wall time, and echoes of the configuration. All fields except
/// wall_time_seconds are deterministic under a fixed seed.
struct RunReport {
  std::vector<double> per_window_f1;
  double mean_f1 = 0.0;
  double wall_time_seconds = 0.0;
  int windows = 0;
  RunConfig config;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
};

/// Called once per classified point, in stream order. Used by tests; a null
/// sink costs nothing.
using PredictionSink = std::function<void(std::size_t, const Prediction&)>;

/// Trains a model on the labeled prefix, then walks the stream in tumbling
/// windows: classify every point (accumulating fitness), score the window's
/// macro-F1 against the withheld truths, evolve each ensemble, decay fitness.
/// Stream labels feed only the scorer. Evolution randomness derives from
/// (seed, window, ensemble), so a fixed seed replays exactly.
RunReport run_stream(std::span<const LabeledPoint> training,
                     std::span<const LabeledPoint> stream,
                     const RunConfig& cfg,
                     const PredictionSink& sink = nullptr);

}  // namespace evostream
