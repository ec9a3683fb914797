#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "evostream/rng.hpp"
#include "evostream/types.hpp"

namespace evostream {

enum class DriftKind { Translate, Rotate, RandomWalk };

/// Parameterized analog of the benchmark stream dynamics. drift_rate is
/// feature-space displacement per emitted sample for Translate/RandomWalk and
/// radians per emitted sample for Rotate.
struct DriftSpec {
  DriftKind kind = DriftKind::Translate;
  int classes = 2;
  int dimension = 2;
  long samples = 16000;
  double class_separation = 8.0;
  double drift_rate = 0.0;
  double noise_sigma = 0.25;
  std::uint64_t seed = 0;
};

/// Throws ConfigError when the spec violates its invariants (classes >= 2,
/// samples >= classes, per-kind class/dimension constraints, noise > 0,
/// drift >= 0).
void validate(const DriftSpec& spec);

/// Two interleaved Gaussian classes: class 0 stationary at the origin, class
/// 1 starting class_separation away on the first axis with its mean moving
/// drift_rate per emitted sample along the unit diagonal.
std::vector<LabeledPoint> gen_translating(const DriftSpec& spec);

/// classes Gaussians on a circle of radius class_separation, class i at angle
/// 2*pi*i/classes + drift_rate * t. Angles reduce t modulo the closed-form
/// period so a full rotation reproduces the start exactly.
std::vector<LabeledPoint> gen_rotating(const DriftSpec& spec);

/// Two Gaussian classes whose means follow independent bounded random walks:
/// per emitted sample the emitting class takes one Gaussian step of sigma
/// drift_rate per dimension, reflected into the bounding box
/// [-class_separation, class_separation]^D.
std::vector<LabeledPoint> gen_random_walk(const DriftSpec& spec);

/// Dispatches on spec.kind.
std::vector<LabeledPoint> generate(const DriftSpec& spec);

/// The reflected walk itself (one position per step, the start included as
/// step 0). Exposed for direct statistical checks.
std::vector<Vector> random_walk_path(long steps, int dimension,
                                     double step_sigma, double lo, double hi,
                                     Vector start, Rng& rng);

/// Reads a comma-separated stream file: optional single header row, decimal
/// reals, one 0-based label column holding opaque tokens, no quoting. Returns
/// the points in row order and the sorted set of labels seen. Malformed rows
/// are reported with their 1-based line number.
std::pair<std::vector<LabeledPoint>, std::vector<Label>> load_csv_stream(
    const std::string& path, int label_column, bool header);

}  // namespace evostream
