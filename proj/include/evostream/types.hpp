#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace evostream {

using Vector = Eigen::VectorXd;
using Point = Vector;

// Class identifiers are opaque tokens; lexicographic order fixes every
// tie-break in the project.
using Label = std::string;

/// What to do with a point no classifier recognises: abstain, or fall back to
/// the label of the globally nearest centre.
enum class Mode { Abstain, Force };

struct LabeledPoint {
  Point point;
  Label label;
};

/// Hypersphere one-class classifier: centre c, radius r, label y, fitness f.
/// The centre moves under population updates; radius and label are fixed at
/// construction; fitness never goes negative.
class MicroClassifier {
 public:
  MicroClassifier(Point centre, double radius, Label label,
                  double fitness = 0.0)
      : centre_(std::move(centre)),
        radius_(radius),
        label_(std::move(label)),
        fitness_(std::max(fitness, 0.0)) {}

  const Point& centre() const { return centre_; }
  void set_centre(Point c) { centre_ = std::move(c); }

  double radius() const { return radius_; }
  const Label& label() const { return label_; }
  double fitness() const { return fitness_; }

  bool recognises(const Point& p) const {
    return (centre_ - p).norm() <= radius_;
  }

  void reward() { fitness_ += 1.0; }
  void reset_fitness() { fitness_ = 0.0; }
  void decay() { fitness_ = std::max(fitness_ - 1.0, 0.0); }

 private:
  Point centre_;
  double radius_;
  Label label_;
  double fitness_;
};

/// Fixed-size subpopulation of same-label classifiers; one per class.
struct Ensemble {
  Label label;
  std::vector<MicroClassifier> classifiers;

  int size() const { return static_cast<int>(classifiers.size()); }
};

/// The trained classifier: one ensemble per class seen at training time,
/// kept sorted by label. distance_evaluations counts every distance computed
/// by classify, for cost instrumentation.
struct Model {
  std::vector<Ensemble> ensembles;
  int num_agents = 0;
  double radius = 0.0;
  Eigen::Index dimension = 0;
  std::vector<std::string> warnings;
  std::uint64_t distance_evaluations = 0;

  std::vector<Label> label_set() const {
    std::vector<Label> out;
    out.reserve(ensembles.size());
    for (const auto& e : ensembles) out.push_back(e.label);
    return out;
  }

  int total_classifiers() const {
    int n = 0;
    for (const auto& e : ensembles) n += e.size();
    return n;
  }
};

/// Label-or-unrecognised, plus the distance from the winning (or nearest)
/// centre as confidence — smaller means more confident.
struct Prediction {
  std::optional<Label> label;
  double confidence = 0.0;
  int recognisers = 0;

  bool unrecognised() const { return !label.has_value(); }
};

}  // namespace evostream
