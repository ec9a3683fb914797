#include "evostream/model.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace evostream {

namespace {

bool ensemble_recognises(const Ensemble& e, const Point& p) {
  for (const auto& c : e.classifiers) {
    if (c.recognises(p)) return true;
  }
  return false;
}

}  // namespace

Model initialize_model(std::span<const LabeledPoint> training, int num_agents,
                       double radius, Rng& rng) {
  if (training.empty()) {
    throw std::invalid_argument("initialize_model: empty training set");
  }
  if (num_agents < 1) {
    throw std::invalid_argument("initialize_model: num_agents must be >= 1");
  }
  if (!(radius > 0.0)) {
    throw std::invalid_argument("initialize_model: radius must be positive");
  }
  const Eigen::Index dim = training.front().point.size();
  if (dim < 1) {
    throw std::invalid_argument("initialize_model: zero-dimensional points");
  }
  for (const auto& lp : training) {
    if (lp.point.size() != dim) {
      throw std::invalid_argument(
          "initialize_model: inconsistent training dimensions");
    }
  }

  // Partition by class, preserving caller order within each class.
  std::map<Label, std::vector<const Point*>> by_class;
  for (const auto& lp : training) by_class[lp.label].push_back(&lp.point);

  Model model;
  model.num_agents = num_agents;
  model.radius = radius;
  model.dimension = dim;

  for (const auto& [label, points] : by_class) {
    Ensemble e;
    e.label = label;
    e.classifiers.reserve(static_cast<std::size_t>(num_agents));
    for (const Point* p : points) {
      if (e.classifiers.empty()) {
        e.classifiers.emplace_back(*p, radius, label);
        continue;
      }
      if (ensemble_recognises(e, *p)) continue;
      if (e.size() >= num_agents) {
        model.warnings.push_back("class '" + label +
                                 "': agent cap hit with training points left; "
                                 "radius likely too small");
        break;
      }
      e.classifiers.emplace_back(*p, radius, label);
    }
    if (e.size() < num_agents) {
      pad_subpopulation(e, num_agents - e.size(), radius, rng);
    }
    model.ensembles.push_back(std::move(e));
  }
  return model;
}

void pad_subpopulation(Ensemble& ensemble, int k, double radius, Rng& rng) {
  if (ensemble.classifiers.empty()) {
    throw std::invalid_argument("pad_subpopulation: empty ensemble");
  }
  if (k < 1) {
    throw std::invalid_argument("pad_subpopulation: k must be >= 1");
  }
  const std::size_t pool_size = ensemble.classifiers.size();
  const Eigen::Index dim = ensemble.classifiers.front().centre().size();
  std::vector<std::size_t> order(pool_size);
  std::uniform_int_distribution<Eigen::Index> pick_dim(0, dim - 1);

  std::size_t cursor = pool_size;  // forces a shuffle on first use
  for (int added = 0; added < k; ++added) {
    if (cursor == pool_size) {
      for (std::size_t i = 0; i < pool_size; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      cursor = 0;
    }
    Point centre = ensemble.classifiers[order[cursor++]].centre();
    const Eigen::Index d = pick_dim(rng);
    std::normal_distribution<double> perturb(centre[d], radius);
    centre[d] = perturb(rng);
    ensemble.classifiers.emplace_back(std::move(centre), radius,
                                      ensemble.label);
  }
}

Prediction classify(Model& model, const Point& p, Mode mode) {
  if (model.ensembles.empty()) {
    throw std::invalid_argument("classify: empty model");
  }
  if (p.size() != model.dimension) {
    throw std::invalid_argument("classify: point dimension mismatch");
  }

  // One pass over every classifier; each distance is computed exactly once.
  struct Hit {
    MicroClassifier* classifier;
    std::size_t ensemble_index;
  };
  std::vector<Hit> recognisers;
  std::size_t labels_seen = 0;
  std::size_t last_ensemble = 0;

  MicroClassifier* winner = nullptr;
  double winner_dist = std::numeric_limits<double>::infinity();
  const MicroClassifier* nearest = nullptr;
  double nearest_dist = std::numeric_limits<double>::infinity();

  for (std::size_t ei = 0; ei < model.ensembles.size(); ++ei) {
    for (auto& c : model.ensembles[ei].classifiers) {
      const double d = (c.centre() - p).norm();
      ++model.distance_evaluations;
      if (d < nearest_dist) {
        nearest_dist = d;
        nearest = &c;
      }
      if (d <= c.radius()) {
        c.reward();
        recognisers.push_back({&c, ei});
        if (labels_seen == 0 || last_ensemble != ei) {
          // ensembles are scanned in order, so new labels arrive in blocks
          ++labels_seen;
          last_ensemble = ei;
        }
        if (d < winner_dist) {
          winner_dist = d;
          winner = &c;
        }
      }
    }
  }

  if (winner != nullptr) {
    if (labels_seen > 1) {
      for (auto& hit : recognisers) hit.classifier->reset_fitness();
    }
    return Prediction{winner->label(), winner_dist,
                      static_cast<int>(recognisers.size())};
  }

  if (mode == Mode::Force) {
    return Prediction{nearest->label(), nearest_dist, 0};
  }
  return Prediction{std::nullopt, nearest_dist, 0};
}

void decay_fitness(Model& model) {
  for (auto& e : model.ensembles) {
    for (auto& c : e.classifiers) c.decay();
  }
}

}  // namespace evostream
