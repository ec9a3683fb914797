#pragma once

#include <span>

#include "evostream/rng.hpp"
#include "evostream/types.hpp"

namespace evostream {

/// Builds one ensemble per training class, consuming points in caller order:
/// the first point of a class seeds a classifier, later points only create a
/// new one when no existing member of that ensemble recognises them. Hitting
/// the num_agents cap with unrecognised points left records a "radius likely
/// too small" warning; a shortfall is padded with pad_subpopulation. Every
/// ensemble ends with exactly num_agents members.
Model initialize_model(std::span<const LabeledPoint> training, int num_agents,
                       double radius, Rng& rng);

/// Adds k classifiers to a non-empty ensemble. Each is a copy of a sampled
/// existing centre with one uniformly chosen coordinate redrawn from a
/// Gaussian centred on the old value (sigma = radius). Sampling is without
/// replacement per round over the members present at entry; rounds restart
/// when exhausted.
void pad_subpopulation(Ensemble& ensemble, int k, double radius, Rng& rng);

/// Classifies p against every classifier in the model. Every recogniser
/// (dist <= radius) gains one fitness point; the nearest recogniser wins and
/// its label is returned with the distance as confidence. Recognisers from
/// two or more classes are all reset to zero fitness. With no recogniser:
/// Abstain returns unrecognised, Force returns the globally nearest centre's
/// label without fitness side-effects. Exactly one distance per classifier is
/// evaluated per call.
Prediction classify(Model& model, const Point& p, Mode mode);

/// Linear fitness decay, floored at zero: f <- max(f - 1, 0) for every
/// classifier.
void decay_fitness(Model& model);

}  // namespace evostream
