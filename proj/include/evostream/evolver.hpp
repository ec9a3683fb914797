#pragma once

#include <optional>
#include <utility>

#include "evostream/rng.hpp"
#include "evostream/types.hpp"

namespace evostream {

enum class EvolverKind { Static, GA, PSO };

enum class GaSelection { Tournament, Roulette };

/// End-of-window population update settings. Unset optionals resolve against
/// the model at run time: ga_mutation_prob -> 1/D, ga_mutation_sigma ->
/// radius/2, pso_vmax -> 2*radius. The numeric PSO defaults are standard
/// constriction-equivalent values.
struct EvolverConfig {
  EvolverKind kind = EvolverKind::GA;

  GaSelection ga_selection = GaSelection::Tournament;
  bool ga_elitism = false;
  std::optional<double> ga_mutation_prob;
  std::optional<double> ga_mutation_sigma;

  double pso_inertia = 0.72;
  double pso_cognitive = 1.49;
  double pso_social = 1.49;
  std::optional<double> pso_vmax;
};

/// Throws on out-of-range values (probabilities outside [0,1], non-positive
/// sigma/vmax).
void validate(const EvolverConfig& config);

/// Per-classifier PSO memory: current velocity plus the best position and
/// fitness this particle has seen.
struct ParticleState {
  Vector velocity;
  Point pbest_position;
  double pbest_fitness = 0.0;
};

/// One swarm per class ensemble. gbest is the best pbest seen so far.
struct SwarmState {
  Point gbest_position;
  double gbest_fitness = 0.0;
  std::vector<ParticleState> particles;
};

/// Builds the initial swarm for an ensemble: zero velocities, pbest at the
/// current centres, gbest at the first best pbest.
SwarmState make_swarm(const Ensemble& ensemble);

/// 2-way tournament: two members drawn uniformly with replacement, the fitter
/// index returned (ties decided by a coin flip). Exposed for the selection
/// pressure tests.
int tournament_pick(const Ensemble& ensemble, Rng& rng);

/// Fitness-proportional pick; an all-zero ensemble degenerates to uniform.
int roulette_pick(const Ensemble& ensemble, Rng& rng);

/// Swaps the coordinate suffixes of two parent centres at cut index
/// (1 <= cut <= D-1).
std::pair<Vector, Vector> fixed_point_crossover(const Vector& a,
                                                const Vector& b,
                                                Eigen::Index cut);

/// Canonical per-dimension velocity rule with the per-dimension random
/// factors passed in, clamped to +-vmax. Exposed so tests can pin r1/r2.
Vector pso_velocity_update(const Vector& velocity, const Vector& position,
                           const Vector& pbest, const Vector& gbest,
                           double inertia, double cognitive, double social,
                           const Vector& r1, const Vector& r2, double vmax);

/// Generational GA step on one ensemble: tournament (or roulette) selection
/// into a parent pool of equal size, fixed-point crossover of consecutive
/// pairs on centres only, per-coordinate Gaussian mutation. Children carry
/// the ensemble's label and radius and start at fitness 0; with elitism on,
/// the fittest original member replaces the last child unchanged.
Ensemble ga_update(const Ensemble& ensemble, const EvolverConfig& config,
                   Rng& rng);

/// One PSO step: refresh pbest/gbest from current fitness (strict
/// improvement only), then move every particle by the canonical velocity
/// rule. Radius, label and fitness are untouched.
void pso_update(Ensemble& ensemble, SwarmState& swarm,
                const EvolverConfig& config, Rng& rng);

/// The never-updated baseline: returns the ensemble unchanged.
Ensemble static_update(Ensemble ensemble);

}  // namespace evostream
