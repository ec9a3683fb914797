#include "evostream/evolver.hpp"

#include <algorithm>
#include <stdexcept>

namespace evostream {

namespace {

double shared_radius(const Ensemble& ensemble) {
  return ensemble.classifiers.front().radius();
}

void require_non_empty(const Ensemble& ensemble, const char* who) {
  if (ensemble.classifiers.empty()) {
    throw std::invalid_argument(std::string(who) + ": empty ensemble");
  }
}

}  // namespace

void validate(const EvolverConfig& config) {
  if (config.ga_mutation_prob &&
      (*config.ga_mutation_prob < 0.0 || *config.ga_mutation_prob > 1.0)) {
    throw std::invalid_argument("ga_mutation_prob must be in [0,1]");
  }
  if (config.ga_mutation_sigma && !(*config.ga_mutation_sigma > 0.0)) {
    throw std::invalid_argument("ga_mutation_sigma must be positive");
  }
  if (config.pso_vmax && !(*config.pso_vmax > 0.0)) {
    throw std::invalid_argument("pso_vmax must be positive");
  }
}

SwarmState make_swarm(const Ensemble& ensemble) {
  require_non_empty(ensemble, "make_swarm");
  SwarmState swarm;
  swarm.particles.reserve(ensemble.classifiers.size());
  for (const auto& c : ensemble.classifiers) {
    swarm.particles.push_back(
        {Vector::Zero(c.centre().size()), c.centre(), c.fitness()});
  }
  swarm.gbest_position = swarm.particles.front().pbest_position;
  swarm.gbest_fitness = swarm.particles.front().pbest_fitness;
  for (const auto& p : swarm.particles) {
    if (p.pbest_fitness > swarm.gbest_fitness) {
      swarm.gbest_fitness = p.pbest_fitness;
      swarm.gbest_position = p.pbest_position;
    }
  }
  return swarm;
}

int tournament_pick(const Ensemble& ensemble, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, ensemble.size() - 1);
  const int a = pick(rng);
  const int b = pick(rng);
  const double fa = ensemble.classifiers[a].fitness();
  const double fb = ensemble.classifiers[b].fitness();
  if (fa > fb) return a;
  if (fb > fa) return b;
  std::uniform_int_distribution<int> coin(0, 1);
  return coin(rng) == 0 ? a : b;
}

int roulette_pick(const Ensemble& ensemble, Rng& rng) {
  double total = 0.0;
  for (const auto& c : ensemble.classifiers) total += c.fitness();
  if (total <= 0.0) {
    std::uniform_int_distribution<int> pick(0, ensemble.size() - 1);
    return pick(rng);
  }
  std::uniform_real_distribution<double> spin(0.0, total);
  const double target = spin(rng);
  double cumulative = 0.0;
  for (int i = 0; i < ensemble.size(); ++i) {
    cumulative += ensemble.classifiers[i].fitness();
    if (target < cumulative) return i;
  }
  return ensemble.size() - 1;
}

std::pair<Vector, Vector> fixed_point_crossover(const Vector& a,
                                                const Vector& b,
                                                Eigen::Index cut) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("fixed_point_crossover: dimension mismatch");
  }
  if (cut < 1 || cut >= a.size()) {
    throw std::invalid_argument("fixed_point_crossover: cut out of range");
  }
  Vector child_a = a;
  Vector child_b = b;
  const Eigen::Index tail = a.size() - cut;
  child_a.tail(tail) = b.tail(tail);
  child_b.tail(tail) = a.tail(tail);
  return {std::move(child_a), std::move(child_b)};
}

Ensemble ga_update(const Ensemble& ensemble, const EvolverConfig& config,
                   Rng& rng) {
  require_non_empty(ensemble, "ga_update");
  validate(config);

  const int n = ensemble.size();
  const Eigen::Index dim = ensemble.classifiers.front().centre().size();
  const double radius = shared_radius(ensemble);
  const double mutation_prob =
      config.ga_mutation_prob.value_or(1.0 / static_cast<double>(dim));
  const double mutation_sigma = config.ga_mutation_sigma.value_or(radius / 2.0);

  std::vector<int> pool(n);
  for (int s = 0; s < n; ++s) {
    pool[s] = config.ga_selection == GaSelection::Tournament
                  ? tournament_pick(ensemble, rng)
                  : roulette_pick(ensemble, rng);
  }

  // Consecutive pairs recombine on centres only; an odd leftover parent
  // passes through to mutation.
  std::vector<Vector> children;
  children.reserve(static_cast<std::size_t>(n));
  std::uniform_int_distribution<Eigen::Index> pick_cut(1, dim - 1);
  for (int s = 0; s + 1 < n; s += 2) {
    const Vector& pa = ensemble.classifiers[pool[s]].centre();
    const Vector& pb = ensemble.classifiers[pool[s + 1]].centre();
    if (dim >= 2) {
      auto [ca, cb] = fixed_point_crossover(pa, pb, pick_cut(rng));
      children.push_back(std::move(ca));
      children.push_back(std::move(cb));
    } else {
      children.push_back(pa);
      children.push_back(pb);
    }
  }
  if (n % 2 == 1) {
    children.push_back(ensemble.classifiers[pool[n - 1]].centre());
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> perturb(0.0, mutation_sigma);
  for (auto& child : children) {
    for (Eigen::Index d = 0; d < dim; ++d) {
      if (unit(rng) < mutation_prob) child[d] += perturb(rng);
    }
  }

  Ensemble next;
  next.label = ensemble.label;
  next.classifiers.reserve(children.size());
  for (auto& centre : children) {
    next.classifiers.emplace_back(std::move(centre), radius, ensemble.label);
  }
  if (config.ga_elitism) {
    const auto best = std::max_element(
        ensemble.classifiers.begin(), ensemble.classifiers.end(),
        [](const auto& a, const auto& b) { return a.fitness() < b.fitness(); });
    next.classifiers.back() = *best;
  }
  return next;
}

Vector pso_velocity_update(const Vector& velocity, const Vector& position,
                           const Vector& pbest, const Vector& gbest,
                           double inertia, double cognitive, double social,
                           const Vector& r1, const Vector& r2, double vmax) {
  Vector next = inertia * velocity +
                cognitive * r1.cwiseProduct(pbest - position) +
                social * r2.cwiseProduct(gbest - position);
  return next.cwiseMax(-vmax).cwiseMin(vmax);
}

void pso_update(Ensemble& ensemble, SwarmState& swarm,
                const EvolverConfig& config, Rng& rng) {
  require_non_empty(ensemble, "pso_update");
  validate(config);
  if (swarm.particles.size() != ensemble.classifiers.size()) {
    throw std::invalid_argument("pso_update: one particle per classifier");
  }

  const Eigen::Index dim = ensemble.classifiers.front().centre().size();
  const double vmax = config.pso_vmax.value_or(2.0 * shared_radius(ensemble));

  for (std::size_t i = 0; i < swarm.particles.size(); ++i) {
    const auto& c = ensemble.classifiers[i];
    auto& p = swarm.particles[i];
    if (c.centre().size() != dim || p.velocity.size() != dim) {
      throw std::invalid_argument("pso_update: dimension mismatch");
    }
    if (c.fitness() > p.pbest_fitness) {
      p.pbest_fitness = c.fitness();
      p.pbest_position = c.centre();
    }
  }
  for (const auto& p : swarm.particles) {
    if (p.pbest_fitness > swarm.gbest_fitness) {  // ties keep the incumbent
      swarm.gbest_fitness = p.pbest_fitness;
      swarm.gbest_position = p.pbest_position;
    }
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vector r1(dim);
  Vector r2(dim);
  for (std::size_t i = 0; i < swarm.particles.size(); ++i) {
    auto& c = ensemble.classifiers[i];
    auto& p = swarm.particles[i];
    for (Eigen::Index d = 0; d < dim; ++d) {
      r1[d] = unit(rng);
      r2[d] = unit(rng);
    }
    p.velocity = pso_velocity_update(
        p.velocity, c.centre(), p.pbest_position, swarm.gbest_position,
        config.pso_inertia, config.pso_cognitive, config.pso_social, r1, r2,
        vmax);
    c.set_centre(c.centre() + p.velocity);
  }
}

Ensemble static_update(Ensemble ensemble) { return ensemble; }

}  // namespace evostream
