#include "evostream/datagen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string_view>

#include "evostream/errors.hpp"

namespace evostream {

namespace {

Label class_label(int c) { return std::to_string(c); }

Vector noisy(const Vector& mean, double sigma, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, sigma);
  Vector p = mean;
  for (Eigen::Index d = 0; d < p.size(); ++d) p[d] += gauss(rng);
  return p;
}

// Fold x into [lo, hi] by mirroring at the walls.
double reflect(double x, double lo, double hi) {
  const double range = hi - lo;
  double y = std::fmod(x - lo, 2.0 * range);
  if (y < 0.0) y += 2.0 * range;
  return lo + (y <= range ? y : 2.0 * range - y);
}

}  // namespace

void validate(const DriftSpec& spec) {
  if (spec.classes < 2) throw ConfigError("drift spec: classes must be >= 2");
  if (spec.samples < spec.classes) {
    throw ConfigError("drift spec: samples must be >= classes");
  }
  if (spec.dimension < 1) throw ConfigError("drift spec: dimension must be >= 1");
  if (!(spec.noise_sigma > 0.0)) {
    throw ConfigError("drift spec: noise_sigma must be positive");
  }
  if (spec.drift_rate < 0.0) {
    throw ConfigError("drift spec: drift_rate must be >= 0");
  }
  if (!(spec.class_separation >= 0.0)) {
    throw ConfigError("drift spec: class_separation must be >= 0");
  }
  switch (spec.kind) {
    case DriftKind::Translate:
      if (spec.classes != 2) {
        throw ConfigError("translate stream: classes must be 2");
      }
      break;
    case DriftKind::Rotate:
      if (spec.dimension != 2) {
        throw ConfigError("rotate stream: dimension must be 2");
      }
      break;
    case DriftKind::RandomWalk:
      if (spec.classes != 2) {
        throw ConfigError("random-walk stream: classes must be 2");
      }
      if (spec.dimension < 2) {
        throw ConfigError("random-walk stream: dimension must be >= 2");
      }
      break;
  }
}

std::vector<LabeledPoint> gen_translating(const DriftSpec& spec) {
  validate(spec);
  if (spec.kind != DriftKind::Translate) {
    throw ConfigError("gen_translating: spec kind is not Translate");
  }
  Rng rng(split_mix64(spec.seed));
  const Eigen::Index dim = spec.dimension;
  const Vector stationary = Vector::Zero(dim);
  Vector start = Vector::Zero(dim);
  start[0] = spec.class_separation;
  const Vector diagonal = Vector::Ones(dim) / std::sqrt(double(dim));

  std::vector<LabeledPoint> stream;
  stream.reserve(static_cast<std::size_t>(spec.samples));
  for (long t = 0; t < spec.samples; ++t) {
    const int cls = static_cast<int>(t % 2);
    const Vector mean =
        cls == 0 ? stationary
                 : Vector(start + spec.drift_rate * double(t) * diagonal);
    stream.push_back({noisy(mean, spec.noise_sigma, rng), class_label(cls)});
  }
  return stream;
}

std::vector<LabeledPoint> gen_rotating(const DriftSpec& spec) {
  validate(spec);
  if (spec.kind != DriftKind::Rotate) {
    throw ConfigError("gen_rotating: spec kind is not Rotate");
  }
  Rng rng(split_mix64(spec.seed));
  const double two_pi = 2.0 * std::numbers::pi;
  const double period = spec.drift_rate > 0.0 ? two_pi / spec.drift_rate : 0.0;

  std::vector<LabeledPoint> stream;
  stream.reserve(static_cast<std::size_t>(spec.samples));
  for (long t = 0; t < spec.samples; ++t) {
    const int cls = static_cast<int>(t % spec.classes);
    const double t_eff =
        period > 0.0 ? std::fmod(static_cast<double>(t), period) : 0.0;
    const double angle =
        two_pi * cls / spec.classes + spec.drift_rate * t_eff;
    Vector mean(2);
    mean << spec.class_separation * std::cos(angle),
        spec.class_separation * std::sin(angle);
    stream.push_back({noisy(mean, spec.noise_sigma, rng), class_label(cls)});
  }
  return stream;
}

std::vector<Vector> random_walk_path(long steps, int dimension,
                                     double step_sigma, double lo, double hi,
                                     Vector start, Rng& rng) {
  if (hi <= lo) throw ConfigError("random_walk_path: empty bounding box");
  std::normal_distribution<double> step(0.0, step_sigma);
  std::vector<Vector> path;
  path.reserve(static_cast<std::size_t>(steps) + 1);
  Vector pos = std::move(start);
  path.push_back(pos);
  for (long t = 0; t < steps; ++t) {
    for (Eigen::Index d = 0; d < dimension; ++d) {
      pos[d] = reflect(pos[d] + step(rng), lo, hi);
    }
    path.push_back(pos);
  }
  return path;
}

std::vector<LabeledPoint> gen_random_walk(const DriftSpec& spec) {
  validate(spec);
  if (spec.kind != DriftKind::RandomWalk) {
    throw ConfigError("gen_random_walk: spec kind is not RandomWalk");
  }
  const Eigen::Index dim = spec.dimension;
  const double bound = std::max(spec.class_separation, 1.0);

  // Each class walks on its own rng sub-stream so the paths are independent
  // of the interleaving; noise draws use a third.
  const long per_class_0 = (spec.samples + 1) / 2;
  const long per_class_1 = spec.samples / 2;
  Vector start0 = Vector::Zero(dim);
  Vector start1 = Vector::Zero(dim);
  start0[0] = -spec.class_separation / 2.0;
  start1[0] = spec.class_separation / 2.0;

  Rng rng_walk0(derive_seed(spec.seed, 1));
  Rng rng_walk1(derive_seed(spec.seed, 2));
  Rng rng_noise(derive_seed(spec.seed, 0));
  const auto path0 = random_walk_path(per_class_0, static_cast<int>(dim),
                                      spec.drift_rate, -bound, bound,
                                      std::move(start0), rng_walk0);
  const auto path1 = random_walk_path(per_class_1, static_cast<int>(dim),
                                      spec.drift_rate, -bound, bound,
                                      std::move(start1), rng_walk1);

  std::vector<LabeledPoint> stream;
  stream.reserve(static_cast<std::size_t>(spec.samples));
  long emitted0 = 0;
  long emitted1 = 0;
  for (long t = 0; t < spec.samples; ++t) {
    const int cls = static_cast<int>(t % 2);
    const Vector& mean = cls == 0 ? path0[emitted0++] : path1[emitted1++];
    stream.push_back(
        {noisy(mean, spec.noise_sigma, rng_noise), class_label(cls)});
  }
  return stream;
}

std::vector<LabeledPoint> generate(const DriftSpec& spec) {
  switch (spec.kind) {
    case DriftKind::Translate:
      return gen_translating(spec);
    case DriftKind::Rotate:
      return gen_rotating(spec);
    case DriftKind::RandomWalk:
      return gen_random_walk(spec);
  }
  throw ConfigError("generate: unknown drift kind");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = line.find(',', begin);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(begin)));
      break;
    }
    cells.push_back(trim(line.substr(begin, comma - begin)));
    begin = comma + 1;
  }
  return cells;
}

}  // namespace

std::pair<std::vector<LabeledPoint>, std::vector<Label>> load_csv_stream(
    const std::string& path, int label_column, bool header) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");

  std::vector<LabeledPoint> stream;
  std::vector<Label> labels;
  std::size_t arity = 0;
  long line_no = 0;
  std::string line;
  bool skip_next = header;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skip_next) {
      skip_next = false;
      continue;
    }
    if (line.empty() && in.peek() == std::char_traits<char>::eof()) {
      break;  // trailing newline
    }
    const auto cells = split_cells(line);
    if (arity == 0) {
      arity = cells.size();
      if (arity < 2) {
        throw DataError("line " + std::to_string(line_no) +
                        ": need at least one feature and a label column");
      }
      if (label_column < 0 || static_cast<std::size_t>(label_column) >= arity) {
        throw DataError("label column " + std::to_string(label_column) +
                        " out of range for " + std::to_string(arity) +
                        " columns");
      }
    } else if (cells.size() != arity) {
      throw DataError("line " + std::to_string(line_no) + ": expected " +
                      std::to_string(arity) + " cells, got " +
                      std::to_string(cells.size()));
    }

    Vector point(static_cast<Eigen::Index>(arity) - 1);
    Label label;
    Eigen::Index feature = 0;
    for (std::size_t col = 0; col < arity; ++col) {
      if (static_cast<int>(col) == label_column) {
        if (cells[col].empty()) {
          throw DataError("line " + std::to_string(line_no) + ": empty label");
        }
        label = Label(cells[col]);
        continue;
      }
      double value = 0.0;
      const auto cell = cells[col];
      const auto [end, ec] =
          std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (ec != std::errc{} || end != cell.data() + cell.size() ||
          !std::isfinite(value)) {
        throw DataError("line " + std::to_string(line_no) + ", column " +
                        std::to_string(col) + ": not a finite real: '" +
                        std::string(cell) + "'");
      }
      point[feature++] = value;
    }
    stream.push_back({std::move(point), std::move(label)});
  }
  if (stream.empty()) throw DataError("'" + path + "' holds no data rows");

  for (const auto& lp : stream) labels.push_back(lp.label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return {std::move(stream), std::move(labels)};
}

}  // namespace evostream
