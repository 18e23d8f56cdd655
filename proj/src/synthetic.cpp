#include "chaoscomp/synthetic.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "chaoscomp/random_util.hpp"

namespace chaoscomp {

namespace {

constexpr double kPi = 3.14159265358979323846;

Dataset two_feature_dataset() {
  Dataset ds;
  ds.feature_names = {"x1", "x2"};
  ds.class_names = {"0", "1"};
  return ds;
}

Dataset make_gate(const std::array<int, 4>& outputs) {
  Dataset ds = two_feature_dataset();
  const double corners[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (int i = 0; i < 4; ++i) {
    ds.X.push_back({corners[i][0], corners[i][1]});
    ds.y.push_back(outputs[i]);
  }
  return ds;
}

}  // namespace

SyntheticKind parse_synthetic_kind(const std::string& name) {
  if (name == "circles") return SyntheticKind::circles;
  if (name == "moons") return SyntheticKind::moons;
  if (name == "linear") return SyntheticKind::linear;
  if (name == "xor") return SyntheticKind::xor_gate;
  if (name == "nand") return SyntheticKind::nand_gate;
  if (name == "nor") return SyntheticKind::nor_gate;
  throw std::invalid_argument("unknown synthetic kind: " + name);
}

Dataset generate_synthetic(const SyntheticSpec& spec) {
  if (spec.samples_per_class < 1) throw std::invalid_argument("samples per class must be >= 1");
  if (spec.noise < 0.0) throw std::invalid_argument("noise must be >= 0");

  switch (spec.kind) {
    case SyntheticKind::xor_gate:
      return make_gate({0, 1, 1, 0});
    case SyntheticKind::nand_gate:
      return make_gate({1, 1, 1, 0});
    case SyntheticKind::nor_gate:
      return make_gate({1, 0, 0, 0});
    default:
      break;
  }

  Dataset ds = two_feature_dataset();
  std::mt19937_64 rng(spec.seed);
  const int per_class = spec.samples_per_class;

  switch (spec.kind) {
    case SyntheticKind::circles: {
      // Two concentric rings, outer radius 1 (class 0) and inner 0.5
      // (class 1), with gaussian jitter of scale `noise`.
      for (int c = 0; c < 2; ++c) {
        const double radius = c == 0 ? 1.0 : 0.5;
        for (int i = 0; i < per_class; ++i) {
          const double theta = 2.0 * kPi * uniform_unit(rng);
          ds.X.push_back({radius * std::cos(theta) + spec.noise * gaussian(rng),
                          radius * std::sin(theta) + spec.noise * gaussian(rng)});
          ds.y.push_back(c);
        }
      }
      break;
    }
    case SyntheticKind::moons: {
      // Two interleaved half-circles: class 0 on the upper arc, class 1 on
      // a lower arc shifted right by 1 and down by 0.5.
      for (int c = 0; c < 2; ++c) {
        for (int i = 0; i < per_class; ++i) {
          const double t = kPi * uniform_unit(rng);
          double x = c == 0 ? std::cos(t) : 1.0 - std::cos(t);
          double y = c == 0 ? std::sin(t) : 0.5 - std::sin(t);
          ds.X.push_back({x + spec.noise * gaussian(rng), y + spec.noise * gaussian(rng)});
          ds.y.push_back(c);
        }
      }
      break;
    }
    case SyntheticKind::linear: {
      // Two gaussian blobs separable by a hyperplane; centers at (-2,-2)
      // and (2,2) with standard deviation 1 + noise.
      const double sd = 1.0 + spec.noise;
      for (int c = 0; c < 2; ++c) {
        const double center = c == 0 ? -2.0 : 2.0;
        for (int i = 0; i < per_class; ++i) {
          ds.X.push_back({center + sd * gaussian(rng), center + sd * gaussian(rng)});
          ds.y.push_back(c);
        }
      }
      break;
    }
    default:
      throw std::invalid_argument("unknown synthetic kind");
  }
  return ds;
}

}  // namespace chaoscomp
