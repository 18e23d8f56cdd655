#pragma once
// Seeded synthetic dataset generators: two-ring circles, interleaved moons,
// linearly separable blobs, and the three two-input logic gates.

#include <cstdint>
#include <string>

#include "chaoscomp/pipeline.hpp"

namespace chaoscomp {

enum class SyntheticKind { circles, moons, linear, xor_gate, nand_gate, nor_gate };

struct SyntheticSpec {
  SyntheticKind kind = SyntheticKind::circles;
  int samples_per_class = 100;   // gates ignore this: always the 4 corners
  double noise = 0.1;            // gaussian jitter; >= 0
  std::uint64_t seed = 1;
};

// Parses "circles", "moons", "linear", "xor", "nand", "nor".
SyntheticKind parse_synthetic_kind(const std::string& name);

// Deterministic under spec.seed. Gate datasets are the four binary corners
// with the gate output as label (class names "0"/"1" in truth-value order).
Dataset generate_synthetic(const SyntheticSpec& spec);

}  // namespace chaoscomp
