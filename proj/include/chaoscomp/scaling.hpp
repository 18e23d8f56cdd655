#pragma once
// Per-feature min-max scaling to [0, 1], fit on training rows only.

#include <vector>

namespace chaoscomp {

using Matrix = std::vector<std::vector<double>>;

struct ScalerParams {
  std::vector<double> min;   // per feature
  std::vector<double> max;   // per feature; max >= min
};

// Learns per-feature minima/maxima. Throws on an empty training set.
ScalerParams minmax_fit(const Matrix& X_train);

// (v - min) / (max - min), clamped to [0, 1]. Constant features map to 0.
std::vector<double> minmax_apply_row(const std::vector<double>& row, const ScalerParams& params);
Matrix minmax_apply(const Matrix& X, const ScalerParams& params);

}  // namespace chaoscomp
