#include "chaoscomp/scaling.hpp"

#include <stdexcept>
#include <string>

namespace chaoscomp {

ScalerParams minmax_fit(const Matrix& X_train) {
  if (X_train.empty()) throw std::invalid_argument("cannot fit a scaler on an empty training set");
  const std::size_t cols = X_train.front().size();
  ScalerParams params;
  params.min.assign(cols, 0.0);
  params.max.assign(cols, 0.0);
  for (std::size_t j = 0; j < cols; ++j) {
    params.min[j] = params.max[j] = X_train.front()[j];
  }
  for (const std::vector<double>& row : X_train) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix in scaler fit");
    for (std::size_t j = 0; j < cols; ++j) {
      if (row[j] < params.min[j]) params.min[j] = row[j];
      if (row[j] > params.max[j]) params.max[j] = row[j];
    }
  }
  return params;
}

std::vector<double> minmax_apply_row(const std::vector<double>& row, const ScalerParams& params) {
  const std::size_t cols = params.min.size();
  if (row.size() != cols) {
    throw std::invalid_argument("feature count " + std::to_string(row.size()) +
                                " does not match scaler width " + std::to_string(cols));
  }
  std::vector<double> out(cols, 0.0);
  for (std::size_t j = 0; j < cols; ++j) {
    const double range = params.max[j] - params.min[j];
    if (range <= 0.0) {
      out[j] = 0.0;   // constant feature
      continue;
    }
    double v = (row[j] - params.min[j]) / range;
    if (v < 0.0) v = 0.0;   // clamp out-of-range test values
    if (v > 1.0) v = 1.0;
    out[j] = v;
  }
  return out;
}

Matrix minmax_apply(const Matrix& X, const ScalerParams& params) {
  Matrix out;
  out.reserve(X.size());
  for (const std::vector<double>& row : X) out.push_back(minmax_apply_row(row, params));
  return out;
}

}  // namespace chaoscomp
