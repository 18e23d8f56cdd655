#pragma once
// Decision-boundary export: classify a lattice of 2-D points through the
// full predict path and emit CSV-ready rows for external plotting.

#include <string>
#include <vector>

#include "chaoscomp/classifier.hpp"

namespace chaoscomp {

struct BoundaryPoint {
  double x = 0.0;
  double y = 0.0;
  int label = 0;
};

struct BoundaryBounds {
  double xmin = 0.0, xmax = 1.0;
  double ymin = 0.0, ymax = 1.0;
};

// resolution x resolution lattice over the bounds (resolution 1 collapses to
// the lower corner), row-major with y as the outer coordinate. The model
// must have been trained on exactly 2 raw features. `jobs` parallelizes the
// prediction pass without changing any output bit.
std::vector<BoundaryPoint> decision_boundary_grid(const ChaosCompModel& model,
                                                  const BoundaryBounds& bounds,
                                                  int resolution, int jobs = 1);

// Columns: x,y,label.
std::string boundary_to_csv(const std::vector<BoundaryPoint>& points);

}  // namespace chaoscomp
