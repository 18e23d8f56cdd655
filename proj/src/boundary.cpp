#include "chaoscomp/boundary.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace chaoscomp {

namespace {

std::string format_double(double v) {
  char buf[64];
  const std::to_chars_result res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<BoundaryPoint> decision_boundary_grid(const ChaosCompModel& model,
                                                  const BoundaryBounds& bounds,
                                                  int resolution, int jobs) {
  if (model.raw_feature_count() != 2) {
    throw std::invalid_argument("decision boundary needs a model trained on 2 raw features, got " +
                                std::to_string(model.raw_feature_count()));
  }
  if (resolution < 1) throw std::invalid_argument("resolution must be >= 1");
  if (!(bounds.xmax >= bounds.xmin) || !(bounds.ymax >= bounds.ymin)) {
    throw std::invalid_argument("boundary bounds are inverted");
  }

  const int res = resolution;
  const auto coord = [res](double lo, double hi, int i) {
    if (res == 1) return lo;   // single point collapses to the lower corner
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(res - 1);
  };

  Matrix points;
  points.reserve(static_cast<std::size_t>(res) * static_cast<std::size_t>(res));
  for (int iy = 0; iy < res; ++iy) {
    const double y = coord(bounds.ymin, bounds.ymax, iy);
    for (int ix = 0; ix < res; ++ix) {
      points.push_back({coord(bounds.xmin, bounds.xmax, ix), y});
    }
  }

  const std::vector<Prediction> preds = predict_batch(points, model, jobs);
  std::vector<BoundaryPoint> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i] = BoundaryPoint{points[i][0], points[i][1], preds[i].label};
  }
  return out;
}

std::string boundary_to_csv(const std::vector<BoundaryPoint>& points) {
  std::string out = "x,y,label\n";
  for (const BoundaryPoint& p : points) {
    out += format_double(p.x);
    out += ',';
    out += format_double(p.y);
    out += ',';
    out += std::to_string(p.label);
    out += '\n';
  }
  return out;
}

}  // namespace chaoscomp
