// Benchmark comparing the serial reference kernels against the OpenMP
// versions, checking along the way that both produce identical results.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <omp.h>

#include "chaoscomp/boundary.hpp"
#include "chaoscomp/classifier.hpp"
#include "chaoscomp/io.hpp"
#include "chaoscomp/pipeline.hpp"
#include "chaoscomp/synthetic.hpp"

namespace {

using namespace chaoscomp;

bool same_predictions(const std::vector<Prediction>& a, const std::vector<Prediction>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].label != b[i].label) return false;
    if (a[i].per_class_bits != b[i].per_class_bits) return false;
    if (a[i].per_class_exact_bits != b[i].per_class_exact_bits) return false;
  }
  return true;
}

bool same_cv_tables(const std::vector<CvRow>& a, const std::vector<CvRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].threshold != b[i].threshold || a[i].n != b[i].n || a[i].fold != b[i].fold ||
        a[i].macro_f1 != b[i].macro_f1 || a[i].mean_macro_f1 != b[i].mean_macro_f1) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string data_path = argc > 1 ? argv[1] : "data/iris.csv";
  const int jobs = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();

  Dataset ds = load_csv(data_path);
  std::printf("dataset: %s (%zu rows, %zu features, %zu classes)\n", data_path.c_str(),
              ds.rows(), ds.cols(), ds.class_names.size());
  std::printf("threads: %d\n\n", jobs);

  // Grid search: the heaviest kernel (thresholds x n-values x folds model fits).
  HyperGrid grid = HyperGrid::defaults();
  double t0 = omp_get_wtime();
  GridSearchResult serial = grid_search_serial(ds, grid, /*seed=*/1, GridOptions{});
  double t1 = omp_get_wtime();
  GridSearchResult parallel = grid_search_parallel(ds, grid, /*seed=*/1, GridOptions{}, jobs);
  double t2 = omp_get_wtime();
  std::printf("grid search   serial %8.3fs   parallel %8.3fs   speedup %5.2fx   identical: %s\n",
              t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1),
              same_cv_tables(serial.cv_table, parallel.cv_table) ? "yes" : "NO");

  // Batch prediction on a replicated matrix, to get a measurable workload.
  FitConfig cfg;
  cfg.n = serial.best_n;
  cfg.threshold = serial.best_threshold;
  ChaosCompModel model = fit_model(ds, cfg);
  Matrix big;
  while (big.size() < 20000) {
    for (const auto& row : ds.X) big.push_back(row);
  }
  t0 = omp_get_wtime();
  std::vector<Prediction> pred_serial = predict_batch_serial(big, model);
  t1 = omp_get_wtime();
  std::vector<Prediction> pred_parallel = predict_batch_parallel(big, model, jobs);
  t2 = omp_get_wtime();
  std::printf("predict %5zu  serial %8.3fs   parallel %8.3fs   speedup %5.2fx   identical: %s\n",
              big.size(), t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1),
              same_predictions(pred_serial, pred_parallel) ? "yes" : "NO");

  // Decision-boundary lattice on a two-feature synthetic problem.
  SyntheticSpec spec;
  spec.kind = SyntheticKind::moons;
  spec.samples_per_class = 200;
  spec.seed = 7;
  Dataset moons = generate_synthetic(spec);
  ChaosCompModel moon_model = fit_model(moons, FitConfig{});
  BoundaryBounds bounds;
  bounds.xmin = -1.5;
  bounds.xmax = 2.5;
  bounds.ymin = -1.0;
  bounds.ymax = 1.5;
  t0 = omp_get_wtime();
  std::vector<BoundaryPoint> grid_serial = decision_boundary_grid(moon_model, bounds, 300, 1);
  t1 = omp_get_wtime();
  std::vector<BoundaryPoint> grid_parallel = decision_boundary_grid(moon_model, bounds, 300, jobs);
  t2 = omp_get_wtime();
  bool grids_match = grid_serial.size() == grid_parallel.size();
  if (grids_match) {
    for (std::size_t i = 0; i < grid_serial.size(); ++i) {
      if (grid_serial[i].label != grid_parallel[i].label || grid_serial[i].x != grid_parallel[i].x ||
          grid_serial[i].y != grid_parallel[i].y) {
        grids_match = false;
        break;
      }
    }
  }
  std::printf("boundary 300^2 serial %8.3fs   parallel %8.3fs   speedup %5.2fx   identical: %s\n",
              t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1), grids_match ? "yes" : "NO");

  return 0;
}
