#include "chaoscomp/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chaoscomp/random_util.hpp"

namespace chaoscomp {

namespace {

constexpr std::size_t kAugmentFeatureLimit = 30;

void check_dataset(const Dataset& ds) {
  if (ds.X.size() != ds.y.size()) throw std::invalid_argument("row count of X does not match y");
  for (int label : ds.y) {
    if (label < 0 || label >= ds.num_classes()) {
      throw std::invalid_argument("label " + std::to_string(label) + " outside [0, " +
                                  std::to_string(ds.num_classes()) + ")");
    }
  }
}

std::vector<long long> class_counts(const std::vector<int>& y, int m) {
  std::vector<long long> counts(static_cast<std::size_t>(m), 0);
  for (int label : y) ++counts[static_cast<std::size_t>(label)];
  return counts;
}

Dataset take_rows(const Dataset& ds, const std::vector<int>& indices) {
  Dataset out;
  out.feature_names = ds.feature_names;
  out.class_names = ds.class_names;
  out.X.reserve(indices.size());
  out.y.reserve(indices.size());
  for (int i : indices) {
    out.X.push_back(ds.X[static_cast<std::size_t>(i)]);
    out.y.push_back(ds.y[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace

AugmentResult augment_sum_squares(const Matrix& X) {
  AugmentResult result;
  result.X = X;
  if (X.empty() || X.front().size() >= kAugmentFeatureLimit) return result;
  for (std::vector<double>& row : result.X) {
    double ss = 0.0;
    for (double v : row) ss += v * v;
    row.push_back(ss);
  }
  result.augmented = true;
  return result;
}

SplitResult train_test_split(const Dataset& ds, double test_fraction, std::uint64_t seed) {
  check_dataset(ds);
  if (!(test_fraction > 0.0) || !(test_fraction < 1.0)) {
    throw std::invalid_argument("test fraction must lie in (0,1)");
  }
  const std::vector<long long> counts = class_counts(ds.y, ds.num_classes());
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] < 2) {
      throw std::invalid_argument("class " + std::to_string(c) +
                                  " has fewer than 2 instances; cannot split");
    }
  }

  std::vector<int> order(ds.rows());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  shuffle_in_place(order, rng);

  const std::size_t n_test = static_cast<std::size_t>(
      std::ceil(static_cast<double>(ds.rows()) * test_fraction));
  const std::vector<int> test_idx(order.begin(), order.begin() + static_cast<long>(n_test));
  const std::vector<int> train_idx(order.begin() + static_cast<long>(n_test), order.end());

  if (train_idx.empty()) throw std::invalid_argument("test fraction leaves no training rows");

  SplitResult result;
  result.train = take_rows(ds, train_idx);
  result.test = take_rows(ds, test_idx);
  result.train_counts = class_counts(result.train.y, ds.num_classes());
  result.test_counts = class_counts(result.test.y, ds.num_classes());
  return result;
}

Dataset cap_per_class(const Dataset& ds, int cap) {
  check_dataset(ds);
  if (cap <= 0) return ds;
  std::vector<int> kept;
  std::vector<int> taken(static_cast<std::size_t>(ds.num_classes()), 0);
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    int& t = taken[static_cast<std::size_t>(ds.y[i])];
    if (t < cap) {
      ++t;
      kept.push_back(static_cast<int>(i));
    }
  }
  return take_rows(ds, kept);
}

std::vector<std::pair<std::vector<int>, std::vector<int>>>
stratified_kfold(const Dataset& ds, int folds, std::uint64_t seed) {
  check_dataset(ds);
  if (folds < 2) throw std::invalid_argument("need at least 2 folds");

  // Shuffle indices within each class, then deal them round-robin so every
  // fold's class proportions match the dataset within one instance.
  std::vector<std::vector<int>> by_class(static_cast<std::size_t>(ds.num_classes()));
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    by_class[static_cast<std::size_t>(ds.y[i])].push_back(static_cast<int>(i));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> val_sets(static_cast<std::size_t>(folds));
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    if (by_class[c].size() < static_cast<std::size_t>(folds)) {
      throw std::invalid_argument("class " + std::to_string(c) + " has " +
                                  std::to_string(by_class[c].size()) +
                                  " instances, fewer than " + std::to_string(folds) + " folds");
    }
    shuffle_in_place(by_class[c], rng);
    for (std::size_t i = 0; i < by_class[c].size(); ++i) {
      val_sets[i % static_cast<std::size_t>(folds)].push_back(by_class[c][i]);
    }
  }

  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  out.reserve(static_cast<std::size_t>(folds));
  std::vector<char> in_val(ds.rows(), 0);
  for (std::vector<int>& val : val_sets) {
    std::sort(val.begin(), val.end());
    std::fill(in_val.begin(), in_val.end(), 0);
    for (int i : val) in_val[static_cast<std::size_t>(i)] = 1;
    std::vector<int> train;
    train.reserve(ds.rows() - val.size());
    for (std::size_t i = 0; i < ds.rows(); ++i) {
      if (!in_val[i]) train.push_back(static_cast<int>(i));
    }
    out.emplace_back(std::move(train), std::move(val));
  }
  return out;
}

HyperGrid HyperGrid::defaults() {
  HyperGrid grid;
  grid.thresholds.reserve(100);
  for (int i = 1; i <= 100; ++i) grid.thresholds.push_back(static_cast<double>(i) / 100.0);
  grid.n_values = {1, 2, 3, 4};
  grid.alpha = 0.01;
  grid.folds = 5;
  return grid;
}

Metrics compute_metrics(const std::vector<int>& y_true, const std::vector<int>& y_pred, int m) {
  if (y_true.size() != y_pred.size()) {
    throw std::invalid_argument("prediction count does not match label count");
  }
  if (y_true.empty()) throw std::invalid_argument("empty evaluation set");
  if (m < 1) throw std::invalid_argument("need at least one class");

  Metrics metrics;
  metrics.confusion.assign(static_cast<std::size_t>(m),
                           std::vector<long long>(static_cast<std::size_t>(m), 0));
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (y_true[i] < 0 || y_true[i] >= m || y_pred[i] < 0 || y_pred[i] >= m) {
      throw std::invalid_argument("label outside [0, " + std::to_string(m) + ")");
    }
    ++metrics.confusion[static_cast<std::size_t>(y_true[i])][static_cast<std::size_t>(y_pred[i])];
  }

  long long correct = 0;
  double precision_sum = 0.0, recall_sum = 0.0, f1_sum = 0.0;
  for (int c = 0; c < m; ++c) {
    const std::size_t cc = static_cast<std::size_t>(c);
    long long tp = metrics.confusion[cc][cc];
    long long predicted = 0, actual = 0;
    for (int k = 0; k < m; ++k) {
      predicted += metrics.confusion[static_cast<std::size_t>(k)][cc];
      actual += metrics.confusion[cc][static_cast<std::size_t>(k)];
    }
    correct += tp;
    const double precision = predicted > 0 ? static_cast<double>(tp) / static_cast<double>(predicted) : 0.0;
    const double recall = actual > 0 ? static_cast<double>(tp) / static_cast<double>(actual) : 0.0;
    const double f1 = precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
    precision_sum += precision;
    recall_sum += recall;
    f1_sum += f1;
  }
  metrics.accuracy = static_cast<double>(correct) / static_cast<double>(y_true.size());
  metrics.macro_precision = precision_sum / static_cast<double>(m);
  metrics.macro_recall = recall_sum / static_cast<double>(m);
  metrics.macro_f1 = f1_sum / static_cast<double>(m);
  return metrics;
}

ChaosCompModel fit_model(const Dataset& ds, const FitConfig& cfg) {
  check_dataset(ds);
  if (ds.X.empty()) throw std::invalid_argument("empty training set");
  if (ds.cols() < 2) throw std::invalid_argument("at least two features required");

  AugmentResult aug;
  if (cfg.allow_augment) {
    aug = augment_sum_squares(ds.X);
  } else {
    aug.X = ds.X;
    aug.augmented = false;
  }
  const ScalerParams scaler = minmax_fit(aug.X);
  const Matrix scaled = minmax_apply(aug.X, scaler);

  TrainConfig tc;
  tc.n = cfg.n;
  tc.threshold = cfg.threshold;
  tc.alpha = cfg.alpha;
  tc.pad_symbol = cfg.pad_symbol;
  ChaosCompModel model = train(scaled, ds.y, tc);
  model.augment = aug.augmented;
  model.scaler = scaler;
  model.class_names = ds.class_names;
  if (model.classes.size() != ds.class_names.size()) {
    throw std::invalid_argument("class " + std::to_string(model.classes.size()) +
                                " is absent from the training rows");
  }
  return model;
}

namespace {

// Mean validation macro-F1 of one (threshold, n) cell, one entry per fold.
// Identical code runs for the serial and parallel searches; a fold whose fit
// fails contributes 0 instead of aborting the search.
std::vector<double> evaluate_grid_cell(
    const Dataset& ds, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& folds,
    double threshold, int n, double alpha, const GridOptions& opts) {
  std::vector<double> scores;
  scores.reserve(folds.size());
  for (const auto& [train_idx, val_idx] : folds) {
    try {
      const Dataset fold_train = take_rows(ds, train_idx);
      const Dataset fold_val = take_rows(ds, val_idx);
      FitConfig cfg;
      cfg.n = n;
      cfg.threshold = threshold;
      cfg.alpha = alpha;
      cfg.pad_symbol = opts.pad_symbol;
      cfg.allow_augment = opts.allow_augment;
      const ChaosCompModel model = fit_model(fold_train, cfg);
      std::vector<int> pred;
      pred.reserve(fold_val.rows());
      for (const Prediction& p : predict_batch_serial(fold_val.X, model)) pred.push_back(p.label);
      scores.push_back(compute_metrics(fold_val.y, pred, ds.num_classes()).macro_f1);
    } catch (const std::exception&) {
      scores.push_back(0.0);
    }
  }
  return scores;
}

struct GridCell {
  double threshold;
  int n;
};

GridSearchResult assemble_result(const HyperGrid& grid, const std::vector<GridCell>& cells,
                                 const std::vector<std::vector<double>>& fold_scores) {
  GridSearchResult result;
  result.cv_table.reserve(cells.size() * static_cast<std::size_t>(grid.folds));
  bool have_best = false;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::vector<double>& scores = fold_scores[i];
    double mean = 0.0;
    for (double s : scores) mean += s;
    mean /= static_cast<double>(scores.size());
    for (std::size_t f = 0; f < scores.size(); ++f) {
      CvRow row;
      row.threshold = cells[i].threshold;
      row.n = cells[i].n;
      row.fold = static_cast<int>(f);
      row.macro_f1 = scores[f];
      row.mean_macro_f1 = mean;
      result.cv_table.push_back(row);
    }
    // Maximize the mean; break ties toward the simpler model (smaller n),
    // then the smaller threshold.
    const bool better =
        !have_best || mean > result.best_mean_f1 ||
        (mean == result.best_mean_f1 &&
         (cells[i].n < result.best_n ||
          (cells[i].n == result.best_n && cells[i].threshold < result.best_threshold)));
    if (better) {
      have_best = true;
      result.best_mean_f1 = mean;
      result.best_threshold = cells[i].threshold;
      result.best_n = cells[i].n;
    }
  }
  return result;
}

std::vector<GridCell> enumerate_cells(const HyperGrid& grid) {
  if (grid.thresholds.empty() || grid.n_values.empty()) {
    throw std::invalid_argument("empty hyperparameter grid");
  }
  for (double t : grid.thresholds) {
    if (!(t > 0.0) || t > 1.0) throw std::invalid_argument("grid threshold outside (0,1]");
  }
  std::vector<GridCell> cells;
  cells.reserve(grid.thresholds.size() * grid.n_values.size());
  for (double t : grid.thresholds) {
    for (int n : grid.n_values) cells.push_back(GridCell{t, n});
  }
  return cells;
}

}  // namespace

GridSearchResult grid_search_serial(const Dataset& ds_train, const HyperGrid& grid,
                                    std::uint64_t seed, const GridOptions& opts) {
  const std::vector<GridCell> cells = enumerate_cells(grid);
  const auto folds = stratified_kfold(ds_train, grid.folds, seed);
  std::vector<std::vector<double>> fold_scores(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    fold_scores[i] =
        evaluate_grid_cell(ds_train, folds, cells[i].threshold, cells[i].n, grid.alpha, opts);
  }
  return assemble_result(grid, cells, fold_scores);
}

GridSearchResult grid_search_parallel(const Dataset& ds_train, const HyperGrid& grid,
                                      std::uint64_t seed, const GridOptions& opts, int jobs) {
  const std::vector<GridCell> cells = enumerate_cells(grid);
  const auto folds = stratified_kfold(ds_train, grid.folds, seed);
  std::vector<std::vector<double>> fold_scores(cells.size());
#ifdef _OPENMP
  if (jobs <= 0) jobs = omp_get_max_threads();
  const long long count = static_cast<long long>(cells.size());
  // Cells are independent; results land in index-addressed slots so the
  // merge order is the fixed grid order regardless of scheduling.
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long long i = 0; i < count; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    fold_scores[k] =
        evaluate_grid_cell(ds_train, folds, cells[k].threshold, cells[k].n, grid.alpha, opts);
  }
#else
  (void)jobs;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    fold_scores[i] =
        evaluate_grid_cell(ds_train, folds, cells[i].threshold, cells[i].n, grid.alpha, opts);
  }
#endif
  return assemble_result(grid, cells, fold_scores);
}

GridSearchResult grid_search(const Dataset& ds_train, const HyperGrid& grid, std::uint64_t seed,
                             const GridOptions& opts, int jobs) {
  if (jobs == 1) return grid_search_serial(ds_train, grid, seed, opts);
  return grid_search_parallel(ds_train, grid, seed, opts, jobs);
}

}  // namespace chaoscomp
