#pragma once
// Dataset preprocessing, splitting, cross-validated hyperparameter search,
// and evaluation metrics.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chaoscomp/classifier.hpp"
#include "chaoscomp/scaling.hpp"

namespace chaoscomp {

struct Dataset {
  Matrix X;
  std::vector<int> y;                    // dense labels in [0, m)
  std::vector<std::string> feature_names;
  std::vector<std::string> class_names;  // size m

  std::size_t rows() const { return X.size(); }
  std::size_t cols() const { return X.empty() ? 0 : X.front().size(); }
  int num_classes() const { return static_cast<int>(class_names.size()); }
};

struct AugmentResult {
  Matrix X;
  bool augmented = false;
};

// Appends one column holding the sum of squares of each row's features.
// Skipped (flag false, matrix unchanged) when the input already has >= 30
// columns, where the extra column stops being numerically useful.
AugmentResult augment_sum_squares(const Matrix& X);

struct SplitResult {
  Dataset train;
  Dataset test;
  std::vector<long long> train_counts;   // per-class row counts, for reporting
  std::vector<long long> test_counts;
};

// Deterministic shuffle under `seed`, then the first ceil(rows *
// test_fraction) shuffled rows become the test set (always at least one).
// The train set keeps the shuffled order. Every class needs >= 2 rows.
SplitResult train_test_split(const Dataset& ds, double test_fraction, std::uint64_t seed);

// Keeps at most `cap` rows per class, taking the first ones in the dataset's
// current (post-shuffle) order. cap <= 0 returns the dataset unchanged.
Dataset cap_per_class(const Dataset& ds, int cap);

// Stratified k-fold partition: indices are shuffled within each class and
// dealt round-robin, so per-class proportions hold within one instance per
// fold. Returns (train_indices, val_indices) pairs; the val sets partition
// all row indices. Every class needs >= folds rows.
std::vector<std::pair<std::vector<int>, std::vector<int>>>
stratified_kfold(const Dataset& ds, int folds, std::uint64_t seed);

struct HyperGrid {
  std::vector<double> thresholds;   // default 0.01, 0.02, ..., 1.00
  std::vector<int> n_values;        // default {1, 2, 3, 4}
  double alpha = 0.01;
  int folds = 5;

  static HyperGrid defaults();
};

// One cv_table row: the fold's validation macro-F1 plus the cell mean.
struct CvRow {
  double threshold = 0.0;
  int n = 0;
  int fold = 0;
  double macro_f1 = 0.0;
  double mean_macro_f1 = 0.0;
};

struct GridSearchResult {
  double best_threshold = 0.0;
  int best_n = 0;
  double best_mean_f1 = 0.0;
  std::vector<CvRow> cv_table;   // ordered by threshold, then n, then fold
};

// Options shared by every grid cell (the grid itself fixes alpha).
struct GridOptions {
  int pad_symbol = 1;
  bool allow_augment = true;
};

struct Metrics {
  double accuracy = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  std::vector<std::vector<long long>> confusion;   // [true][predicted]
};

Metrics compute_metrics(const std::vector<int>& y_true, const std::vector<int>& y_pred, int m);

struct FitConfig {
  int n = 2;
  double threshold = 0.5;
  double alpha = 0.01;
  int pad_symbol = 1;
  bool allow_augment = true;   // apply the sum-of-squares column when k < 30
};

// Full training path on raw data: augment, fit scaler, scale, train, and
// stamp the preprocessing state plus class names into the model.
ChaosCompModel fit_model(const Dataset& ds, const FitConfig& cfg);

// Evaluates every (threshold, n) cell by k-fold cross-validation on
// ds_train, refitting preprocessing inside each fold. Cell score is the mean
// validation macro-F1; ties prefer smaller n, then smaller threshold. A fold
// whose fit fails scores 0 for that fold. The serial and parallel forms run
// the identical per-cell code path and merge results in fixed grid order, so
// outputs are bit-identical for any thread count; grid_search dispatches on
// `jobs` (<= 1 serial, 0 = OpenMP default).
GridSearchResult grid_search_serial(const Dataset& ds_train, const HyperGrid& grid,
                                    std::uint64_t seed, const GridOptions& opts = {});
GridSearchResult grid_search_parallel(const Dataset& ds_train, const HyperGrid& grid,
                                      std::uint64_t seed, const GridOptions& opts, int jobs);
GridSearchResult grid_search(const Dataset& ds_train, const HyperGrid& grid,
                             std::uint64_t seed, const GridOptions& opts = {}, int jobs = 1);

}  // namespace chaoscomp
