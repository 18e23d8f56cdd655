#pragma once
// Compression-based classifier: one n-th return map per class, built from
// smoothed word statistics; a test instance is assigned to the class whose
// map encodes its symbol sequence in the fewest bits.

#include <optional>
#include <string>
#include <vector>

#include "chaoscomp/interval_coder.hpp"
#include "chaoscomp/scaling.hpp"
#include "chaoscomp/symbolic.hpp"

namespace chaoscomp {

// Smoothed word distribution of one class.
struct ClassDistribution {
  int class_id = 0;
  std::vector<double> probs;   // length 2^n, strictly positive, sums to 1
};

struct TrainConfig {
  int n = 2;
  double threshold = 0.5;
  double alpha = 0.01;
  int pad_symbol = 1;
};

// Everything needed to classify a raw feature vector: preprocessing
// settings, the scaler learned on training data, and the per-class word
// distributions (each of which defines one return map).
struct ChaosCompModel {
  int n = 2;
  double threshold = 0.5;
  double alpha = 0.01;
  int pad_symbol = 1;
  bool augment = false;          // sum-of-squares feature appended before scaling
  ScalerParams scaler;           // covers the augmented feature count
  std::vector<ClassDistribution> classes;
  std::vector<std::string> class_names;

  std::size_t num_classes() const { return classes.size(); }
  // Raw feature count expected by predict (scaler width minus the augmented column).
  std::size_t raw_feature_count() const { return scaler.min.size() - (augment ? 1 : 0); }
};

struct Prediction {
  int label = 0;
  std::vector<long long> per_class_bits;
  std::vector<double> per_class_exact_bits;
  bool tie_broken = false;
  // Cosine similarity of the smoothed test distribution against every class
  // distribution; only computed when the bit counts tie. The winning label
  // maximizes similarity over the tied classes.
  std::optional<std::vector<double>> similarity;
};

// Averages the per-instance word frequency vectors of one class and applies
// additive smoothing: p_w = (sum_i p_{i,w} + alpha) / (N + 2^n * alpha).
ClassDistribution fit_class_distribution(const std::vector<BitSequence>& instances,
                                         int n, double alpha, int pad_symbol,
                                         int class_id = 0);

// Binarizes each already-scaled row and fits one ClassDistribution per class
// (labels must be dense 0..m-1 and every class must appear). The returned
// model carries an identity scaler; fit_model in the pipeline fills in real
// preprocessing state.
ChaosCompModel train(const Matrix& X, const std::vector<int>& y, const TrainConfig& config);

// Inner product over the product of norms. Throws on a zero vector.
double cosine_similarity(const std::vector<double>& u, const std::vector<double>& v);

// Full prediction path for one raw feature vector: augment (if flagged),
// scale with clamping, binarize, pad, extract words, then pick the class
// with the fewest ceil-bits. Ties fall back to cosine similarity between the
// instance's own smoothed word distribution and each class distribution;
// a similarity tie resolves to the lowest class index.
Prediction predict_one(const std::vector<double>& x, const ChaosCompModel& model);

// Element-wise predict_one, order preserved. The serial and parallel forms
// run the identical per-row code path, so their outputs match bit for bit;
// predict_batch dispatches between them (jobs <= 1 means serial, 0 picks the
// OpenMP default thread count).
std::vector<Prediction> predict_batch_serial(const Matrix& X, const ChaosCompModel& model);
std::vector<Prediction> predict_batch_parallel(const Matrix& X, const ChaosCompModel& model, int jobs);
std::vector<Prediction> predict_batch(const Matrix& X, const ChaosCompModel& model, int jobs = 1);

// Materializes the return map defined by one class's word distribution.
ReturnMapModel class_return_map(const ChaosCompModel& model, int class_id);

}  // namespace chaoscomp
