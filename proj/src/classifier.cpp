#include "chaoscomp/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chaoscomp {

namespace {

void check_train_config(const TrainConfig& cfg) {
  if (cfg.n < 1 || cfg.n > 20) throw std::invalid_argument("word length must be in [1,20]");
  if (!(cfg.threshold > 0.0) || !(cfg.threshold <= 1.0)) {
    throw std::invalid_argument("threshold must lie in (0,1]");
  }
  if (!(cfg.alpha > 0.0)) throw std::invalid_argument("smoothing constant must be positive");
  if (cfg.pad_symbol != 0 && cfg.pad_symbol != 1) {
    throw std::invalid_argument("pad symbol must be 0 or 1");
  }
}

// Words of one raw instance under the model's preprocessing settings.
WordSequence instance_words(const std::vector<double>& x, const ChaosCompModel& model) {
  if (x.size() != model.raw_feature_count()) {
    throw std::invalid_argument("feature count " + std::to_string(x.size()) +
                                " does not match the model's expected " +
                                std::to_string(model.raw_feature_count()));
  }
  std::vector<double> features = x;
  if (model.augment) {
    double ss = 0.0;
    for (double v : x) ss += v * v;
    features.push_back(ss);
  }
  const std::vector<double> scaled = minmax_apply_row(features, model.scaler);
  const BitSequence bits = pad_bits(binarize(scaled, model.threshold), model.n, model.pad_symbol);
  return extract_words(bits, model.n);
}

}  // namespace

ClassDistribution fit_class_distribution(const std::vector<BitSequence>& instances,
                                         int n, double alpha, int pad_symbol, int class_id) {
  if (instances.empty()) throw std::invalid_argument("empty class");
  if (!(alpha > 0.0)) throw std::invalid_argument("smoothing constant must be positive");
  const std::size_t cells = std::size_t{1} << n;

  // Sum of per-instance frequency vectors; instances weigh equally no matter
  // how many words each contributes after padding.
  std::vector<double> freq_sum(cells, 0.0);
  for (const BitSequence& bits : instances) {
    const WordSequence ws = extract_words(pad_bits(bits, n, pad_symbol), n);
    const std::vector<double> freq = word_frequencies(ws);
    for (std::size_t w = 0; w < cells; ++w) freq_sum[w] += freq[w];
  }

  const double N = static_cast<double>(instances.size());
  const double denom = N + static_cast<double>(cells) * alpha;
  ClassDistribution dist;
  dist.class_id = class_id;
  dist.probs.resize(cells);
  for (std::size_t w = 0; w < cells; ++w) dist.probs[w] = (freq_sum[w] + alpha) / denom;
  return dist;
}

ChaosCompModel train(const Matrix& X, const std::vector<int>& y, const TrainConfig& config) {
  check_train_config(config);
  if (X.size() != y.size()) throw std::invalid_argument("row count of X does not match y");
  if (X.empty()) throw std::invalid_argument("empty training set");

  int m = 0;
  for (int label : y) {
    if (label < 0) throw std::invalid_argument("labels must be non-negative");
    m = std::max(m, label + 1);
  }

  // Group binarized rows by class; every class in [0, m) must appear.
  std::vector<std::vector<BitSequence>> grouped(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (double v : X[i]) {
      if (!(v >= 0.0) || !(v <= 1.0)) {
        throw std::invalid_argument("training features must be scaled to [0,1]");
      }
    }
    grouped[static_cast<std::size_t>(y[i])].push_back(binarize(X[i], config.threshold));
  }

  ChaosCompModel model;
  model.n = config.n;
  model.threshold = config.threshold;
  model.alpha = config.alpha;
  model.pad_symbol = config.pad_symbol;
  model.augment = false;
  const std::size_t cols = X.front().size();
  model.scaler.min.assign(cols, 0.0);   // identity scaler over [0,1]
  model.scaler.max.assign(cols, 1.0);
  for (int c = 0; c < m; ++c) {
    if (grouped[static_cast<std::size_t>(c)].empty()) {
      throw std::invalid_argument("class " + std::to_string(c) + " is absent from y");
    }
    model.classes.push_back(fit_class_distribution(grouped[static_cast<std::size_t>(c)],
                                                   config.n, config.alpha, config.pad_symbol, c));
    model.class_names.push_back(std::to_string(c));
  }
  return model;
}

double cosine_similarity(const std::vector<double>& u, const std::vector<double>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("cosine of different-length vectors");
  if (u.empty()) throw std::invalid_argument("cosine of empty vectors");
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) throw std::invalid_argument("cosine of a zero vector");
  return dot / (std::sqrt(nu) * std::sqrt(nv));
}

Prediction predict_one(const std::vector<double>& x, const ChaosCompModel& model) {
  if (model.classes.empty()) throw std::invalid_argument("model has no classes");
  const WordSequence words = instance_words(x, model);
  const std::size_t m = model.classes.size();

  Prediction pred;
  pred.per_class_bits.resize(m);
  pred.per_class_exact_bits.resize(m);
  long long best_bits = 0;
  for (std::size_t c = 0; c < m; ++c) {
    double exact = 0.0;
    for (std::uint32_t w : words.words) exact -= std::log2(model.classes[c].probs[w]);
    if (exact < 0.0) exact = 0.0;
    pred.per_class_exact_bits[c] = exact;
    pred.per_class_bits[c] = static_cast<long long>(std::ceil(exact));
    if (c == 0 || pred.per_class_bits[c] < best_bits) best_bits = pred.per_class_bits[c];
  }

  std::vector<std::size_t> candidates;
  for (std::size_t c = 0; c < m; ++c) {
    if (pred.per_class_bits[c] == best_bits) candidates.push_back(c);
  }
  pred.tie_broken = candidates.size() > 1;
  if (!pred.tie_broken) {
    pred.label = static_cast<int>(candidates.front());
    return pred;
  }

  // Tie on the integer bit count: compare the instance's own smoothed word
  // distribution against each class distribution; highest cosine wins, and
  // an exact cosine tie resolves to the lowest class index.
  const std::vector<double> freq = word_frequencies(words);
  const double cells = static_cast<double>(freq.size());
  std::vector<double> smoothed(freq.size());
  for (std::size_t w = 0; w < freq.size(); ++w) {
    smoothed[w] = (freq[w] + model.alpha) / (1.0 + cells * model.alpha);
  }
  std::vector<double> sims(m, 0.0);
  for (std::size_t c = 0; c < m; ++c) {
    sims[c] = cosine_similarity(smoothed, model.classes[c].probs);
  }
  std::size_t winner = candidates.front();
  for (std::size_t c : candidates) {
    if (sims[c] > sims[winner]) winner = c;
  }
  pred.similarity = std::move(sims);
  pred.label = static_cast<int>(winner);
  return pred;
}

std::vector<Prediction> predict_batch_serial(const Matrix& X, const ChaosCompModel& model) {
  std::vector<Prediction> out(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) out[i] = predict_one(X[i], model);
  return out;
}

std::vector<Prediction> predict_batch_parallel(const Matrix& X, const ChaosCompModel& model,
                                               int jobs) {
  std::vector<Prediction> out(X.size());
#ifdef _OPENMP
  if (jobs <= 0) jobs = omp_get_max_threads();
  const long long count = static_cast<long long>(X.size());
  std::exception_ptr failure = nullptr;   // exceptions must not cross the omp region
#pragma omp parallel for schedule(static) num_threads(jobs)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = predict_one(X[static_cast<std::size_t>(i)], model);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
#else
  (void)jobs;
  for (std::size_t i = 0; i < X.size(); ++i) out[i] = predict_one(X[i], model);
#endif
  return out;
}

std::vector<Prediction> predict_batch(const Matrix& X, const ChaosCompModel& model, int jobs) {
  if (jobs == 1) return predict_batch_serial(X, model);
  return predict_batch_parallel(X, model, jobs);
}

ReturnMapModel class_return_map(const ChaosCompModel& model, int class_id) {
  if (class_id < 0 || static_cast<std::size_t>(class_id) >= model.classes.size()) {
    throw std::invalid_argument("class index out of range: " + std::to_string(class_id));
  }
  return ReturnMapModel(model.n, model.classes[static_cast<std::size_t>(class_id)].probs);
}

}  // namespace chaoscomp
