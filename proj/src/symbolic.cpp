#include "chaoscomp/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace chaoscomp {

namespace {

void check_unit_domain(double x) {
  if (!(x >= 0.0) || !(x < 1.0)) {
    throw std::invalid_argument("map input " + std::to_string(x) + " outside [0,1)");
  }
}

void check_word_length(int n) {
  if (n < 1 || n > 20) {
    throw std::invalid_argument("word length must be in [1,20], got " + std::to_string(n));
  }
}

void check_pad_symbol(int pad_symbol) {
  if (pad_symbol != 0 && pad_symbol != 1) {
    throw std::invalid_argument("pad symbol must be 0 or 1");
  }
}

}  // namespace

BakerParams::BakerParams(double skew) : a(skew) {
  if (!(a > 0.0) || !(a < 1.0)) {
    throw std::invalid_argument("skewness must lie strictly inside (0,1), got " +
                                std::to_string(skew));
  }
}

ReturnMapModel::ReturnMapModel(int n, std::vector<double> probs)
    : n_(n), probs_(std::move(probs)) {
  check_word_length(n_);
  const std::size_t cells = std::size_t{1} << n_;
  if (probs_.size() != cells) {
    throw std::invalid_argument("return map of order " + std::to_string(n_) + " needs " +
                                std::to_string(cells) + " probabilities, got " +
                                std::to_string(probs_.size()));
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw std::invalid_argument("negative branch probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("branch probabilities sum to " + std::to_string(sum) +
                                ", expected 1");
  }
  cum_.resize(cells + 1);
  cum_[0] = 0.0;
  for (std::size_t j = 0; j < cells; ++j) cum_[j + 1] = cum_[j] + probs_[j];
  cum_[cells] = 1.0;   // pin the right boundary so the partition covers [0,1)
}

BitSequence binarize(const std::vector<double>& x, double threshold) {
  if (x.empty()) throw std::invalid_argument("empty instance");
  if (!(threshold > 0.0) || !(threshold <= 1.0)) {
    throw std::invalid_argument("threshold must lie in (0,1], got " + std::to_string(threshold));
  }
  BitSequence bits(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) bits[i] = x[i] >= threshold ? 1 : 0;
  return bits;
}

BitSequence pad_bits(const BitSequence& bits, int n, int pad_symbol) {
  check_word_length(n);
  check_pad_symbol(pad_symbol);
  BitSequence out = bits;
  const std::size_t rem = out.size() % static_cast<std::size_t>(n);
  if (rem != 0) {
    out.insert(out.end(), static_cast<std::size_t>(n) - rem,
               static_cast<std::uint8_t>(pad_symbol));
  }
  return out;
}

WordSequence extract_words(const BitSequence& bits, int n) {
  check_word_length(n);
  if (bits.size() % static_cast<std::size_t>(n) != 0) {
    throw std::invalid_argument("unpadded sequence: " + std::to_string(bits.size()) +
                                " bits is not a multiple of " + std::to_string(n));
  }
  WordSequence ws;
  ws.n = n;
  ws.words.reserve(bits.size() / static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < bits.size(); i += static_cast<std::size_t>(n)) {
    std::uint32_t w = 0;
    for (int j = 0; j < n; ++j) {
      const std::uint8_t b = bits[i + static_cast<std::size_t>(j)];
      if (b > 1) throw std::invalid_argument("bit sequence contains a non-binary symbol");
      w = (w << 1) | b;   // first bit is most significant
    }
    ws.words.push_back(w);
  }
  return ws;
}

std::vector<double> word_frequencies(const WordSequence& ws) {
  check_word_length(ws.n);
  if (ws.words.empty()) throw std::invalid_argument("empty word sequence");
  const std::size_t cells = std::size_t{1} << ws.n;
  std::vector<double> freq(cells, 0.0);
  for (std::uint32_t w : ws.words) {
    if (w >= cells) {
      throw std::invalid_argument("word out of range: " + std::to_string(w));
    }
    freq[w] += 1.0;
  }
  const double total = static_cast<double>(ws.words.size());
  for (double& f : freq) f /= total;
  return freq;
}

double baker_forward(double x, const BakerParams& params) {
  check_unit_domain(x);
  return x < params.a ? x / params.a : (x - params.a) / (1.0 - params.a);
}

BitSequence symbolize_trajectory(double x0, const BakerParams& params, int steps) {
  if (steps < 1) throw std::invalid_argument("trajectory needs at least one step");
  if (x0 == 1.0) x0 = std::nextafter(1.0, 0.0);   // scaled maxima land exactly on 1
  check_unit_domain(x0);
  BitSequence bits(static_cast<std::size_t>(steps));
  double x = x0;
  for (int i = 0; i < steps; ++i) {
    bits[static_cast<std::size_t>(i)] = x < params.a ? 0 : 1;
    if (i + 1 < steps) x = baker_forward(x, params);
  }
  return bits;
}

ReturnStep return_map_forward(double x, const ReturnMapModel& model) {
  check_unit_domain(x);
  const std::vector<double>& cum = model.cum();
  // First boundary strictly above x; zero-width cells are skipped naturally
  // because cum[j] == cum[j+1] can never satisfy cum[j] <= x < cum[j+1].
  const auto it = std::upper_bound(cum.begin(), cum.end(), x);
  const std::size_t j = static_cast<std::size_t>(it - cum.begin()) - 1;
  ReturnStep step;
  step.word = static_cast<std::uint32_t>(j);
  step.x = (x - cum[j]) / model.probs()[j];
  // Rounding at a pinned right boundary can push the stretched image onto
  // 1.0; keep the iterate inside the half-open domain.
  if (step.x >= 1.0) step.x = std::nextafter(1.0, 0.0);
  return step;
}

}  // namespace chaoscomp
