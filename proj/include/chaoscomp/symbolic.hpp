#pragma once
// Symbolic front end: thresholds real-valued vectors into binary sequences,
// groups bits into fixed-width words, and provides the forward dynamics of
// the skewed Baker's map together with its n-th return generalization.

#include <cstdint>
#include <vector>

namespace chaoscomp {

// Ordered binary symbols (each element is 0 or 1).
using BitSequence = std::vector<std::uint8_t>;

// Skewness parameter of the two-branch Baker's map. The same value acts as
// the branch boundary of the map and as the symbolization threshold.
struct BakerParams {
  double a;
  // Rejects anything outside the open interval (0, 1).
  explicit BakerParams(double skew);
};

// Non-overlapping n-bit blocks read most-significant-bit first.
struct WordSequence {
  int n = 1;                          // bits per word
  std::vector<std::uint32_t> words;   // each value in [0, 2^n)
};

// Piecewise-linear map on [0,1) with 2^n branches whose widths are word
// probabilities. Zero-width cells are allowed so that raw (unsmoothed)
// frequency vectors can be represented; coding operations reject words that
// land on a zero-width cell. Smoothed, trained models always have strictly
// positive widths.
class ReturnMapModel {
 public:
  ReturnMapModel(int n, std::vector<double> probs);

  int order() const { return n_; }
  const std::vector<double>& probs() const { return probs_; }
  // Cumulative boundaries: cum()[0] == 0, cum()[2^n] == 1, and
  // cum()[j+1] - cum()[j] == probs()[j].
  const std::vector<double>& cum() const { return cum_; }

 private:
  int n_;
  std::vector<double> probs_;
  std::vector<double> cum_;
};

// One forward application of an n-th return map: the branch index (= the
// emitted word) and the stretched image of x.
struct ReturnStep {
  double x;
  std::uint32_t word;
};

// bit i = 1 iff x[i] >= threshold. Threshold must lie in (0, 1].
BitSequence binarize(const std::vector<double>& x, double threshold);

// Appends pad_symbol until the length is the smallest multiple of n that is
// >= the input length. Already-aligned input is returned unchanged.
BitSequence pad_bits(const BitSequence& bits, int n, int pad_symbol);

// Groups an aligned bit sequence into n-bit words (call pad_bits first).
WordSequence extract_words(const BitSequence& bits, int n);

// Empirical distribution over all 2^n words; entries sum to 1.
std::vector<double> word_frequencies(const WordSequence& ws);

// x/a for x < a, (x-a)/(1-a) otherwise. Domain is the half-open [0, 1).
double baker_forward(double x, const BakerParams& params);

// Emits `steps` symbols: s_i = 0 if x_i < a else 1, iterating baker_forward
// between emissions. An x0 of exactly 1.0 is clamped just below 1 so that
// upstream scaling (which maps maxima to 1.0) composes with the open domain.
BitSequence symbolize_trajectory(double x0, const BakerParams& params, int steps);

// Finds the branch j with cum[j] <= x < cum[j+1] and stretches the branch
// linearly onto [0,1).
ReturnStep return_map_forward(double x, const ReturnMapModel& model);

}  // namespace chaoscomp
