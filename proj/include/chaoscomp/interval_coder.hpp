#pragma once
// Inverse problem of the symbolic dynamics: reconstruct the interval of
// initial conditions that reproduces a given symbol or word sequence by
// iterating the inverse branches backwards, and turn interval size into a
// code length in bits.

#include <cstdint>

#include "chaoscomp/symbolic.hpp"

namespace chaoscomp {

// Half-open subinterval [lower, lower + length) of [0, 1].
//
// The width is stored explicitly and maintained multiplicatively during
// back-iteration. That keeps it accurate (relative error a few ulp) even
// when it is far smaller than the spacing of doubles around `lower`, where
// an upper-minus-lower representation would quantize to 0 or to 2^-52.
class UnitInterval {
 public:
  static UnitInterval from_lower_length(double lower, double length);
  static UnitInterval from_bounds(double lower, double upper);

  double lower() const { return lower_; }
  double upper() const;   // lower + length, saturated at 1.0
  double length() const { return length_; }

  // lower <= x < lower + length, evaluated as (x - lower) < length so that
  // membership stays meaningful for widths below one ulp of lower.
  bool contains(double x) const;

 private:
  UnitInterval(double lower, double length) : lower_(lower), length_(length) {}
  double lower_;
  double length_;
};

// Description length of a sequence: exact_bits = -log2(interval length),
// ceil_bits = the integer number of bits actually charged.
struct CodeLength {
  double exact_bits = 0.0;
  long long ceil_bits = 0;
};

struct BackIterationResult {
  UnitInterval interval;
  double x0;   // interval midpoint; reproduces the sequence forwards
};

// Reconstructs the interval of initial conditions whose trajectory under the
// skewed Baker's map emits exactly `bits`. Seeds from the last symbol and
// applies inverse branches in reverse order. The interval length equals
// a^(#zeros) * (1-a)^(#ones).
BackIterationResult back_iterate_binary(const BitSequence& bits, const BakerParams& params);

// Same reconstruction for an n-th return map: seeds from the last word's
// partition cell, then applies x -> probs[w]*x + cum[w] for each earlier
// word, processed in reverse. The interval length is the product of the word
// probabilities.
BackIterationResult back_iterate_words(const WordSequence& ws, const ReturnMapModel& model);

CodeLength code_length(const UnitInterval& interval);

// -sum_t log2(probs[word_t]): mathematically identical to
// code_length(back_iterate_words(...).interval) but never underflows, so it
// is what classification uses for sequences of any length.
CodeLength code_length_log_domain(const WordSequence& ws, const ReturnMapModel& model);

// Word entropy -sum_w p_w log2 p_w in bits per word. For n = 1 with widths
// [a, 1-a] this equals the map's Lyapunov/entropy expression
// -a log2 a - (1-a) log2(1-a).
double model_entropy(const ReturnMapModel& model);

struct ShannonTrialSummary {
  double mean_bits_per_symbol = 0.0;
  double entropy = 0.0;        // H(p0) of the source
  double max_deviation = 0.0;  // max over trials of |bits/N - H|
};

// Empirical source-coding check: draws `trials` i.i.d. binary sequences of
// length N with P(0) = p0, fits the map parameter to each sequence's
// empirical fraction of zeros, and reports the mean ceil-bits per symbol.
// The mean approaches H(p0) from above with at most ~1/N ceiling slack.
// Degenerate all-0/all-1 draws are resampled.
ShannonTrialSummary shannon_optimality_trial(double p0, int N, int trials, std::uint64_t seed);

}  // namespace chaoscomp
