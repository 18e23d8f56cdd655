#include "chaoscomp/interval_coder.hpp"

#include <cassert>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "chaoscomp/random_util.hpp"

namespace chaoscomp {

UnitInterval UnitInterval::from_lower_length(double lower, double length) {
  if (!(lower >= 0.0) || !(lower <= 1.0)) {
    throw std::invalid_argument("interval lower bound outside [0,1]");
  }
  if (!(length > 0.0)) throw std::invalid_argument("degenerate interval");
  if (lower + length > 1.0 + 1e-12) {
    throw std::invalid_argument("interval exceeds the unit interval");
  }
  return UnitInterval(lower, length);
}

UnitInterval UnitInterval::from_bounds(double lower, double upper) {
  if (!(upper > lower)) throw std::invalid_argument("degenerate interval");
  return from_lower_length(lower, upper - lower);
}

double UnitInterval::upper() const {
  const double u = lower_ + length_;
  return u > 1.0 ? 1.0 : u;
}

bool UnitInterval::contains(double x) const {
  return x >= lower_ && (x - lower_) < length_;
}

namespace {

// Shared backward pass over an arbitrary branch system. Processing order is
// reversed: the seed cell comes from the last symbol, then each earlier
// symbol applies its inverse branch x -> width*x + offset. Both inverse
// branches are increasing contractions, so orientation can never flip; the
// assert documents that in place of a swap guard.
struct BranchRef {
  double width;
  double offset;
};

template <typename BranchAt>
BackIterationResult back_iterate(std::size_t count, BranchAt branch_at) {
  const BranchRef seed = branch_at(count - 1);
  double lower = seed.offset;
  double length = seed.width;
  for (std::size_t i = count - 1; i-- > 0;) {
    const BranchRef b = branch_at(i);
    lower = std::fma(b.width, lower, b.offset);
    length *= b.width;
    assert(length > 0.0 && "inverse branches must preserve orientation");
  }
  UnitInterval interval = UnitInterval::from_lower_length(lower, length);
  // Midpoint via the width so it stays inside even when length is far below
  // one ulp of lower (lower + length/2 then rounds back onto lower).
  const double x0 = lower + length * 0.5;
  return BackIterationResult{interval, x0};
}

}  // namespace

BackIterationResult back_iterate_binary(const BitSequence& bits, const BakerParams& params) {
  if (bits.empty()) throw std::invalid_argument("empty bit sequence");
  const double a = params.a;
  return back_iterate(bits.size(), [&](std::size_t i) {
    const std::uint8_t s = bits[i];
    if (s > 1) throw std::invalid_argument("bit sequence contains a non-binary symbol");
    return s == 0 ? BranchRef{a, 0.0} : BranchRef{1.0 - a, a};
  });
}

BackIterationResult back_iterate_words(const WordSequence& ws, const ReturnMapModel& model) {
  if (ws.words.empty()) throw std::invalid_argument("empty word sequence");
  if (ws.n != model.order()) {
    throw std::invalid_argument("word length " + std::to_string(ws.n) +
                                " does not match map order " + std::to_string(model.order()));
  }
  const std::size_t cells = std::size_t{1} << model.order();
  return back_iterate(ws.words.size(), [&](std::size_t i) {
    const std::uint32_t w = ws.words[i];
    if (w >= cells) throw std::invalid_argument("word out of range: " + std::to_string(w));
    const double p = model.probs()[w];
    if (p <= 0.0) {
      throw std::invalid_argument("unsmoothed zero probability for word " + std::to_string(w));
    }
    return BranchRef{p, model.cum()[w]};
  });
}

CodeLength code_length(const UnitInterval& interval) {
  const double len = interval.length();
  if (!(len > 0.0)) throw std::invalid_argument("degenerate interval");
  CodeLength out;
  out.exact_bits = -std::log2(len);
  if (out.exact_bits < 0.0) out.exact_bits = 0.0;   // whole interval costs nothing
  out.ceil_bits = static_cast<long long>(std::ceil(out.exact_bits));
  return out;
}

CodeLength code_length_log_domain(const WordSequence& ws, const ReturnMapModel& model) {
  if (ws.words.empty()) throw std::invalid_argument("empty word sequence");
  if (ws.n != model.order()) {
    throw std::invalid_argument("word length " + std::to_string(ws.n) +
                                " does not match map order " + std::to_string(model.order()));
  }
  const std::size_t cells = std::size_t{1} << model.order();
  double bits = 0.0;
  for (std::uint32_t w : ws.words) {
    if (w >= cells) throw std::invalid_argument("word out of range: " + std::to_string(w));
    const double p = model.probs()[w];
    if (p <= 0.0) {
      throw std::invalid_argument("unsmoothed zero probability for word " + std::to_string(w));
    }
    bits -= std::log2(p);
  }
  if (bits < 0.0) bits = 0.0;
  CodeLength out;
  out.exact_bits = bits;
  out.ceil_bits = static_cast<long long>(std::ceil(bits));
  return out;
}

double model_entropy(const ReturnMapModel& model) {
  double h = 0.0;
  for (double p : model.probs()) {
    if (p > 0.0) h -= p * std::log2(p);   // 0 log 0 -> 0 in the limit
  }
  return h;
}

ShannonTrialSummary shannon_optimality_trial(double p0, int N, int trials, std::uint64_t seed) {
  if (!(p0 > 0.0) || !(p0 < 1.0)) throw std::invalid_argument("p0 must lie in (0,1)");
  if (N < 100) throw std::invalid_argument("sequence length must be at least 100");
  if (trials < 1) throw std::invalid_argument("need at least one trial");

  std::mt19937_64 rng(seed);
  ShannonTrialSummary summary;
  summary.entropy = -p0 * std::log2(p0) - (1.0 - p0) * std::log2(1.0 - p0);

  double total = 0.0;
  for (int t = 0; t < trials; ++t) {
    long long zeros = 0;
    do {   // resample degenerate all-0 / all-1 draws
      zeros = 0;
      for (int i = 0; i < N; ++i) {
        if (uniform_unit(rng) < p0) ++zeros;
      }
    } while (zeros == 0 || zeros == N);

    // Fit the map to the sequence: a = empirical fraction of zeros. The
    // back-iterated interval length is then a^zeros * (1-a)^ones, evaluated
    // in the log domain so long sequences cannot underflow.
    const double a = static_cast<double>(zeros) / static_cast<double>(N);
    const double ones = static_cast<double>(N - zeros);
    const double exact_bits =
        -(static_cast<double>(zeros) * std::log2(a) + ones * std::log2(1.0 - a));
    const double per_symbol = std::ceil(exact_bits) / static_cast<double>(N);
    total += per_symbol;
    const double dev = std::abs(per_symbol - summary.entropy);
    if (dev > summary.max_deviation) summary.max_deviation = dev;
  }
  summary.mean_bits_per_symbol = total / static_cast<double>(trials);
  return summary;
}

}  // namespace chaoscomp
