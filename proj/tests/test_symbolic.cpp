#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "chaoscomp/random_util.hpp"
#include "chaoscomp/symbolic.hpp"

using namespace chaoscomp;

TEST_CASE("binarize thresholds with the >= rule") {
  CHECK(binarize({0.3, 0.75, 0.5833}, 0.4) == BitSequence{0, 1, 1});
  CHECK(binarize({0.0, 0.0}, 0.5) == BitSequence{0, 0});
  CHECK(binarize({0.5, 0.49}, 0.5) == BitSequence{1, 0});   // boundary value maps to 1
  CHECK(binarize({1.0, 0.999}, 1.0) == BitSequence{1, 0});  // threshold 1.0 is allowed
}

TEST_CASE("binarize rejects empty input and bad thresholds") {
  CHECK_THROWS_WITH_AS(binarize({}, 0.5), "empty instance", std::invalid_argument);
  CHECK_THROWS_AS(binarize({0.5}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(binarize({0.5}, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(binarize({0.5}, -0.1), std::invalid_argument);
}

TEST_CASE("binarize monotonicity: raising the threshold never flips 0 to 1") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(20);
    for (double& v : x) v = uniform_unit(rng);
    double t1 = 0.05 + 0.9 * uniform_unit(rng);
    double t2 = 0.05 + 0.9 * uniform_unit(rng);
    if (t1 > t2) std::swap(t1, t2);
    const BitSequence low = binarize(x, t1);
    const BitSequence high = binarize(x, t2);
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(high[i] <= low[i]);
    }
  }
}

TEST_CASE("pad_bits appends the pad symbol up to the next multiple of n") {
  CHECK(pad_bits({1, 0, 0, 1}, 3, 1) == BitSequence{1, 0, 0, 1, 1, 1});
  CHECK(pad_bits({1, 0, 0, 1}, 2, 1) == BitSequence{1, 0, 0, 1});   // already aligned
  CHECK(pad_bits({0}, 4, 0) == BitSequence{0, 0, 0, 0});
}

TEST_CASE("pad_bits idempotence and round structure") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(bounded_uint(rng, 6));
    const int len = 1 + static_cast<int>(bounded_uint(rng, 25));
    BitSequence b(static_cast<std::size_t>(len));
    for (auto& bit : b) bit = static_cast<std::uint8_t>(bounded_uint(rng, 2));
    const int pad = static_cast<int>(bounded_uint(rng, 2));
    const BitSequence once = pad_bits(b, n, pad);
    CHECK(pad_bits(once, n, pad) == once);
    const WordSequence ws = extract_words(once, n);
    const std::size_t expected_words = (b.size() + static_cast<std::size_t>(n) - 1) /
                                       static_cast<std::size_t>(n);
    CHECK(ws.words.size() == expected_words);
  }
}

TEST_CASE("extract_words reads big-endian blocks") {
  const WordSequence ws = extract_words({0, 1, 1, 0, 1, 1}, 2);
  CHECK(ws.n == 2);
  CHECK(ws.words == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(extract_words({0, 0, 1, 1}, 2).words == std::vector<std::uint32_t>{0, 3});
  CHECK(extract_words({1, 1, 1}, 3).words == std::vector<std::uint32_t>{7});
}

TEST_CASE("extract_words rejects misaligned input") {
  CHECK_THROWS_WITH_AS(extract_words({1, 0, 1}, 2),
                       "unpadded sequence: 3 bits is not a multiple of 2",
                       std::invalid_argument);
}

TEST_CASE("word_frequencies matches hand-computed distributions") {
  // Class-0 words of the worked example: (01),(10),(11),(10),(00),(10).
  WordSequence ws;
  ws.n = 2;
  ws.words = {1, 2, 3, 2, 0, 2};
  const std::vector<double> freq = word_frequencies(ws);
  CHECK(freq[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(freq[1] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(freq[2] == doctest::Approx(3.0 / 6.0).epsilon(1e-12));
  CHECK(freq[3] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  WordSequence mono;
  mono.n = 1;
  mono.words = {0, 0, 0};
  CHECK(word_frequencies(mono) == std::vector<double>{1.0, 0.0});

  WordSequence pair;
  pair.n = 2;
  pair.words = {0, 3};
  CHECK(word_frequencies(pair) == std::vector<double>{0.5, 0.0, 0.0, 0.5});
}

TEST_CASE("word_frequencies normalization on random input") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    WordSequence ws;
    ws.n = 1 + static_cast<int>(bounded_uint(rng, 4));
    const int count = 1 + static_cast<int>(bounded_uint(rng, 40));
    for (int i = 0; i < count; ++i) {
      ws.words.push_back(static_cast<std::uint32_t>(bounded_uint(rng, 1u << ws.n)));
    }
    const std::vector<double> freq = word_frequencies(ws);
    double total = 0.0;
    for (double f : freq) total += f;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
  WordSequence empty;
  empty.n = 2;
  CHECK_THROWS_AS(word_frequencies(empty), std::invalid_argument);
}

TEST_CASE("baker_forward stretches each branch onto the unit interval") {
  const BakerParams params(0.4);
  CHECK(baker_forward(0.3, params) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(baker_forward(0.75, params) == doctest::Approx(7.0 / 12.0).epsilon(1e-12));
  CHECK(baker_forward(0.0, BakerParams(0.27)) == 0.0);
  CHECK_THROWS_AS(baker_forward(1.0, params), std::invalid_argument);
  CHECK_THROWS_AS(baker_forward(-0.1, params), std::invalid_argument);
}

TEST_CASE("BakerParams requires a in the open unit interval") {
  CHECK_THROWS_AS(BakerParams(0.0), std::invalid_argument);
  CHECK_THROWS_AS(BakerParams(1.0), std::invalid_argument);
  CHECK_NOTHROW(BakerParams(0.5));
}

TEST_CASE("symbolize_trajectory emits the thresholded orbit") {
  CHECK(symbolize_trajectory(0.3, BakerParams(0.4), 3) == BitSequence{0, 1, 1});
  CHECK(symbolize_trajectory(0.0, BakerParams(0.3), 5) == BitSequence{0, 0, 0, 0, 0});
  CHECK(symbolize_trajectory(0.9, BakerParams(0.5), 2) == BitSequence{1, 1});
}

TEST_CASE("symbolize_trajectory clamps x0 = 1.0 into the domain") {
  CHECK_NOTHROW(symbolize_trajectory(1.0, BakerParams(0.5), 8));
  CHECK(symbolize_trajectory(1.0, BakerParams(0.5), 1) == BitSequence{1});
}

TEST_CASE("first emitted symbol agrees with binarize at the same threshold") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = 0.05 + 0.9 * uniform_unit(rng);
    const double x0 = uniform_unit(rng);
    const BitSequence traj = symbolize_trajectory(x0, BakerParams(a), 1);
    const BitSequence direct = binarize({x0}, a);
    CHECK(traj[0] == direct[0]);
  }
}

TEST_CASE("ReturnMapModel validates its probability vector") {
  CHECK_NOTHROW(ReturnMapModel(2, {0.25, 0.25, 0.25, 0.25}));
  CHECK_NOTHROW(ReturnMapModel(1, {0.0, 1.0}));   // zero-width cells tolerated
  CHECK_THROWS_AS(ReturnMapModel(2, {0.5, 0.5}), std::invalid_argument);         // wrong size
  CHECK_THROWS_AS(ReturnMapModel(1, {0.6, 0.6}), std::invalid_argument);         // sum != 1
  CHECK_THROWS_AS(ReturnMapModel(1, {-0.2, 1.2}), std::invalid_argument);        // negative
  CHECK_THROWS_AS(ReturnMapModel(0, {1.0}), std::invalid_argument);              // n too small
}

TEST_CASE("ReturnMapModel cumulative boundaries bracket the probabilities") {
  const ReturnMapModel model(2, {2.0 / 6, 1.0 / 6, 2.0 / 6, 1.0 / 6});
  const std::vector<double>& cum = model.cum();
  REQUIRE(cum.size() == 5);
  CHECK(cum.front() == 0.0);
  CHECK(cum.back() == 1.0);
  for (std::size_t j = 0; j + 1 < cum.size(); ++j) {
    CHECK(cum[j + 1] - cum[j] == doctest::Approx(model.probs()[j]).epsilon(1e-12));
  }
}

TEST_CASE("return_map_forward locates the branch and stretches it") {
  const ReturnMapModel model(2, {2.0 / 6, 1.0 / 6, 2.0 / 6, 1.0 / 6});
  ReturnStep step = return_map_forward(0.2, model);
  CHECK(step.word == 0);
  CHECK(step.x == doctest::Approx(0.6).epsilon(1e-12));

  step = return_map_forward(0.0, model);
  CHECK(step.word == 0);
  CHECK(step.x == 0.0);

  const ReturnMapModel tent(1, {0.5, 0.5});
  step = return_map_forward(0.99, tent);
  CHECK(step.word == 1);
  CHECK(step.x == doctest::Approx(0.98).epsilon(1e-12));

  CHECK_THROWS_AS(return_map_forward(1.0, tent), std::invalid_argument);
}

TEST_CASE("partition consistency over random maps and points") {
  std::mt19937_64 rng(23);
  for (int m = 0; m < 5; ++m) {
    const int n = 1 + m % 3;
    const std::size_t cells = std::size_t{1} << n;
    std::vector<double> probs(cells);
    double total = 0.0;
    for (double& p : probs) {
      p = 0.05 + uniform_unit(rng);
      total += p;
    }
    double partial = 0.0;
    for (std::size_t j = 0; j + 1 < cells; ++j) {
      probs[j] /= total;
      partial += probs[j];
    }
    probs[cells - 1] = 1.0 - partial;   // exact complement so the sum is 1.0
    const ReturnMapModel model(n, probs);
    for (int i = 0; i < 1000; ++i) {
      const double x = uniform_unit(rng);
      const ReturnStep step = return_map_forward(x, model);
      CHECK(step.x >= 0.0);
      CHECK(step.x < 1.0);
      CHECK(model.cum()[step.word] <= x);
      CHECK(x < model.cum()[step.word + 1]);
    }
  }
}
