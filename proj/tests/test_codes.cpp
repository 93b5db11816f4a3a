#include <doctest.h>

#include "oracles.hpp"
#include "tailspace/codes.hpp"

using namespace tailspace;

TEST_CASE("rref and membership") {
  const LinearCode c(4, {0b1111, 0b0011, 0b1100});  // third row dependent
  CHECK(c.dimension() == 2);
  CHECK(c.contains(0b0000));
  CHECK(c.contains(0b1111));
  CHECK(c.contains(0b1100));
  CHECK(!c.contains(0b1000));
  CHECK(c.codewords().size() == 4);
}

TEST_CASE("duals of the named codes") {
  const LinearCode rep = repetition_code(5);
  const LinearCode even = dual(rep);
  CHECK(even.dimension() == 4);
  for (Word w : even.codewords()) CHECK(parity(w) == 0);

  CHECK(dual(zero_code(6)) == full_code(6));
  CHECK(dual(full_code(6)) == zero_code(6));

  // Extended Hamming is self-dual; RREF makes the comparison canonical.
  const LinearCode eh = extended_hamming_8_4();
  CHECK(dual(eh) == eh);
  // All 16 codewords are pairwise orthogonal, exhaustively.
  for (Word a : eh.codewords()) {
    for (Word b : eh.codewords()) CHECK(parity(a & b) == 0);
  }
}

TEST_CASE("dual is an involution with complementary dimension") {
  Rng rng(31);
  for (int rep = 0; rep < 50; ++rep) {
    const int len = 3 + static_cast<int>(rng.below(10));
    std::vector<Word> rows;
    const int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(len)));
    for (int i = 0; i < count; ++i) {
      rows.push_back(static_cast<Word>(rng.next()) & ((Word(1) << len) - 1));
    }
    const LinearCode c(len, rows);
    const LinearCode d = dual(c);
    CHECK(c.dimension() + d.dimension() == len);
    CHECK(dual(d) == c);
    for (Word w : d.codewords()) {
      for (Word x : c.rows()) CHECK(parity(w & x) == 0);
    }
  }
}

TEST_CASE("minimum weights") {
  CHECK(min_weight(repetition_code(7)) == 7);
  CHECK(min_weight(even_weight_code(6)) == 2);
  CHECK(min_weight(extended_hamming_8_4()) == 4);
  CHECK(min_weight(hamming_7_4()) == 3);
  CHECK(min_weight(dual(hamming_7_4())) == 4);  // simplex
  CHECK(!min_weight(zero_code(5)).has_value());
  CHECK_THROWS_WITH_AS(min_weight(full_code(24)), doctest::Contains("capacity"),
                       Error);
}

TEST_CASE("indicators") {
  const CubeFunction g = indicator(repetition_code(3));
  CHECK(g(0) == 1.0);
  CHECK(g(7) == 1.0);
  for (Index j = 1; j < 7; ++j) CHECK(g(j) == -1.0);
  CHECK(probability_equal(g, 1.0) == Dyadic::ratio(1, 2));

  CHECK((indicator(full_code(3)).values().array() == 1.0).all());
  const CubeFunction z = indicator(zero_code(3));
  CHECK(z(0) == 1.0);
  CHECK(probability_equal(z, 1.0) == Dyadic::ratio(1, 3));

  const CubeFunction eh = indicator(extended_hamming_8_4());
  CHECK(probability_equal(eh, 1.0) == Dyadic::ratio(1, 4));
}

TEST_CASE("macwilliams criterion") {
  CHECK(macwilliams_tail(repetition_code(4), 1));
  CHECK(!macwilliams_tail(repetition_code(4), 2));
  CHECK(macwilliams_tail(extended_hamming_8_4(), 3));
  CHECK(!macwilliams_tail(extended_hamming_8_4(), 4));
  CHECK(!macwilliams_tail(zero_code(4), 1));

  // Criterion agrees with the exact Fourier certificate, both directions.
  Rng rng(32);
  for (int rep = 0; rep < 60; ++rep) {
    const int len = 4 + static_cast<int>(rng.below(7));
    std::vector<Word> rows;
    const int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(len - 1)));
    for (int i = 0; i < count; ++i) {
      rows.push_back(static_cast<Word>(rng.next()) & ((Word(1) << len) - 1));
    }
    const LinearCode c(len, rows);
    const CubeFunction g = indicator(c);
    for (int k = 1; k <= 4 && k <= len; ++k) {
      CHECK(macwilliams_tail(c, k) == tail_certificate(g, k, false).member);
    }
  }
}

TEST_CASE("coset shifts are identical or disjoint") {
  const CubeFunction g = indicator(extended_hamming_8_4());
  CHECK((coset_shift(g, 0).values() - g.values()).cwiseAbs().maxCoeff() == 0.0);

  const CubeFunction g01 = indicator01(extended_hamming_8_4());
  Rng rng(33);
  for (int rep = 0; rep < 100; ++rep) {
    const Word y = static_cast<Word>(rng.next()) & 0xFF;
    const Word yp = static_cast<Word>(rng.next()) & 0xFF;
    const CubeFunction a = coset_shift(g01, y);
    const CubeFunction b = coset_shift(g01, yp);
    const double overlap = (a.values().array() * b.values().array()).sum();
    const bool identical = (a.values() - b.values()).cwiseAbs().maxCoeff() == 0.0;
    CHECK((identical || overlap == 0.0));
  }
  CHECK_THROWS_AS(coset_shift(g, Word(1) << 9), Error);
}

TEST_CASE("good code search") {
  const LinearCode c8 = good_code_search(8, 0.5, 7);
  CHECK(c8.dimension() >= 2);
  CHECK(c8.dimension() <= 6);
  CHECK(*min_weight(c8) >= 4);

  const LinearCode c4 = good_code_search(4, 0.5, 7);
  CHECK(c4.dimension() >= 1);
  CHECK(c4.dimension() <= 3);
  CHECK(*min_weight(c4) >= 2);

  CHECK_THROWS_WITH_AS(good_code_search(8, 0.5, 7, {0}),
                       doctest::Contains("search-exhausted"), Error);
  CHECK_THROWS_WITH_AS(good_code_search(4, 0.99, 7),
                       doctest::Contains("bad-parameter"), Error);
}

TEST_CASE("tail code search") {
  // dual_dim 1, k 3: the even-weight code on four bits.
  const LinearCode c0 = tail_code_search(1, 3, 5);
  CHECK(c0.length() == 4);
  CHECK(c0.dimension() == 3);
  CHECK(*min_weight(dual(c0)) == 4);

  // dual_dim 3, k 3: shortest is the [7,4] with simplex dual.
  const LinearCode c1 = tail_code_search(3, 3, 5);
  CHECK(c1.length() == 7);
  CHECK(c1.dimension() == 4);
  CHECK(*min_weight(dual(c1)) == 4);
  CHECK(macwilliams_tail(c1, 3));
}

TEST_CASE("string round trip") {
  const LinearCode c = LinearCode::from_strings({"1000110", "0100101"});
  CHECK(c.length() == 7);
  CHECK(c.contains(0b0110001));  // "1000110" read leftmost = coordinate 1
  const auto strings = c.row_strings();
  const LinearCode back = LinearCode::from_strings(strings);
  CHECK(back == c);
}
