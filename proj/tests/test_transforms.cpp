#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cpg/families.hpp"
#include "cpg/parse.hpp"
#include "cpg/transforms.hpp"

using namespace cpg;

TEST_CASE("two-generator relator of the shift HNN extension") {
  // w = x1 x4 x2^-1 (n = 5) maps to a c^2 a c^-2 a^-1 c^-1
  CyclicWord cw(5, word_from(5, {{1, +1}, {4, +1}, {2, -1}}));
  CHECK(hnn_two_generator(cw) == parse_two_gen("a c^2 a c^-2 a^-1 c^-1", 5));
  // w = x1 -> a c^-1
  CHECK(hnn_two_generator(CyclicWord(5, word_from(5, {{1, +1}}))) ==
        parse_two_gen("a c^-1", 5));
  // w = x1 x2 x3^-1 (n = 5) -> a a c a^-1 c^-2
  CHECK(hnn_two_generator(CyclicWord(5, word_from(5, {{1, +1}, {2, +1}, {3, -1}}))) ==
        parse_two_gen("a a c a^-1 c^-2", 5));
  // the general H word: W = a c^{m-1} a c^{k-m} a^-1 c^-k (1 <= m,k < n,
  // where the printed subscripts 1+m, 1+k need no reduction)
  for (int n = 2; n <= 7; ++n)
    for (int m = 1; m < n; ++m)
      for (int k = 1; k < n; ++k) {
        TwoGenWord w(n);
        w.push(Gen2::a, +1);
        w.push_power(Gen2::c, m - 1);
        w.push(Gen2::a, +1);
        w.push_power(Gen2::c, k - m);
        w.push(Gen2::a, -1);
        w.push_power(Gen2::c, -k);
        CHECK(hnn_two_generator(family_hnk({n, m, k})) == free_reduce(w));
      }
}

TEST_CASE("exponent sums under the HNN substitution") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 6;
    Word w(n);
    std::uniform_int_distribution<int> gen(1, n), sgn(0, 1), len(1, 9);
    int L = len(rng);
    for (int i = 0; i < L; ++i) w.push(gen(rng), sgn(rng) ? +1 : -1);
    TwoGenWord W = hnn_two_generator(CyclicWord(n, free_reduce(w)));
    long long total = exponent_data(free_reduce(w)).total;
    CHECK(asum(W) == total);
    CHECK(csum(W) == -total);
  }
}

TEST_CASE("zeroing the c-exponent sum") {
  // a c^{m-1} a c^{k-m} a^-1 c^-k -> a c^m a c^{k-m} a^-1 c^-k (gamma = 1)
  TwoGenWord w = parse_two_gen("a c^2 a c^-2 a^-1 c^-1", 5);  // m=3, k=1
  CHECK(normalize_c_sum(w) == parse_two_gen("a c^3 a c^-2 a^-1 c^-1", 5));
  // already balanced: unchanged
  TwoGenWord u = parse_two_gen("a c a c^-1 a^-1", 5);
  CHECK(csum(u) == 0);
  CHECK(normalize_c_sum(u) == u);
  // a c^-1 -> a
  CHECK(normalize_c_sum(parse_two_gen("a c^-1", 4)) == parse_two_gen("a", 4));
  CHECK_THROWS_AS(normalize_c_sum(parse_two_gen("a a", 4)), std::invalid_argument);
}

TEST_CASE("reading the cyclic word off the syllables") {
  // U = a c^m a c^{k-m} a^-1 c^-k -> x1 x_{1+m} x_{1+k}^-1
  for (int n = 3; n <= 8; ++n)
    for (int m = 1; m < n; ++m)
      for (int k = 1; k < n; ++k) {
        TwoGenWord u(n);
        u.push(Gen2::a, +1);
        u.push_power(Gen2::c, m);
        u.push(Gen2::a, +1);
        u.push_power(Gen2::c, k - m);
        u.push(Gen2::a, -1);
        u.push_power(Gen2::c, -k);
        u = free_reduce(u);
        if (asum(u) != 1 || csum(u) != 0) continue;
        CyclicWord got = derive_cyclic_word(u);
        CHECK(got.w == free_reduce(family_hnk({n, m, k}).w));
      }
  // U = a -> x1
  CHECK(derive_cyclic_word(parse_two_gen("a", 4)).w == word_from(4, {{1, +1}}));
  // U = a c^2 a c^-1 a^-1 c^-1 -> x1 x3 x2^-1
  CHECK(derive_cyclic_word(parse_two_gen("a c^2 a c^-1 a^-1 c^-1", 5)).w ==
        word_from(5, {{1, +1}, {3, +1}, {2, -1}}));
  // output is always admissible
  CHECK(exponent_data(derive_cyclic_word(parse_two_gen("a c^2 a c^-1 a^-1 c^-1", 5)).w)
            .admissible);
  CHECK_THROWS_AS(derive_cyclic_word(parse_two_gen("a c", 3)), std::invalid_argument);
}

TEST_CASE("round trip derive . normalize . hnn") {
  std::mt19937 rng(4711);
  int done = 0;
  while (done < 250) {
    int n = 2 + static_cast<int>(rng() % 9);
    Word w(n);
    std::uniform_int_distribution<int> gen(1, n), sgn(0, 1), len(1, 8);
    int L = len(rng);
    for (int i = 0; i < L; ++i) w.push(gen(rng), sgn(rng) ? +1 : -1);
    w = cyclically_reduce(w).core;
    auto d = exponent_data(w);
    if (w.empty() || !d.admissible) continue;
    ++done;
    CyclicWord cw(n, w);
    TwoGenWord W = hnn_two_generator(cw);
    if (asum(W) == -1) W = free_reduce(inverse(W));
    CyclicWord back = derive_cyclic_word(normalize_c_sum(W));
    CHECK(cyclic_equivalent(back.w, w));
    CHECK(exponent_data(back.w).admissible);
  }
}
