#include "doctest.h"
#include "oracles.hpp"
#include "ssetkit/coding_bounds.hpp"
#include "ssetkit/errors.hpp"

using namespace ssetkit;

namespace {
// ceil(q^N / sum_{j<d} C(N,j)(q-1)^j) in plain integer arithmetic.
std::uint64_t gv_oracle(int q, int n, int d) {
  std::uint64_t total = 1, vol = 0;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(q);
  for (int j = 0; j < d; ++j) {
    std::uint64_t t = oracle::binom(n, j);
    for (int i = 0; i < j; ++i) t *= static_cast<std::uint64_t>(q - 1);
    vol += t;
  }
  return (total + vol - 1) / vol;
}
}  // namespace

TEST_CASE("Gilbert-Varshamov and Singleton bounds") {
  for (int n = 1; n <= 10; ++n) CHECK(gv_bound(2, n, 1) == (std::uint64_t{1} << n));
  for (int n = 2; n <= 10; ++n) CHECK(gv_bound(2, n, 2) == ((std::uint64_t{1} << n) + n) / (n + 1));
  CHECK(gv_bound(3, 3, 2) == 4);
  for (int q = 2; q <= 5; ++q)
    for (int n = 1; n <= 6; ++n)
      for (int d = 1; d <= n; ++d) {
        CHECK(gv_bound(q, n, d) == gv_oracle(q, n, d));
        CHECK(gv_bound(q, n, d) <= singleton_bound(q, n, d));
      }
  CHECK(singleton_bound(3, 4, 2) == 27);
  CHECK(singleton_bound(5, 3, 3) == 5);
  CHECK(singleton_bound(2, 5, 1) == 32);
  CHECK_THROWS_AS(gv_bound(1, 3, 2), DomainError);
  CHECK_THROWS_AS(gv_bound(2, 3, 4), DomainError);
  CHECK_THROWS_AS(singleton_bound(2, 3, 0), DomainError);
}

TEST_CASE("parity codes") {
  auto r = parity_code(3, 2);
  REQUIRE(r.witness);
  SampleSpace s = SampleSpace::uniform(3, 2);
  std::vector<std::string> words;
  for (auto x : *r.witness) words.push_back(s.format(x));
  CHECK(words == std::vector<std::string>{"00", "12", "21"});
  CHECK(*r.exact == 3);
  CHECK(parity_code(3, 3).witness->size() == 9);

  // Binary parity code is Z+.
  auto b = parity_code(2, 4);
  SampleSubset z(16, *b.witness);
  CHECK(z == parity_sets(SampleSpace::binary(4)).even);

  for (int q : {2, 3, 5, 7})
    for (int n = 2; n <= 4; ++n) {
      auto c = parity_code(q, n);
      CHECK(c.witness->size() == singleton_bound(q, n, 2));
      CHECK(c.lower <= *c.exact);
      CHECK(*c.exact <= c.upper);
      // Independent pairwise distance check.
      SampleSpace sp = SampleSpace::uniform(q, n);
      int dmin = n;
      const auto& w = *c.witness;
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
          int dist = 0;
          for (int v = 0; v < n; ++v) dist += sp.symbol(w[i], v) != sp.symbol(w[j], v);
          dmin = std::min(dmin, dist);
        }
      CHECK(dmin == 2);
    }
  auto composite = parity_code(4, 3);
  CHECK_FALSE(composite.witness);
  CHECK(composite.lower == gv_bound(4, 3, 2));
  CHECK(composite.upper == 16);
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("marking numbers") {
  CHECK(*marking_number(4, 3).exact == 2);
  auto k41 = marking_number(4, 1);
  REQUIRE(k41.exact);
  CHECK(*k41.exact == 4);
  CHECK(covering_radius(4, *k41.witness) <= 1);
  // Exhaustive oracle: no 3 words cover {0,1}^4 with radius 1.
  std::vector<std::uint64_t> balls;
  for (std::uint64_t c = 0; c < 16; ++c) {
    std::uint64_t b = 0;
    for (std::uint64_t x = 0; x < 16; ++x)
      if (std::popcount(x ^ c) <= 1) b |= std::uint64_t{1} << x;
    balls.push_back(b);
  }
  CHECK(oracle::brute_force_cover(0xffff, balls) == 4);

  for (int n = 1; n <= 7; ++n)
    for (int r = 1; r <= n; ++r) {
      auto m = marking_number(n, r);
      const std::uint64_t sphere = ((std::uint64_t{1} << n) + hamming_ball_size(n, r) - 1) / hamming_ball_size(n, r);
      CHECK(m.lower >= sphere);
      REQUIRE(m.witness);
      CHECK(covering_radius(n, *m.witness) <= r);
      CHECK(m.witness->size() == m.upper);
      if (m.exact) CHECK(*m.exact >= sphere);
    }
  CHECK(*marking_number(5, 1).exact == 7);
  CHECK(*marking_number(6, 1).exact == 12);
  auto big = marking_number(10, 2);
  CHECK_FALSE(big.exact);
  CHECK(big.lower == (1024 + 55) / 56);
  CHECK(covering_radius(10, *big.witness) <= 2);
  CHECK_THROWS_AS(marking_number(4, 0), DomainError);
  CHECK_THROWS_AS(marking_number(4, 5), DomainError);
}
