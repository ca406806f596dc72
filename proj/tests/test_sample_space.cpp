#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ssetkit/errors.hpp"
#include "ssetkit/sample_space.hpp"

using namespace ssetkit;

namespace {
SampleSubset parse_all(const SampleSpace& s, std::vector<std::string> digits) {
  std::vector<std::size_t> idx;
  for (auto& d : digits) idx.push_back(s.parse(d));
  std::sort(idx.begin(), idx.end());
  return SampleSubset(s.size(), idx);
}
}  // namespace

TEST_CASE("mixed-radix enumeration is a bijection with variable 0 most significant") {
  SampleSpace s({2, 3, 4});
  CHECK(s.size() == 24);
  for (std::size_t x = 0; x < s.size(); ++x) {
    auto c = s.configuration(x);
    CHECK(s.index_of(c) == x);
    CHECK(s.parse(s.format(x)) == x);
  }
  CHECK(s.format(0) == "000");
  CHECK(s.format(23) == "123");
  CHECK(s.format(4) == "010");
  SampleSpace wide({12});
  CHECK(wide.format(11) == "b");
  CHECK_THROWS_AS(SampleSpace({1, 2}), DomainError);
  CHECK_THROWS_AS(s.parse("0a0"), InvalidAssignmentError);
  CHECK_THROWS_AS(s.parse("00"), ParseError);
  CHECK_THROWS_AS(s.index_of(std::vector<int>{0, 3, 0}), InvalidAssignmentError);
}

TEST_CASE("cylinder sets") {
  SampleSpace s = SampleSpace::binary(3);
  // The third variable fixed to 0.
  CHECK(cylinder_set(s, {{2, 0}}) == parse_all(s, {"000", "010", "100", "110"}));
  CHECK(cylinder_set(s, {}) == SampleSubset::full(8));
  CHECK(cylinder_set(s, {{0, 1}, {1, 0}, {2, 1}}) == parse_all(s, {"101"}));
  CHECK_THROWS_AS(cylinder_set(s, {{0, 2}}), InvalidAssignmentError);
  CHECK_THROWS_AS(cylinder_set(s, {{5, 0}}), InvalidAssignmentError);

  // Fixing lambda partitions X into prod_{i in lambda} |X_i| blocks.
  SampleSpace q({3, 2, 3});
  std::vector<int> seen(q.size(), 0);
  std::size_t blocks = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      SampleSubset c = cylinder_set(q, {{0, a}, {2, b}});
      CHECK(c.size() == 2);
      for (std::size_t x : c.members()) ++seen[x];
      ++blocks;
    }
  CHECK(blocks == 9);
  CHECK(std::all_of(seen.begin(), seen.end(), [](int v) { return v == 1; }));
}

TEST_CASE("parity sets") {
  auto p2 = parity_sets(SampleSpace::binary(2));
  CHECK(p2.even == parse_all(SampleSpace::binary(2), {"00", "11"}));
  CHECK(p2.odd == parse_all(SampleSpace::binary(2), {"01", "10"}));
  auto p4 = parity_sets(SampleSpace::binary(4));
  CHECK(p4.even.size() == 8);
  CHECK(p4.odd.size() == 8);
  CHECK(p4.even.unite(p4.odd) == SampleSubset::full(16));
  CHECK(p4.even.intersect(p4.odd).empty());
  auto p1 = parity_sets(SampleSpace::binary(1));
  CHECK(p1.even == SampleSubset(2, {0}));
  CHECK_THROWS_AS(parity_sets(SampleSpace({3, 2})), UnsupportedSpaceError);
}

TEST_CASE("xor translation") {
  SampleSpace s2 = SampleSpace::binary(2);
  CHECK(xor_translate(s2, s2.parse("11"), parse_all(s2, {"00", "01"})) == parse_all(s2, {"11", "10"}));
  std::mt19937_64 rng(3);
  SampleSpace s = SampleSpace::binary(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t y = rng() & 0xffffffffu;
    if (y == 0) continue;
    SampleSubset ys = SampleSubset::from_mask(32, y);
    const std::size_t x = rng() % 32;
    CHECK(xor_translate(s, 0, ys) == ys);
    SampleSubset t = xor_translate(s, x, ys);
    CHECK(t.size() == ys.size());
    CHECK(xor_translate(s, x, t) == ys);
    for (std::size_t i = 0; i + 1 < ys.size(); ++i)
      CHECK(hamming_distance(s, ys.members()[i], ys.members()[i + 1]) ==
            hamming_distance(s, ys.members()[i] ^ x, ys.members()[i + 1] ^ x));
    // The orbit of any nonempty set covers X.
    SampleSubset orbit(32, {});
    for (std::size_t z = 0; z < 32; ++z) orbit = orbit.unite(xor_translate(s, z, ys));
    CHECK(orbit == SampleSubset::full(32));
  }
  CHECK_THROWS_AS(xor_translate(SampleSpace({3}), 0, SampleSubset(3, {0})), UnsupportedSpaceError);
}

TEST_CASE("coordinate permutations") {
  SampleSpace s = SampleSpace::binary(3);
  std::vector<int> swap01{1, 0, 2};
  CHECK(permute_coordinates(s, swap01, parse_all(s, {"100"})) == parse_all(s, {"010"}));
  std::vector<int> cycle{1, 2, 0};
  SampleSubset y = parse_all(s, {"100", "110"});
  SampleSubset once = permute_coordinates(s, cycle, y);
  CHECK(once.size() == 2);
  SampleSubset thrice = permute_coordinates(s, cycle, permute_coordinates(s, cycle, once));
  CHECK(thrice == y);
  CHECK_THROWS_AS(permute_coordinates(s, std::vector<int>{0, 0, 1}, y), DomainError);
}

TEST_CASE("hamming balls") {
  CHECK(hamming_ball_size(4, 1) == 5);
  CHECK(hamming_ball_size(4, 3) == 15);
  for (int n = 0; n <= 20; ++n) CHECK(hamming_ball_size(n, n) == (std::uint64_t{1} << n));
  CHECK_THROWS_AS(hamming_ball_size(3, 4), DomainError);
  CHECK_THROWS_AS(hamming_ball_size(3, -1), DomainError);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(62, 31) == oracle::binom(62, 31));
  CHECK_THROWS_AS(binomial(100, 50), DomainError);
}

TEST_CASE("subset representations agree") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t a = rng() & 0xffff, b = rng() & 0xffff;
    SampleSubset sa = SampleSubset::from_mask(16, a), sb = SampleSubset::from_mask(16, b);
    CHECK(sa.mask() == a);
    CHECK(sa.unite(sb).mask() == (a | b));
    CHECK(sa.intersect(sb).mask() == (a & b));
    CHECK(sa.minus(sb).mask() == (a & ~b));
    CHECK(sa.complement().mask() == (~a & 0xffff));
    CHECK(sa.is_subset_of(sb) == ((a & ~b) == 0));
    for (std::size_t x = 0; x < 16; ++x) CHECK(sa.contains(x) == (((a >> x) & 1) == 1));
  }
  CHECK_THROWS_AS(SampleSubset(4, {1, 1}), DomainError);
  CHECK_THROWS_AS(SampleSubset(4, {4}), DomainError);
}
