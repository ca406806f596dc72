#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ssetkit/errors.hpp"
#include "ssetkit/set_cover.hpp"

using namespace ssetkit;

namespace {
SetCoverProblem make_problem(std::size_t n, std::uint64_t target, const std::vector<std::uint64_t>& sets) {
  SetCoverProblem p;
  p.universe = n;
  p.target = ElementSet(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((target >> i) & 1) p.target.set(i);
  for (auto s : sets) {
    ElementSet b(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((s >> i) & 1) b.set(i);
    p.candidates.push_back(b);
  }
  return p;
}
}  // namespace

TEST_CASE("set cover matches exhaustive search on random instances") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 6 + trial % 9;
    const std::size_t m = 4 + trial % 11;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> sets;
    for (std::size_t i = 0; i < m; ++i) sets.push_back(rng() & rng() & full);
    const std::uint64_t target = rng() & full;
    auto p = make_problem(n, target, sets);
    SetCoverSolution s = solve_set_cover(p);
    const std::size_t want = oracle::brute_force_cover(target, sets, m);
    if (want == SIZE_MAX) {
      CHECK_FALSE(s.feasible);
      continue;
    }
    REQUIRE(s.feasible);
    CHECK(s.optimal);
    CHECK(s.chosen.size() == want);
    CHECK(s.lower_bound == want);
    CHECK(std::is_sorted(s.chosen.begin(), s.chosen.end()));
    std::uint64_t u = 0;
    for (auto i : s.chosen) u |= sets[i];
    CHECK((target & ~u) == 0);
  }
}

TEST_CASE("set cover bookkeeping") {
  auto empty_target = make_problem(4, 0, {0b0011});
  SetCoverSolution e = solve_set_cover(empty_target);
  CHECK(e.feasible);
  CHECK(e.chosen.empty());

  // Three disjoint pairs: the LP bound proves optimality without branching.
  auto pairs = make_problem(6, 0b111111, {0b000011, 0b001100, 0b110000, 0b000110, 0b011000});
  SetCoverSolution s = solve_set_cover(pairs);
  CHECK(s.optimal);
  CHECK(s.chosen.size() == 3);

  SetCoverOptions forced;
  forced.forced = 3;
  SetCoverSolution f = solve_set_cover(pairs, forced);
  CHECK(std::find(f.chosen.begin(), f.chosen.end(), 3) != f.chosen.end());
  CHECK(f.chosen.size() == 4);

  auto bad = pairs;
  bad.candidates[0].resize(3);
  CHECK_THROWS_AS(solve_set_cover(bad), ShapeError);
  CHECK(std::string(to_string(BoundSource::dual_bound)) == "dual bound");
}

TEST_CASE("node budget reports a valid lower bound") {
  // Covering {0,1}^6 by radius-1 Hamming balls; optimum is 12.
  std::vector<std::uint64_t> balls;
  for (std::uint64_t c = 0; c < 64; ++c) {
    std::uint64_t b = 0;
    for (std::uint64_t x = 0; x < 64; ++x)
      if (std::popcount(x ^ c) <= 1) b |= std::uint64_t{1} << x;
    balls.push_back(b);
  }
  SetCoverProblem p;
  p.universe = 64;
  p.target = ElementSet(64);
  p.target.set();
  for (auto b : balls) p.candidates.push_back(ElementSet(64, b));
  SetCoverOptions tiny;
  tiny.node_limit = 10;
  tiny.lp_cell_limit = 0;
  SetCoverSolution s = solve_set_cover(p, tiny);
  CHECK(s.feasible);
  CHECK_FALSE(s.optimal);
  CHECK(s.lower_bound <= 12);
  CHECK(s.chosen.size() >= 12);
  CHECK(s.bound_source == BoundSource::dual_bound);
}
