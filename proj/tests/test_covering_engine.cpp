#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ssetkit/covering_engine.hpp"
#include "ssetkit/errors.hpp"

using namespace ssetkit;

namespace {
SufficientStatistics ek(int n, int k) { return character_matrix(n, interaction_complex_k(n, k)); }

bool is_partition(const CoverResult& c) {
  std::vector<int> hits(c.target.universe(), 0);
  for (const auto& s : c.sets)
    for (auto x : s.members()) ++hits[x];
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}
}  // namespace

TEST_CASE("minimum S-set covers") {
  auto e1 = ek(4, 1);
  CoverResult c1 = min_sset_cover(e1, SampleSubset::full(16));
  CHECK(*c1.kappa == 8);
  CHECK(c1.optimal);
  CHECK(verify_cover(e1, c1).ok);
  // Oracle: maximal S-sets of the cube model are its 32 edges; exhaustive search over them.
  std::vector<std::uint64_t> edges;
  for (std::uint64_t x = 0; x < 16; ++x)
    for (int b = 0; b < 4; ++b)
      if (!((x >> b) & 1)) edges.push_back((std::uint64_t{1} << x) | (std::uint64_t{1} << (x | (1u << b))));
  CHECK(oracle::brute_force_cover(0xffff, edges) == 8);

  auto pent = ngon_statistics(5);
  CoverResult cp = min_sset_cover(pent, SampleSubset::full(5));
  CHECK(*cp.kappa == 3);
  CHECK(cp.optimal);

  for (int n = 3; n <= 7; ++n) {
    auto g = ngon_statistics(n);
    // The triangle is itself a simplex; larger polygons need ceil(n/2) edges.
    CHECK(*min_sset_cover(g, SampleSubset::full(static_cast<std::size_t>(n))).kappa == (n == 3 ? 1u : static_cast<std::size_t>((n + 1) / 2)));
  }
  CHECK_THROWS_AS(min_sset_cover(ek(5, 1), SampleSubset::full(32)), CapacityError);
}

TEST_CASE("the second-order model on four bits is covered by two S-sets") {
  auto e2 = ek(4, 2);
  CoverResult c = min_sset_cover(e2, SampleSubset::full(16));
  REQUIRE(c.kappa);
  CHECK(*c.kappa == 2);
  CHECK(c.optimal);
  CHECK(verify_cover(e2, c).ok);
  // Independent check of the witness: columns independent (integer rank) and the
  // circuit criterion admits each set.
  CircuitSet circuits(e2);
  for (const auto& s : c.sets) {
    CHECK(oracle::integer_rank(oracle::integer_columns(e2, s.members())) == s.size());
    CHECK(circuits.admits_sset(s));
  }
  // One S-set cannot cover: X itself is not a simplex.
  CHECK_FALSE(is_sset(e2, SampleSubset::full(16)).sset);
}

TEST_CASE("facial packings") {
  // Z+ of the cube contains no edge, so only singletons pack it.
  for (int n = 2; n <= 4; ++n) {
    auto e1 = ek(n, 1);
    auto zp = parity_sets(SampleSpace::binary(n)).even;
    CoverResult c = min_facial_packing(e1, zp);
    CHECK(*c.kappa == zp.size());
    CHECK(c.optimal);
    CHECK(verify_cover(e1, c).ok);
  }
  // Pentagon: worst case over all nonempty Z is 2.
  auto pent = ngon_statistics(5);
  FaceLattice lat = enumerate_facial_sets(pent);
  auto shared = std::make_shared<const SufficientStatistics>(pent);
  std::size_t worst = 0;
  for (std::uint64_t z = 1; z < 32; ++z) {
    CoverResult c = min_facial_packing(shared, lat, SampleSubset::from_mask(5, z));
    REQUIRE(c.kappa);
    worst = std::max(worst, *c.kappa);
  }
  CHECK(worst == 2);
  CHECK(*min_facial_packing(pent, SampleSubset(5, {1, 2})).kappa == 1);
}

TEST_CASE("kappa cross and parameter counting") {
  auto e1 = ek(3, 1);
  CHECK(kappa_cross(e1, e1).value == 1);
  auto e2 = ek(3, 2);
  KappaCross k = kappa_cross(e1, e2);
  // Lower-bound rule: at least 2^j - 1.
  CHECK(k.value >= 3);
  CHECK(k.exact);
  CHECK(parameter_count_bound(4, 3) == 3);
  CHECK(parameter_count_bound(4, 1) == 1);
  CHECK(parameter_count_bound(4, 4) == 4);
}

TEST_CASE("cylinder covers") {
  CoverResult c = cylinder_cover(SampleSpace::binary(3), 1);
  CHECK(c.sets.size() == 4);
  CHECK(is_partition(c));
  for (const auto& s : c.sets) CHECK(s.size() == 2);
  CHECK(cylinder_cover(SampleSpace::binary(3), 3).sets.size() == 1);
  CoverResult q = cylinder_cover(SampleSpace::uniform(3, 3), 2);
  CHECK(q.sets.size() == 3);
  CHECK(verify_cover(*q.family, q).ok);
  CHECK_THROWS_AS(cylinder_cover(SampleSpace::binary(3), 0), DomainError);
}

TEST_CASE("line covers") {
  CoverResult c = product_line_cover(SampleSpace::uniform(3, 3));
  CHECK(c.sets.size() == 9);
  for (const auto& s : c.sets) CHECK(s.size() == 3);
  CHECK(is_partition(c));
  CHECK(product_line_cover(SampleSpace({2, 3})).sets.size() == 2);
  CHECK(product_line_cover(SampleSpace({4})).sets.size() == 1);
  CoverResult mixed = product_line_cover(SampleSpace({2, 4, 3}));
  CHECK(mixed.sets.size() == 6);
  CHECK(verify_cover(*mixed.family, mixed).ok);
}

TEST_CASE("recursive binary covers") {
  const std::vector<std::pair<int, int>> cases{{2, 1}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 3}, {6, 2}, {6, 3}, {7, 2}, {7, 3}};
  for (auto [n, k] : cases) {
    CoverResult c = recursive_binary_cover(n, k);
    // ceil(2^(N-k-1) / (1 - 2^-k)) computed in exact rationals.
    Rational bound = Rational(std::int64_t{1} << (n - k - 1)) / (Rational(1) - Rational(1, std::int64_t{1} << k));
    CHECK(c.sets.size() == ceil(bound).convert_to<std::size_t>());
    CHECK(c.sets.size() == recursive_cover_size(n, k));
    CHECK(is_partition(c));
    CHECK(verify_cover(*c.family, c).ok);
  }
  CHECK(recursive_binary_cover(4, 2).sets.size() == 3);
  CHECK(recursive_binary_cover(5, 2).sets.size() == 6);
  CHECK_THROWS_AS(recursive_binary_cover(3, 3), DomainError);
}

TEST_CASE("verify_cover reports tampering") {
  auto e2 = ek(4, 2);
  CoverResult c = recursive_binary_cover(4, 2);
  CHECK(verify_cover(e2, c).ok);

  CoverResult moved = c;
  // Swap one member of the first set for a member of the second.
  auto first = moved.sets[0].members();
  first.back() = moved.sets[1].members().front();
  std::sort(first.begin(), first.end());
  moved.sets[0] = SampleSubset(16, first);
  CoverCheck bad = verify_cover(e2, moved);
  CHECK_FALSE(bad.ok);
  CHECK(std::any_of(bad.failures.begin(), bad.failures.end(),
                    [](const std::string& f) { return f.find("is not covered") != std::string::npos; }));

  CoverResult dropped = c;
  dropped.sets.pop_back();
  dropped.kappa = dropped.sets.size();
  CHECK_FALSE(verify_cover(e2, dropped).ok);

  auto e1 = ek(3, 1);
  CoverResult packing = min_facial_packing(e1, SampleSubset(8, {0, 1}));
  packing.sets[0] = SampleSubset(8, {0, 2});
  CoverCheck outside = verify_cover(e1, packing);
  CHECK_FALSE(outside.ok);
  CHECK(std::any_of(outside.failures.begin(), outside.failures.end(),
                    [](const std::string& f) { return f.find("not a subset of the target") != std::string::npos; }));
}
