#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ssetkit/errors.hpp"
#include "ssetkit/face_oracle.hpp"

using namespace ssetkit;

namespace {
SufficientStatistics ek(int n, int k) { return character_matrix(n, interaction_complex_k(n, k)); }
SampleSubset mask(std::size_t n, std::uint64_t m) { return SampleSubset::from_mask(n, m); }
}  // namespace

TEST_CASE("kernel basis") {
  auto full = ek(3, 3);
  CHECK(kernel_basis(full).empty());
  auto e1 = ek(2, 1);
  auto kb = kernel_basis(e1);
  REQUIRE(kb.size() == 1);
  // Proportional to (1,-1,-1,1) over 00,01,10,11.
  const auto& v = kb[0].values;
  CHECK(v[0] != 0);
  CHECK(v[1] == -v[0]);
  CHECK(v[2] == -v[0]);
  CHECK(v[3] == v[0]);
  for (int k = 0; k <= 3; ++k) {
    auto a = ek(3, k);
    auto basis = kernel_basis(a);
    CHECK(basis.size() == 8 - a.rank());
    for (const auto& m : basis) {
      auto image = a.matrix() * std::span<const Rational>(m.values);
      CHECK(std::all_of(image.begin(), image.end(), [](const Rational& x) { return x == 0; }));
      CHECK(m.positive_support().intersect(m.negative_support()).empty());
    }
  }
}

TEST_CASE("facial sets of the independence model are the cylinder sets") {
  for (int n = 2; n <= 3; ++n) {
    auto a = ek(n, 1);
    FaceOracle o(a);
    const std::size_t size = std::size_t{1} << n;
    for (std::uint64_t y = 1; y < (std::uint64_t{1} << size); ++y) {
      FacialVerdict v = o.facial(mask(size, y));
      CHECK(v.facial == oracle::is_cube_cylinder(y, n));
      if (v.facial) {
        REQUIRE(v.certificate);
        CHECK(check_certificate(a, *v.certificate));
      } else {
        REQUIRE(v.witness);
        // Same moments as uniform on Y, support leaving Y.
        CHECK(moment_map(a, *v.witness) == moment_map(a, Distribution::uniform_on(a.space(), mask(size, y))));
        CHECK_FALSE(v.witness->support().is_subset_of(mask(size, y)));
      }
    }
  }
}

TEST_CASE("facial verdict edge cases") {
  auto a = ek(3, 2);
  FacialVerdict whole = is_facial(a, SampleSubset::full(8));
  CHECK(whole.facial);
  REQUIRE(whole.certificate);
  CHECK(std::all_of(whole.certificate->functional.begin(), whole.certificate->functional.end(),
                    [](const Rational& c) { return c == 0; }));
  CHECK_THROWS_AS(is_facial(a, SampleSubset(8, {})), DomainError);
  // A tampered certificate no longer verifies.
  FacialVerdict edge = is_facial(a, SampleSubset(8, {0, 1}));
  REQUIRE(edge.certificate);
  FaceCertificate bad = *edge.certificate;
  bad.functional[1] += 1;
  CHECK_FALSE(check_certificate(a, bad));
}

TEST_CASE("S-sets: singletons, cube edges, parity blocks") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k) {
      auto a = ek(n, k);
      FaceOracle o(a);
      const std::size_t size = std::size_t{1} << n;
      for (std::size_t x = 0; x < size; ++x) CHECK(o.sset(SampleSubset(size, {x})).sset);
    }
  auto e1 = ek(4, 1);
  FaceOracle o1(e1);
  for (std::size_t x = 0; x < 16; ++x)
    for (std::size_t y = x + 1; y < 16; ++y) CHECK(o1.sset(SampleSubset(16, {x, y})).sset == (std::popcount(x ^ y) == 1));

  // A (k+1)-cylinder containing its even part is neither facial nor an S-set once it is not the whole cylinder.
  auto e2 = ek(4, 2);
  FaceOracle o2(e2);
  const SampleSpace s = SampleSpace::binary(4);
  SampleSubset cyl = cylinder_set(s, {{3, 0}});
  ParityPair z = parity_sets(s);
  SampleSubset even_part = cyl.intersect(z.even);
  SampleSubset y = even_part.unite(SampleSubset(16, {cyl.intersect(z.odd).members().front()}));
  CHECK_FALSE(o2.facial(y).facial);
  CHECK_FALSE(o2.sset(y).sset);
  CHECK_FALSE(o2.sset(cyl).sset);

  // Z+ of the square is dependent: the dependency is the kernel vector.
  SSetVerdict zp = is_sset(ek(2, 1), SampleSubset(4, {0, 3}));
  CHECK_FALSE(zp.sset);
  CHECK_FALSE(sset_kernel_crosscheck(ek(2, 1), SampleSubset(4, {0, 3})));
}

TEST_CASE("face dimension") {
  auto e2 = ek(4, 2);
  CHECK(face_dimension(e2, SampleSubset(16, {5})) == 0);
  CHECK(face_dimension(e2, SampleSubset::full(16)) == 10);
  CHECK(face_dimension(e2, SampleSubset(16, {0, 1, 2})) == 2);
  CHECK_THROWS_AS(face_dimension(ek(2, 1), SampleSubset(4, {0, 3})), PreconditionError);
}

TEST_CASE("S-set and kernel cross-check agree exhaustively on small families") {
  for (int k = 1; k <= 2; ++k) {
    auto a = ek(3, k);
    FaceOracle o(a);
    CircuitSet circuits(a);
    for (std::uint64_t y = 1; y < 256; ++y) {
      SampleSubset ys = mask(8, y);
      SSetVerdict v = o.sset(ys);
      CHECK(v.sset == circuits.admits_sset(y));
      // Independent rank oracle for the column test.
      CHECK(v.column_rank == oracle::integer_rank(oracle::integer_columns(a, ys.members())));
    }
  }
  // Full column rank: every facial set passes vacuously.
  auto full = ek(3, 3);
  CHECK(CircuitSet(full).circuits().empty());
  CHECK_THROWS_AS(CircuitSet(ek(5, 1)), CapacityError);
}

TEST_CASE("pentagon face lattice") {
  auto p = ngon_statistics(5);
  FaceLattice lat = enumerate_facial_sets(p);
  // X, five adjacent pairs, five singletons.
  CHECK(lat.faces.size() == 11);
  auto facets = lat.facets();
  REQUIRE(facets.size() == 5);
  for (const auto& f : facets) {
    auto m = oracle::mask_members(f.members);
    REQUIRE(m.size() == 2);
    CHECK(((m[1] - m[0]) == 1 || (m[0] == 0 && m[1] == 4)));
    CHECK(f.simplex);
  }
  auto tri = ngon_statistics(3);
  CHECK(enumerate_facial_sets(tri).faces.size() == 7);
}

TEST_CASE("lattice of the 3-cube and closure under intersection") {
  auto e1 = ek(3, 1);
  FaceLattice lat = enumerate_facial_sets(e1);
  // Faces of the 3-cube: 8 vertices, 12 edges, 6 squares, the cube.
  CHECK(lat.faces.size() == 27);
  CHECK(lat.facets().size() == 6);
  for (const auto& f : lat.faces)
    for (const auto& g : lat.faces)
      if ((f.members & g.members) != 0) CHECK(lat.is_facial(f.members & g.members));
  // Restricted enumeration sees exactly the faces inside the restriction.
  FaceOracle o(e1);
  const std::uint64_t z = 0b00001111;
  FaceLattice inside = enumerate_facial_sets(o, z);
  std::size_t expected = 0;
  for (const auto& f : lat.faces) expected += (f.members & ~z) == 0;
  CHECK(inside.faces.size() == expected);
  CHECK_THROWS_AS(enumerate_facial_sets(ek(5, 1)), CapacityError);
}

TEST_CASE("cyclic polytope facets by Gale evenness") {
  for (int d = 2; d <= 6; ++d) CHECK(cyclic_facets_gale(d + 1, d).size() == static_cast<std::size_t>(d + 1));
  for (int k = 1; k <= 3; ++k) {
    const int v = 1 << (k + 1);
    auto facets = cyclic_facets_gale(v, v - 2);
    CHECK(facets.size() == (std::size_t{1} << (2 * k)));
    // Complements are one even and one odd index.
    for (const auto& f : facets) {
      std::vector<int> missing;
      for (int i = 0; i < v; ++i)
        if (std::find(f.begin(), f.end(), i) == f.end()) missing.push_back(i);
      REQUIRE(missing.size() == 2);
      CHECK((missing[0] + missing[1]) % 2 == 1);
    }
  }
  // Even-dimensional cyclic polytopes C(v, 2m) have v/(v-m) * C(v-m, m) facets.
  CHECK(cyclic_facets_gale(7, 4).size() == 14);
  CHECK(cyclic_facets_gale(8, 4).size() == 20);
}

TEST_CASE("S-set cardinality bounds") {
  auto b = sset_cardinality_bounds(4, 2);
  CHECK(b.marking == 2);
  CHECK(b.marking_exact);
  CHECK(b.parity_bound == 6);
  CHECK(b.interaction_bound == 11);
  CHECK(b.complement_bound == 12);
  CHECK(b.size_bound == 11);
  CHECK_THROWS_AS(sset_cardinality_bounds(4, 4), DomainError);
}
