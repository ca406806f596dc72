#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ssetkit/distribution.hpp"
#include "ssetkit/model_builder.hpp"

namespace ssetkit {

/// Exhaustive procedures (lattice enumeration, circuit cross-check) refuse larger spaces.
inline constexpr std::size_t kDefaultEnumerationGuard = 16;

/**
 * Supporting functional of a face: <c, A_y> = 0 on the zero set and
 * <c, A_x> >= 1 everywhere else. `slack` lists <c, A_x> for the points
 * outside the zero set in index order.
 */
struct FaceCertificate {
  RationalVector functional;
  SampleSubset zero_set;
  RationalVector slack;
};

/// Exact certificate check; true iff the certificate proves its zero set is facial.
bool check_certificate(const SufficientStatistics& stats, const FaceCertificate& cert);

/// Element of ker A with cached sign supports.
struct KernelVector {
  RationalVector values;

  SampleSubset positive_support() const;
  SampleSubset negative_support() const;
  SampleSubset support() const;
};

struct FacialVerdict {
  bool facial = false;
  /// Present iff facial.
  std::optional<FaceCertificate> certificate;
  /// Present iff not facial: a distribution with the same moments as the
  /// uniform distribution on Y whose support leaves Y.
  std::optional<Distribution> witness;
};

struct SSetVerdict {
  bool sset = false;
  /// Whether Y is facial; only evaluated when the columns of Y are independent.
  std::optional<bool> facial;
  std::size_t column_rank = 0;
  std::optional<FaceCertificate> certificate;
  std::optional<Distribution> witness;
  /// Present when the columns of Y are dependent: a kernel vector of A supported in Y.
  std::optional<KernelVector> dependency;
};

/**
 * Facial and S-set decisions for one family. Construction reduces A to a
 * set of linearly independent rows; every query then solves
 *
 *     maximize sum_{x not in Y} l_x   s.t.  A l = sum_{y in Y} A_y,  l >= 0
 *
 * exactly. The optimum is 0 iff Y is facial; the optimal dual is then a
 * supporting functional, and otherwise the optimal primal is a fiber point
 * escaping Y.
 */
class FaceOracle {
 public:
  explicit FaceOracle(SufficientStatistics stats);

  const SufficientStatistics& statistics() const { return stats_; }
  std::size_t universe() const { return stats_.space().size(); }

  FacialVerdict facial(const SampleSubset& y) const;
  SSetVerdict sset(const SampleSubset& y) const;
  std::size_t column_rank(const SampleSubset& y) const;

  /// Bitmask probe (|X| <= 64). Returns a set contained in the smallest
  /// facial superset of y; the result equals y iff y is facial.
  std::uint64_t closure_probe(std::uint64_t y) const;
  std::size_t column_rank(std::uint64_t y) const;

 private:
  struct Probe {
    bool facial;
    RationalVector primal;
    RationalVector dual;
  };
  Probe probe(const std::vector<bool>& in_y) const;

  SufficientStatistics stats_;
  std::vector<std::size_t> basis_rows_;
  RationalMatrix reduced_;
};

std::vector<KernelVector> kernel_basis(const SufficientStatistics& stats);

FacialVerdict is_facial(const SufficientStatistics& stats, const SampleSubset& y);
SSetVerdict is_sset(const SufficientStatistics& stats, const SampleSubset& y);

/// dim aff{A_y : y in Y}; throws PreconditionError when Y is not facial.
std::size_t face_dimension(const SufficientStatistics& stats, const SampleSubset& y);

/**
 * Sign patterns of all circuits (minimal-support kernel vectors) of A,
 * found from the one-dimensional kernels of every (rank+1)-column subset
 * of full rank. Y is an S-set iff no circuit c has supp(c+) ⊆ Y or
 * supp(c-) ⊆ Y.
 */
class CircuitSet {
 public:
  explicit CircuitSet(const SufficientStatistics& stats, std::size_t guard = kDefaultEnumerationGuard);

  struct SignPattern {
    std::uint64_t positive;
    std::uint64_t negative;
    friend auto operator<=>(const SignPattern&, const SignPattern&) = default;
  };

  const std::vector<SignPattern>& circuits() const { return circuits_; }
  bool admits_sset(std::uint64_t y) const;
  bool admits_sset(const SampleSubset& y) const { return admits_sset(y.mask()); }

 private:
  std::vector<SignPattern> circuits_;
};

/// Kernel-side S-set test, independent of the LP route. Guarded to |X| <= guard.
bool sset_kernel_crosscheck(const SufficientStatistics& stats, const SampleSubset& y,
                            std::size_t guard = kDefaultEnumerationGuard);

struct FaceRecord {
  std::uint64_t members;
  std::size_t dimension;
  bool simplex;
};

/// Every nonempty facial set of a family, sorted by bitmask.
struct FaceLattice {
  std::size_t universe = 0;
  std::vector<FaceRecord> faces;
  std::size_t lp_calls = 0;

  bool is_facial(std::uint64_t y) const;
  /// Maximal facial sets other than X.
  std::vector<FaceRecord> facets() const;
};

/**
 * Enumerate facial sets of subsets of `within` (default: all of X).
 * Subsets are visited in increasing bitmask order; the facial closure of a
 * set contains the closures of all its subsets, so most non-facial sets are
 * rejected from already computed closure bounds without an LP.
 */
FaceLattice enumerate_facial_sets(const FaceOracle& oracle, std::optional<std::uint64_t> within = std::nullopt,
                                  std::size_t guard = kDefaultEnumerationGuard);
FaceLattice enumerate_facial_sets(const SufficientStatistics& stats, std::size_t guard = kDefaultEnumerationGuard);

struct FacetRecord {
  SampleSubset members;
  std::size_t dimension;
  bool simplex;
  /// |F ∩ Z+| and |F ∩ Z-| (binary spaces only).
  std::optional<std::size_t> even_count;
  std::optional<std::size_t> odd_count;
};

struct FacetCensus {
  std::size_t polytope_dimension = 0;
  std::size_t vertex_count = 0;
  std::size_t facial_set_count = 0;
  std::vector<FacetRecord> facets;
  std::map<std::size_t, std::size_t> facets_by_vertex_count;
  std::size_t simplex_facets = 0;
  /// Simplex facets keyed by (|F ∩ Z+|, |F ∩ Z-|); binary spaces only.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> simplex_parity_profile;
};

FacetCensus facet_census(const SufficientStatistics& stats, const FaceLattice& lattice);

/// Facets of the cyclic polytope C(v, d) as 0-based index sets (Gale evenness).
std::vector<std::vector<int>> cyclic_facets_gale(int v, int d);

struct SSetCardinalityBounds {
  /// K(N, k+1) used in the bounds, exact or a lower bound.
  std::uint64_t marking;
  bool marking_exact;
  /// Upper bound on |Y ∩ Z±| for an S-set Y of E^k.
  std::uint64_t parity_bound;
  /// |Δ_k|.
  std::uint64_t interaction_bound;
  /// 2^N - 2 K(N, k+1).
  std::uint64_t complement_bound;
  /// min(interaction_bound, complement_bound).
  std::uint64_t size_bound;
};

SSetCardinalityBounds sset_cardinality_bounds(int variables, int k);

}  // namespace ssetkit
