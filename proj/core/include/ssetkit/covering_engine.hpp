#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ssetkit/face_oracle.hpp"
#include "ssetkit/model_builder.hpp"
#include "ssetkit/set_cover.hpp"

namespace ssetkit {

enum class CoverMode { sset_cover, facial_packing };

const char* to_string(CoverMode mode);

struct CoverLowerBound {
  std::size_t value = 0;
  BoundSource provenance = BoundSource::none;
};

/**
 * A cover of `target` by S-sets (union contains the target) or a facial
 * packing (facial subsets of the target whose union is the target).
 * `kappa` is empty when no such cover exists (kappa = infinity).
 */
struct CoverResult {
  SampleSubset target;
  std::vector<SampleSubset> sets;
  CoverMode mode = CoverMode::sset_cover;
  std::optional<std::size_t> kappa;
  bool optimal = false;
  CoverLowerBound lower_bound;
  /// Set by the explicit constructions: the sets are pairwise disjoint and cover X.
  bool partition = false;
  /// Family the sets were built for.
  std::shared_ptr<const SufficientStatistics> family;
};

/// Maximal S-sets of a family (from the face lattice: simplicial facial sets).
std::vector<std::uint64_t> maximal_ssets(const FaceLattice& lattice);

/// Exact kappa^s(Z) over the maximal S-sets; guarded to |X| <= guard.
CoverResult min_sset_cover(const SufficientStatistics& stats, const SampleSubset& target,
                           std::size_t guard = kDefaultEnumerationGuard);

/// Exact kappa^f(Z): fewest facial subsets of Z with union Z.
CoverResult min_facial_packing(const SufficientStatistics& stats, const SampleSubset& target,
                               std::size_t guard = kDefaultEnumerationGuard);

/// Same, reading the facial subsets of Z off a precomputed lattice of the family.
CoverResult min_facial_packing(const std::shared_ptr<const SufficientStatistics>& stats, const FaceLattice& lattice,
                               const SampleSubset& target);

struct KappaCross {
  std::size_t value = 0;
  /// A facial set of the second family attaining the maximum.
  SampleSubset argmax;
  bool exact = true;
};

/// max over facial sets Z of `other` of kappa^f of `family` at Z.
KappaCross kappa_cross(const SufficientStatistics& family, const SufficientStatistics& other,
                       std::size_t guard = kDefaultEnumerationGuard);

/// ceil((dim E^j + 1) / (N + 1)): components of E^1 needed to reach E^j by parameter count.
std::uint64_t parameter_count_bound(int variables, int j);

/// The cylinder sets with coordinates k..N-1 fixed (0-based), as an S-set cover of X for E^k.
CoverResult cylinder_cover(const SampleSpace& space, int k);

/// Lines along the first coordinate of maximal arity, as an S-set cover of X for E^1.
CoverResult product_line_cover(const SampleSpace& space);

/// Partition of {0,1}^N into S-sets of E^k with ceil(2^(N-k-1) / (1 - 2^-k)) parts.
CoverResult recursive_binary_cover(int variables, int k);

/// ceil(2^(N-k-1) / (1 - 2^-k)).
std::uint64_t recursive_cover_size(int variables, int k);

struct CoverCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Re-checks every condition of the cover's mode against `stats`.
CoverCheck verify_cover(const SufficientStatistics& stats, const CoverResult& cover);

}  // namespace ssetkit
