#pragma once

#include <string>
#include <vector>

#include "ssetkit/distribution.hpp"
#include "ssetkit/linalg.hpp"
#include "ssetkit/sample_space.hpp"

namespace ssetkit {

/// A set of variables, sorted ascending, 0-based.
using Interaction = std::vector<int>;

/**
 * Collection of interaction sets over N variables. The empty interaction is
 * always present and listed first; the remaining sets are ordered by size,
 * then lexicographically.
 */
class InteractionComplex {
 public:
  InteractionComplex(int variables, std::vector<Interaction> sets);

  /// Delta_k: every subset of [N] with at most k elements.
  static InteractionComplex up_to(int variables, int k);

  int variables() const { return variables_; }
  const std::vector<Interaction>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(const Interaction& set) const;
  /// Closed under taking subsets.
  bool is_hierarchical() const;
  /// Every variable appears in some interaction.
  bool covers_all_variables() const;

 private:
  int variables_;
  std::vector<Interaction> sets_;
};

/// "{}" or "{1,3}" with 1-based variable numbers.
std::string interaction_label(const Interaction& set);

/**
 * Sufficient statistics of an exponential family: an exact matrix whose
 * first row is the all-ones vector and whose columns are indexed by the
 * sample space enumeration.
 */
class SufficientStatistics {
 public:
  SufficientStatistics(SampleSpace space, RationalMatrix rows, std::vector<std::string> labels);

  const SampleSpace& space() const { return space_; }
  const RationalMatrix& matrix() const { return rows_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t row_count() const { return rows_.rows(); }
  std::size_t rank() const { return rank_; }
  /// Dimension of the family: rank minus the normalising direction.
  std::size_t family_dimension() const { return rank_ - 1; }
  RationalVector column(std::size_t x) const { return rows_.column(x); }

 private:
  SampleSpace space_;
  RationalMatrix rows_;
  std::vector<std::string> labels_;
  std::size_t rank_;
};

InteractionComplex interaction_complex_k(int variables, int k);

/// Rows (-1)^{|supp(x) ∩ λ|} for λ in Δ, in Δ order.
SufficientStatistics character_matrix(int variables, const InteractionComplex& delta);

/// All-ones row plus one indicator row x -> [x_λ = a] per nonempty λ and joint symbol a.
SufficientStatistics qary_statistics(const SampleSpace& space, const InteractionComplex& delta);

/// Rows 1, t, t^2 on {0,...,n-1}: the columns are in convex position and
/// consecutive indices (cyclically) are adjacent polygon vertices.
SufficientStatistics ngon_statistics(int n);

/// A . p, exact.
RationalVector moment_map(const SufficientStatistics& stats, const Distribution& p);

}  // namespace ssetkit
