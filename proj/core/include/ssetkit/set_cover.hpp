#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ssetkit {

using ElementSet = boost::dynamic_bitset<>;

enum class BoundSource { none, exhausted_search, dual_bound, code_bound };

const char* to_string(BoundSource source);

struct SetCoverProblem {
  std::size_t universe = 0;
  ElementSet target;
  std::vector<ElementSet> candidates;
};

struct SetCoverOptions {
  /// Search nodes before giving up on proving optimality.
  std::size_t node_limit = 20'000'000;
  /// Exact LP relaxation at the root when candidates x elements stays below this.
  std::size_t lp_cell_limit = 20'000;
  /// Candidate forced into every cover (symmetry breaking for transitive instances).
  std::optional<std::size_t> forced;
};

struct SetCoverSolution {
  bool feasible = false;
  /// Indices into the candidate list, ascending.
  std::vector<std::size_t> chosen;
  std::size_t lower_bound = 0;
  BoundSource bound_source = BoundSource::none;
  bool optimal = false;
  std::size_t nodes = 0;
};

/**
 * Minimum set cover by depth-first branch and bound: greedy incumbent,
 * exact fractional LP bound at the root, disjoint-element packing bounds at
 * the nodes, branching on the uncovered element with the fewest candidates.
 * Deterministic: ties break toward smaller indices.
 */
SetCoverSolution solve_set_cover(const SetCoverProblem& problem, const SetCoverOptions& options = {});

}  // namespace ssetkit
