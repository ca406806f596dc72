#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssetkit/sample_space.hpp"

namespace ssetkit {

/**
 * Bracket [lower, upper] on a coding quantity. For A_q(N,d) reports `d` is
 * set; for covering numbers K(N,R) `radius` is set. A witness code, when
 * present, has been checked by brute force.
 */
struct CodeBoundReport {
  int q = 2;
  int n = 0;
  std::optional<int> distance;
  std::optional<int> radius;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::optional<std::uint64_t> exact;
  std::optional<std::vector<std::size_t>> witness;
  std::string note;
};

/// ceil(q^N / sum_{j<d} C(N,j) (q-1)^j).
std::uint64_t gv_bound(int q, int n, int d);

/// q^(N-d+1).
std::uint64_t singleton_bound(int q, int n, int d);

/// { x : sum x_i = 0 mod q } for prime q, with its minimum distance verified.
CodeBoundReport parity_code(int q, int n);

/// Smallest pairwise Hamming distance of a code (brute force).
int minimum_distance(const SampleSpace& space, const std::vector<std::size_t>& code);

/// Largest distance from a point of {0,1}^N to the nearest codeword.
int covering_radius(int n, const std::vector<std::size_t>& code);

/**
 * K(N,R): fewest binary words whose radius-R Hamming balls cover {0,1}^N.
 * Exact by set-cover search for N <= 8 (within a node budget); otherwise
 * sphere-covering lower bound and greedy upper bound.
 */
CodeBoundReport marking_number(int n, int radius, std::size_t node_limit = 5'000'000);

bool is_prime(int q);

}  // namespace ssetkit
