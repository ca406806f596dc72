#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ssetkit {

using Configuration = std::vector<int>;

/**
 * Product of finite alphabets X = X_1 x ... x X_N.
 *
 * Configurations are enumerated in mixed radix with variable 0 the most
 * significant digit, so index 0 is 0...0 and the last index is the all-max
 * configuration. Variables are 0-based throughout the API; digit strings
 * print variable 0 first ("0110").
 */
class SampleSpace {
 public:
  SampleSpace() = default;
  explicit SampleSpace(std::vector<int> arities);

  static SampleSpace binary(int variables);
  static SampleSpace uniform(int arity, int variables);

  int variables() const { return static_cast<int>(arities_.size()); }
  std::span<const int> arities() const { return arities_; }
  int arity(int variable) const { return arities_[static_cast<std::size_t>(variable)]; }
  std::size_t size() const { return size_; }
  bool is_binary() const;
  int max_arity() const;

  std::size_t index_of(std::span<const int> configuration) const;
  Configuration configuration(std::size_t index) const;
  int symbol(std::size_t index, int variable) const;

  /// Digit string of a configuration; symbols >= 10 print as 'a', 'b', ...
  std::string format(std::size_t index) const;
  std::size_t parse(std::string_view digits) const;

  friend bool operator==(const SampleSpace&, const SampleSpace&) = default;

 private:
  std::vector<int> arities_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/**
 * A subset of a sample space, kept as a sorted index list. Universes of at
 * most 64 points also carry a bitmask so membership and set algebra run on
 * words; both representations always describe the same set.
 */
class SampleSubset {
 public:
  SampleSubset() = default;
  SampleSubset(std::size_t universe, std::vector<std::size_t> members);

  static SampleSubset from_mask(std::size_t universe, std::uint64_t mask);
  static SampleSubset full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<std::size_t>& members() const { return members_; }
  bool contains(std::size_t index) const;

  bool has_mask() const { return universe_ <= 64; }
  std::uint64_t mask() const;

  bool is_subset_of(const SampleSubset& other) const;
  SampleSubset unite(const SampleSubset& other) const;
  SampleSubset intersect(const SampleSubset& other) const;
  SampleSubset minus(const SampleSubset& other) const;
  SampleSubset complement() const;

  friend bool operator==(const SampleSubset& a, const SampleSubset& b) {
    return a.universe_ == b.universe_ && a.members_ == b.members_;
  }
  friend auto operator<=>(const SampleSubset& a, const SampleSubset& b) { return a.members_ <=> b.members_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::size_t> members_;
  std::uint64_t mask_ = 0;
};

/// Even (Z+) and odd (Z-) parity configurations of a binary space.
struct ParityPair {
  SampleSubset even;
  SampleSubset odd;
};

/// Coordinate assignment for a cylinder set: (variable, symbol).
using PartialAssignment = std::vector<std::pair<int, int>>;

/// { y in X : y agrees with `fixed` on its variables }.
SampleSubset cylinder_set(const SampleSpace& space, const PartialAssignment& fixed);

ParityPair parity_sets(const SampleSpace& space);

/// { x + y mod 2 : y in Y } for a binary space.
SampleSubset xor_translate(const SampleSpace& space, std::size_t x, const SampleSubset& subset);

/// Image of a subset under the coordinate permutation y -> (y_{perm[0]}, ..., y_{perm[N-1]}).
SampleSubset permute_coordinates(const SampleSpace& space, std::span<const int> perm, const SampleSubset& subset);

int hamming_distance(const SampleSpace& space, std::size_t a, std::size_t b);

/// |B_{N,R}| = sum_{i<=R} C(N, i).
std::uint64_t hamming_ball_size(int n, int radius);

/// Exact binomial coefficient; throws DomainError on overflow.
std::uint64_t binomial(int n, int k);

}  // namespace ssetkit
