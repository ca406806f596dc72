#pragma once

#include <vector>

#include "ssetkit/linalg.hpp"
#include "ssetkit/sample_space.hpp"

namespace ssetkit {

/// Exact probability vector over a sample space: entries >= 0 summing to 1.
class Distribution {
 public:
  Distribution() = default;
  Distribution(SampleSpace space, RationalVector probs);

  static Distribution uniform(const SampleSpace& space);
  static Distribution uniform_on(const SampleSpace& space, const SampleSubset& support);
  static Distribution point_mass(const SampleSpace& space, std::size_t x);

  const SampleSpace& space() const { return space_; }
  const RationalVector& probs() const { return probs_; }
  const Rational& operator[](std::size_t x) const { return probs_[x]; }
  std::size_t size() const { return probs_.size(); }

  SampleSubset support() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  SampleSpace space_;
  RationalVector probs_;
};

}  // namespace ssetkit
