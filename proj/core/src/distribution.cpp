#include "ssetkit/distribution.hpp"

#include "ssetkit/errors.hpp"

namespace ssetkit {

Distribution::Distribution(SampleSpace space, RationalVector probs) : space_(std::move(space)), probs_(std::move(probs)) {
  if (probs_.size() != space_.size()) throw ShapeError("distribution length differs from |X|");
  Rational total = 0;
  for (const auto& p : probs_) {
    if (p < 0) throw DomainError("negative probability");
    total += p;
  }
  if (total != 1) throw DomainError("probabilities sum to " + to_string(total) + ", not 1");
}

Distribution Distribution::uniform(const SampleSpace& space) { return uniform_on(space, SampleSubset::full(space.size())); }

Distribution Distribution::uniform_on(const SampleSpace& space, const SampleSubset& support) {
  if (support.empty()) throw DomainError("uniform distribution on an empty set");
  if (support.universe() != space.size()) throw ShapeError("support does not belong to this space");
  RationalVector probs(space.size());
  Rational w(1, static_cast<long>(support.size()));
  for (std::size_t x : support.members()) probs[x] = w;
  return Distribution(space, std::move(probs));
}

Distribution Distribution::point_mass(const SampleSpace& space, std::size_t x) {
  if (x >= space.size()) throw DomainError("point mass index out of range");
  RationalVector probs(space.size());
  probs[x] = 1;
  return Distribution(space, std::move(probs));
}

SampleSubset Distribution::support() const {
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < probs_.size(); ++x)
    if (probs_[x] != 0) members.push_back(x);
  return SampleSubset(probs_.size(), std::move(members));
}

}  // namespace ssetkit
