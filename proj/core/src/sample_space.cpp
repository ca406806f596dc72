#include "ssetkit/sample_space.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "ssetkit/errors.hpp"
#include "ssetkit/rational.hpp"

namespace ssetkit {

SampleSpace::SampleSpace(std::vector<int> arities) : arities_(std::move(arities)) {
  if (arities_.empty()) throw DomainError("sample space needs at least one variable");
  strides_.assign(arities_.size(), 1);
  size_ = 1;
  for (std::size_t i = arities_.size(); i-- > 0;) {
    if (arities_[i] < 2) throw DomainError("every alphabet needs at least two symbols");
    if (arities_[i] > 36) throw DomainError("alphabets are limited to 36 symbols");
    strides_[i] = size_;
    if (size_ > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(arities_[i]))
      throw DomainError("sample space too large");
    size_ *= static_cast<std::size_t>(arities_[i]);
  }
}

SampleSpace SampleSpace::binary(int variables) { return uniform(2, variables); }

SampleSpace SampleSpace::uniform(int arity, int variables) {
  if (variables < 1) throw DomainError("need at least one variable");
  return SampleSpace(std::vector<int>(static_cast<std::size_t>(variables), arity));
}

bool SampleSpace::is_binary() const {
  return std::all_of(arities_.begin(), arities_.end(), [](int a) { return a == 2; });
}

int SampleSpace::max_arity() const { return *std::max_element(arities_.begin(), arities_.end()); }

std::size_t SampleSpace::index_of(std::span<const int> configuration) const {
  if (configuration.size() != arities_.size()) throw ShapeError("configuration length differs from N");
  std::size_t index = 0;
  for (std::size_t i = 0; i < arities_.size(); ++i) {
    if (configuration[i] < 0 || configuration[i] >= arities_[i])
      throw InvalidAssignmentError("symbol out of range for variable " + std::to_string(i));
    index += strides_[i] * static_cast<std::size_t>(configuration[i]);
  }
  return index;
}

Configuration SampleSpace::configuration(std::size_t index) const {
  if (index >= size_) throw DomainError("configuration index out of range");
  Configuration c(arities_.size());
  for (std::size_t i = 0; i < arities_.size(); ++i)
    c[i] = static_cast<int>((index / strides_[i]) % static_cast<std::size_t>(arities_[i]));
  return c;
}

int SampleSpace::symbol(std::size_t index, int variable) const {
  auto v = static_cast<std::size_t>(variable);
  return static_cast<int>((index / strides_[v]) % static_cast<std::size_t>(arities_[v]));
}

std::string SampleSpace::format(std::size_t index) const {
  std::string out;
  out.reserve(arities_.size());
  for (int s : configuration(index)) out.push_back(s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + s - 10));
  return out;
}

std::size_t SampleSpace::parse(std::string_view digits) const {
  if (digits.size() != arities_.size())
    throw ParseError("configuration '" + std::string(digits) + "' has wrong length");
  Configuration c(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    char ch = digits[i];
    if (ch >= '0' && ch <= '9')
      c[i] = ch - '0';
    else if (ch >= 'a' && ch <= 'z')
      c[i] = ch - 'a' + 10;
    else
      throw ParseError("bad symbol '" + std::string(1, ch) + "' in configuration");
  }
  return index_of(c);
}

SampleSubset::SampleSubset(std::size_t universe, std::vector<std::size_t> members)
    : universe_(universe), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw DomainError("subset contains a duplicate index");
  if (!members_.empty() && members_.back() >= universe_) throw DomainError("subset index out of range");
  if (has_mask())
    for (std::size_t m : members_) mask_ |= std::uint64_t{1} << m;
}

SampleSubset SampleSubset::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw DomainError("bitmask subsets need a universe of at most 64 points");
  if (universe < 64 && (mask >> universe) != 0) throw DomainError("mask has bits beyond the universe");
  std::vector<std::size_t> members;
  members.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for (std::uint64_t m = mask; m != 0; m &= m - 1) members.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return SampleSubset(universe, std::move(members));
}

SampleSubset SampleSubset::full(std::size_t universe) {
  std::vector<std::size_t> members(universe);
  for (std::size_t i = 0; i < universe; ++i) members[i] = i;
  return SampleSubset(universe, std::move(members));
}

bool SampleSubset::contains(std::size_t index) const {
  if (index >= universe_) return false;
  if (has_mask()) return (mask_ >> index) & 1u;
  return std::binary_search(members_.begin(), members_.end(), index);
}

std::uint64_t SampleSubset::mask() const {
  if (!has_mask()) throw DomainError("subset universe exceeds 64 points; no bitmask form");
  return mask_;
}

namespace {
void require_same_universe(const SampleSubset& a, const SampleSubset& b) {
  if (a.universe() != b.universe()) throw ShapeError("subsets live in different sample spaces");
}
}  // namespace

bool SampleSubset::is_subset_of(const SampleSubset& other) const {
  require_same_universe(*this, other);
  if (has_mask()) return (mask_ & ~other.mask_) == 0;
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

SampleSubset SampleSubset::unite(const SampleSubset& other) const {
  require_same_universe(*this, other);
  std::vector<std::size_t> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(), std::back_inserter(out));
  return SampleSubset(universe_, std::move(out));
}

SampleSubset SampleSubset::intersect(const SampleSubset& other) const {
  require_same_universe(*this, other);
  std::vector<std::size_t> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
  return SampleSubset(universe_, std::move(out));
}

SampleSubset SampleSubset::minus(const SampleSubset& other) const {
  require_same_universe(*this, other);
  std::vector<std::size_t> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                      std::back_inserter(out));
  return SampleSubset(universe_, std::move(out));
}

SampleSubset SampleSubset::complement() const { return full(universe_).minus(*this); }

SampleSubset cylinder_set(const SampleSpace& space, const PartialAssignment& fixed) {
  std::vector<int> want(static_cast<std::size_t>(space.variables()), -1);
  for (auto [variable, symbol] : fixed) {
    if (variable < 0 || variable >= space.variables())
      throw InvalidAssignmentError("variable " + std::to_string(variable) + " does not exist");
    if (symbol < 0 || symbol >= space.arity(variable))
      throw InvalidAssignmentError("symbol " + std::to_string(symbol) + " outside alphabet of variable " +
                                   std::to_string(variable));
    auto& slot = want[static_cast<std::size_t>(variable)];
    if (slot != -1 && slot != symbol) throw InvalidAssignmentError("conflicting assignment for one variable");
    slot = symbol;
  }
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < space.size(); ++x) {
    bool match = true;
    for (int v = 0; v < space.variables() && match; ++v) {
      int w = want[static_cast<std::size_t>(v)];
      match = w < 0 || space.symbol(x, v) == w;
    }
    if (match) members.push_back(x);
  }
  return SampleSubset(space.size(), std::move(members));
}

namespace {
void require_binary(const SampleSpace& space, const char* what) {
  if (!space.is_binary()) throw UnsupportedSpaceError(std::string(what) + " needs a binary sample space");
}

// For binary spaces the index bits are exactly the configuration (variable 0 = top bit).
}  // namespace

ParityPair parity_sets(const SampleSpace& space) {
  require_binary(space, "parity_sets");
  std::vector<std::size_t> even, odd;
  for (std::size_t x = 0; x < space.size(); ++x) (std::popcount(x) % 2 == 0 ? even : odd).push_back(x);
  return {SampleSubset(space.size(), std::move(even)), SampleSubset(space.size(), std::move(odd))};
}

SampleSubset xor_translate(const SampleSpace& space, std::size_t x, const SampleSubset& subset) {
  require_binary(space, "xor_translate");
  if (x >= space.size()) throw DomainError("translation vector out of range");
  if (subset.universe() != space.size()) throw ShapeError("subset does not belong to this space");
  std::vector<std::size_t> out;
  out.reserve(subset.size());
  for (std::size_t y : subset.members()) out.push_back(x ^ y);
  return SampleSubset(space.size(), std::move(out));
}

SampleSubset permute_coordinates(const SampleSpace& space, std::span<const int> perm, const SampleSubset& subset) {
  if (perm.size() != static_cast<std::size_t>(space.variables())) throw ShapeError("permutation length differs from N");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= space.variables() || seen[static_cast<std::size_t>(p)]) throw DomainError("not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (space.arity(perm[i]) != space.arity(static_cast<int>(i)))
      throw UnsupportedSpaceError("permutation mixes alphabets of different sizes");
  std::vector<std::size_t> out;
  out.reserve(subset.size());
  for (std::size_t y : subset.members()) {
    Configuration c = space.configuration(y);
    Configuration img(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) img[i] = c[static_cast<std::size_t>(perm[i])];
    out.push_back(space.index_of(img));
  }
  return SampleSubset(space.size(), std::move(out));
}

int hamming_distance(const SampleSpace& space, std::size_t a, std::size_t b) {
  int d = 0;
  for (int v = 0; v < space.variables(); ++v) d += space.symbol(a, v) != space.symbol(b, v);
  return d;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  if (r > std::numeric_limits<std::uint64_t>::max()) throw DomainError("binomial coefficient overflows 64 bits");
  return r.convert_to<std::uint64_t>();
}

std::uint64_t hamming_ball_size(int n, int radius) {
  if (n < 0 || radius < 0 || radius > n) throw DomainError("hamming_ball_size needs 0 <= R <= N");
  std::uint64_t total = 0;
  for (int i = 0; i <= radius; ++i) {
    std::uint64_t term = binomial(n, i);
    if (total > std::numeric_limits<std::uint64_t>::max() - term) throw DomainError("ball size overflows 64 bits");
    total += term;
  }
  return total;
}

}  // namespace ssetkit
