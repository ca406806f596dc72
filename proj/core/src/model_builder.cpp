#include "ssetkit/model_builder.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ssetkit/errors.hpp"

namespace ssetkit {

namespace {

bool interaction_less(const Interaction& a, const Interaction& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

InteractionComplex::InteractionComplex(int variables, std::vector<Interaction> sets) : variables_(variables) {
  if (variables < 1) throw DomainError("interaction complex needs N >= 1");
  std::set<Interaction, decltype(&interaction_less)> unique(&interaction_less);
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw DomainError("interaction repeats a variable");
    for (int v : s)
      if (v < 0 || v >= variables) throw DomainError("interaction names variable outside [N]");
    unique.insert(s);
  }
  unique.insert(Interaction{});
  sets_.assign(unique.begin(), unique.end());
}

InteractionComplex InteractionComplex::up_to(int variables, int k) {
  if (k < 0 || k > variables) throw DomainError("interaction order k must satisfy 0 <= k <= N");
  std::vector<Interaction> sets;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << variables); ++m) {
    if (std::popcount(m) > k) continue;
    Interaction s;
    for (int v = 0; v < variables; ++v)
      if ((m >> v) & 1u) s.push_back(v);
    sets.push_back(std::move(s));
  }
  return InteractionComplex(variables, std::move(sets));
}

bool InteractionComplex::contains(const Interaction& set) const {
  Interaction s = set;
  std::sort(s.begin(), s.end());
  return std::binary_search(sets_.begin(), sets_.end(), s, &interaction_less);
}

bool InteractionComplex::is_hierarchical() const {
  for (const auto& s : sets_) {
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Interaction sub;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) sub.push_back(s[i]);
      if (!contains(sub)) return false;
    }
  }
  return true;
}

bool InteractionComplex::covers_all_variables() const {
  std::vector<bool> seen(static_cast<std::size_t>(variables_), false);
  for (const auto& s : sets_)
    for (int v : s) seen[static_cast<std::size_t>(v)] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string interaction_label(const Interaction& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(set[i] + 1);
  }
  return out + "}";
}

SufficientStatistics::SufficientStatistics(SampleSpace space, RationalMatrix rows, std::vector<std::string> labels)
    : space_(std::move(space)), rows_(std::move(rows)), labels_(std::move(labels)) {
  if (rows_.cols() != space_.size()) throw ShapeError("statistics matrix needs one column per configuration");
  if (labels_.size() != rows_.rows()) throw ShapeError("one label per row required");
  if (rows_.rows() == 0) throw ShapeError("statistics need at least the all-ones row");
  for (std::size_t x = 0; x < rows_.cols(); ++x)
    if (rows_(0, x) != 1) throw DomainError("first row of the sufficient statistics must be all ones");
  rank_ = ssetkit::rank(rows_);
}

InteractionComplex interaction_complex_k(int variables, int k) { return InteractionComplex::up_to(variables, k); }

SufficientStatistics character_matrix(int variables, const InteractionComplex& delta) {
  if (delta.variables() != variables) throw ShapeError("interaction complex built for a different N");
  SampleSpace space = SampleSpace::binary(variables);
  RationalMatrix a(delta.size(), space.size());
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < delta.size(); ++r) {
    const Interaction& lambda = delta.sets()[r];
    for (std::size_t x = 0; x < space.size(); ++x) {
      int ones = 0;
      for (int v : lambda) ones += space.symbol(x, v);
      a(r, x) = ones % 2 ? -1 : 1;
    }
    labels.push_back(interaction_label(lambda));
  }
  return SufficientStatistics(std::move(space), std::move(a), std::move(labels));
}

SufficientStatistics qary_statistics(const SampleSpace& space, const InteractionComplex& delta) {
  if (delta.variables() != space.variables()) throw ShapeError("interaction complex built for a different N");
  std::vector<RationalVector> rows;
  std::vector<std::string> labels;
  rows.emplace_back(space.size(), Rational(1));
  labels.emplace_back("{}");
  for (const Interaction& lambda : delta.sets()) {
    if (lambda.empty()) continue;
    std::size_t joint = 1;
    for (int v : lambda) joint *= static_cast<std::size_t>(space.arity(v));
    for (std::size_t a = 0; a < joint; ++a) {
      // Decode the joint symbol with the first variable of λ most significant.
      Configuration symbols(lambda.size());
      std::size_t rest = a;
      for (std::size_t i = lambda.size(); i-- > 0;) {
        auto q = static_cast<std::size_t>(space.arity(lambda[i]));
        symbols[i] = static_cast<int>(rest % q);
        rest /= q;
      }
      RationalVector row(space.size());
      for (std::size_t x = 0; x < space.size(); ++x) {
        bool match = true;
        for (std::size_t i = 0; i < lambda.size() && match; ++i) match = space.symbol(x, lambda[i]) == symbols[i];
        if (match) row[x] = 1;
      }
      std::string label = interaction_label(lambda) + "=";
      for (int s : symbols) label += static_cast<char>(s < 10 ? '0' + s : 'a' + s - 10);
      rows.push_back(std::move(row));
      labels.push_back(std::move(label));
    }
  }
  return SufficientStatistics(space, RationalMatrix::from_rows(rows, space.size()), std::move(labels));
}

SufficientStatistics ngon_statistics(int n) {
  if (n < 3) throw DomainError("an n-gon family needs n >= 3");
  SampleSpace space(std::vector<int>{n});
  RationalMatrix a(3, static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto x = static_cast<std::size_t>(i);
    a(0, x) = 1;
    a(1, x) = i;
    a(2, x) = i * i;
  }
  return SufficientStatistics(std::move(space), std::move(a), {"1", "t", "t^2"});
}

RationalVector moment_map(const SufficientStatistics& stats, const Distribution& p) {
  if (!(p.space() == stats.space())) throw ShapeError("distribution lives on a different sample space");
  return stats.matrix() * std::span<const Rational>(p.probs());
}

}  // namespace ssetkit
