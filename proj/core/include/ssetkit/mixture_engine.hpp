#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ssetkit/covering_engine.hpp"
#include "ssetkit/distribution.hpp"
#include "ssetkit/face_oracle.hpp"

namespace ssetkit {

/**
 * p = sum_i weights[i] * components[i], exact. Each supports[i] is an
 * S-set of `family` containing supp(components[i]), so every component lies
 * in the closure of the family.
 */
struct MixtureDecomposition {
  std::vector<Rational> weights;
  std::vector<Distribution> components;
  std::vector<SampleSubset> supports;
  std::shared_ptr<const SufficientStatistics> family;

  std::size_t size() const { return components.size(); }
};

/// Split p along an S-set cover: each point goes to the first set containing it.
MixtureDecomposition decompose_by_cover(const Distribution& p, const CoverResult& cover);

/// sum_i alpha_i f_i, exact.
Distribution reconstruct(const MixtureDecomposition& mix);

struct ComponentLowerBound {
  /// Lower bound on the number of components of any mixture of closure
  /// members equal to p; empty when supp(p) has no facial packing at all.
  std::optional<std::size_t> value;
  /// The facial packing of supp(p), when the search ran.
  std::optional<CoverResult> packing;
  /// Binary independence model with supp(p) inside one parity class: no two
  /// support points share an edge, so only singletons are facial in supp(p).
  bool parity_certified = false;
};

ComponentLowerBound component_lower_bound(const Distribution& p, const SufficientStatistics& stats,
                                          std::size_t guard = kDefaultEnumerationGuard);

struct SufficientComponents {
  /// min(support_bound, cylinder_bound).
  std::size_t value = 0;
  /// ceil(|supp p| / (2^k - 1)); binary spaces only.
  std::optional<std::size_t> support_bound;
  /// Fewest k-cylinders covering supp(p).
  std::size_t cylinder_bound = 0;
  bool cylinder_optimal = false;
  /// (k+1)-cylinder cover size times (1 + 2/(2^k - 1)); needs k < N.
  std::optional<Rational> refined_bound;
};

SufficientComponents sufficient_components(const Distribution& p, int k);

struct SmoothingResult {
  std::vector<double> probs;
  /// Total variation distance to the target component.
  double tv = 0;
  bool strictly_positive = false;
  /// log p_t - log Z is orthogonal to ker A, checked exactly on the rational natural parameter.
  bool row_span_exact = false;
  /// t <= 0 moves away from the face instead of towards it.
  bool nonpositive_t = false;
  /// Natural parameter theta - t c (exact rationals of the floating-point fit).
  RationalVector natural;
};

/**
 * Strictly positive family member approaching f along the certificate ray:
 * p_t ∝ exp(<theta - t c, A_x>) with p_theta proportional to f on the S-set
 * Y = cert.zero_set. Off Y the mass decays like exp(-t <c, A_x>).
 */
SmoothingResult positive_smoothing(const SufficientStatistics& stats, const Distribution& f,
                                   const FaceCertificate& cert, const Rational& t);

struct PentagonOptions {
  double tol = 1e-8;
  /// Extra random starts after the fixed grid, drawn from this seed.
  std::uint64_t seed = 1;
  std::size_t extra_starts = 200;
};

struct PentagonFit {
  bool success = false;
  /// max_x |alpha f1(x) + (1 - alpha) f2(x) - p(x)|.
  double residual = 0;
  double alpha = 1;
  std::array<double, 5> f1{};
  std::array<double, 5> f2{};
  /// Exact decomposition along pentagon edges (supp(p) not full).
  bool exact = false;
  std::size_t starts = 0;
};

/// Two-component mixture of the pentagon family matching p.
PentagonFit pentagon_two_mixture_solve(const Distribution& p, const PentagonOptions& options = {});

}  // namespace ssetkit
