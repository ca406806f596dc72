#include "ssetkit/mixture_engine.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "ssetkit/errors.hpp"
#include "ssetkit/set_cover.hpp"

namespace ssetkit {
namespace {

bool same_row_space(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) return false;
  RationalMatrix both = a;
  for (std::size_t r = 0; r < b.rows(); ++r) both.append_row(b.row(r));
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(both);
}

bool is_binary_independence(const SufficientStatistics& stats) {
  const SampleSpace& space = stats.space();
  if (!space.is_binary()) return false;
  const int n = space.variables();
  return same_row_space(stats.matrix(), character_matrix(n, InteractionComplex::up_to(n, 1)).matrix());
}

bool inside_one_parity_class(const SampleSpace& space, const SampleSubset& s) {
  ParityPair z = parity_sets(space);
  return s.is_subset_of(z.even) || s.is_subset_of(z.odd);
}

// Minimum number of cylinders with `free_count` free coordinates covering `target`.
SetCoverSolution cylinder_set_cover(const SampleSpace& space, const SampleSubset& target, int free_count) {
  const int n = space.variables();
  const std::size_t size = space.size();
  std::vector<ElementSet> candidates;
  // Each free-coordinate choice is a bitmask over variables.
  for (std::uint32_t free = 0; free < (1u << n); ++free) {
    if (std::popcount(free) != free_count) continue;
    std::vector<bool> seen(size, false);
    for (std::size_t x = 0; x < size; ++x) {
      if (seen[x]) continue;
      PartialAssignment fixed;
      for (int v = 0; v < n; ++v)
        if (!(free & (1u << v))) fixed.emplace_back(v, space.symbol(x, v));
      SampleSubset cyl = cylinder_set(space, fixed);
      ElementSet bits(size);
      for (std::size_t y : cyl.members()) {
        seen[y] = true;
        bits.set(y);
      }
      candidates.push_back(std::move(bits));
      if (candidates.size() > 200'000) throw CapacityError("too many cylinder sets for an exact cover");
    }
  }
  SetCoverProblem problem;
  problem.universe = size;
  problem.target = ElementSet(size);
  for (std::size_t x : target.members()) problem.target.set(x);
  problem.candidates = std::move(candidates);
  return solve_set_cover(problem);
}

}  // namespace

MixtureDecomposition decompose_by_cover(const Distribution& p, const CoverResult& cover) {
  if (cover.mode != CoverMode::sset_cover) throw PreconditionError("decomposition needs an S-set cover");
  const std::size_t n = p.size();
  if (cover.target.universe() != n) throw ShapeError("cover and distribution live on different sample spaces");

  std::vector<long> owner(n, -1);
  for (std::size_t i = 0; i < cover.sets.size(); ++i)
    for (std::size_t x : cover.sets[i].members())
      if (owner[x] < 0) owner[x] = static_cast<long>(i);
  const SampleSubset supp = p.support();
  for (std::size_t x : supp.members())
    if (owner[x] < 0) throw CoverageError("support point " + p.space().format(x) + " is not covered");

  MixtureDecomposition mix;
  mix.family = cover.family;
  for (std::size_t i = 0; i < cover.sets.size(); ++i) {
    std::vector<std::size_t> piece;
    Rational alpha = 0;
    for (std::size_t x : cover.sets[i].members()) {
      if (owner[x] != static_cast<long>(i)) continue;
      piece.push_back(x);
      alpha += p[x];
    }
    if (alpha == 0) continue;
    RationalVector probs(n);
    for (std::size_t x : piece) probs[x] = p[x] / alpha;
    mix.weights.push_back(alpha);
    mix.components.emplace_back(p.space(), std::move(probs));
    mix.supports.emplace_back(n, std::move(piece));
  }
  return mix;
}

Distribution reconstruct(const MixtureDecomposition& mix) {
  if (mix.components.empty()) throw PreconditionError("cannot reconstruct an empty mixture");
  if (mix.weights.size() != mix.components.size()) throw ShapeError("weights and components differ in number");
  const SampleSpace& space = mix.components.front().space();
  RationalVector sum(space.size());
  for (std::size_t i = 0; i < mix.components.size(); ++i) {
    if (!(mix.components[i].space() == space)) throw ShapeError("mixture components live on different spaces");
    for (std::size_t x = 0; x < sum.size(); ++x) sum[x] += mix.weights[i] * mix.components[i][x];
  }
  return Distribution(space, std::move(sum));
}

ComponentLowerBound component_lower_bound(const Distribution& p, const SufficientStatistics& stats, std::size_t guard) {
  if (!(p.space() == stats.space())) throw ShapeError("distribution and family live on different sample spaces");
  const SampleSubset supp = p.support();
  ComponentLowerBound out;
  out.parity_certified = is_binary_independence(stats) && inside_one_parity_class(p.space(), supp);

  if (stats.space().size() <= guard) {
    CoverResult packing = min_facial_packing(stats, supp, guard);
    if (packing.kappa) out.value = packing.optimal ? *packing.kappa : packing.lower_bound.value;
    out.packing = std::move(packing);
    if (out.parity_certified && out.value != supp.size())
      throw std::logic_error("facial packing disagrees with the parity certificate");
  } else if (out.parity_certified) {
    out.value = supp.size();
  } else {
    throw CapacityError("facial packing is guarded to |X| <= " + std::to_string(guard));
  }
  return out;
}

SufficientComponents sufficient_components(const Distribution& p, int k) {
  const SampleSpace& space = p.space();
  const int n = space.variables();
  if (k < 1 || k > n) throw DomainError("sufficient_components needs 1 <= k <= N");
  if (n > 20) throw CapacityError("cylinder covers are limited to N <= 20");
  const SampleSubset supp = p.support();

  SufficientComponents out;
  SetCoverSolution cyl = cylinder_set_cover(space, supp, k);
  out.cylinder_bound = cyl.chosen.size();
  out.cylinder_optimal = cyl.optimal;
  out.value = out.cylinder_bound;
  if (space.is_binary() && k < 63) {
    const std::size_t per = (std::size_t{1} << k) - 1;
    out.support_bound = (supp.size() + per - 1) / per;
    out.value = std::min(out.value, *out.support_bound);
  }
  if (k < n && k < 63) {
    SetCoverSolution next = cylinder_set_cover(space, supp, k + 1);
    Rational factor = Rational(1) + Rational(2) / Rational((Integer(1) << k) - 1);
    out.refined_bound = Rational(next.chosen.size()) * factor;
  }
  return out;
}

SmoothingResult positive_smoothing(const SufficientStatistics& stats, const Distribution& f,
                                   const FaceCertificate& cert, const Rational& t) {
  const std::size_t n = stats.space().size();
  if (!(f.space() == stats.space())) throw ShapeError("component and family live on different sample spaces");
  const SampleSubset& y = cert.zero_set;
  if (y.universe() != n) throw ShapeError("certificate lives on a different sample space");
  if (!(f.support() == y)) throw PreconditionError("component must be positive exactly on the certificate's zero set");
  if (!check_certificate(stats, cert)) throw PreconditionError("face certificate does not verify");
  const RationalMatrix& a = stats.matrix();
  const std::size_t d = a.rows();
  if (rank(a.select_columns(y.members())) != y.size()) throw PreconditionError("zero set is not an S-set");

  // theta with <theta, A_y> = log f(y) on Y; exactly solvable since the columns of A_Y are independent.
  Eigen::MatrixXd ay(static_cast<Eigen::Index>(y.size()), static_cast<Eigen::Index>(d));
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(y.size()));
  for (std::size_t i = 0; i < y.size(); ++i) {
    const std::size_t x = y.members()[i];
    for (std::size_t r = 0; r < d; ++r) ay(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(r)) = to_double(a(r, x));
    rhs(static_cast<Eigen::Index>(i)) = std::log(to_double(f[x]));
  }
  auto cod = ay.completeOrthogonalDecomposition();
  Eigen::VectorXd theta = cod.solve(rhs);
  theta += cod.solve(rhs - ay * theta);  // one refinement step

  SmoothingResult out;
  out.nonpositive_t = t <= 0;
  out.natural.resize(d);
  for (std::size_t r = 0; r < d; ++r) out.natural[r] = Rational(theta(static_cast<Eigen::Index>(r))) - t * cert.functional[r];

  // u = A^T eta is in the row span by construction; confirm against a kernel basis exactly.
  RationalVector u(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t r = 0; r < d; ++r) u[x] += out.natural[r] * a(r, x);
  out.row_span_exact = true;
  for (const auto& v : kernel_basis(stats))
    if (dot(v.values, u) != 0) out.row_span_exact = false;

  std::vector<long double> logw(n);
  long double top = -INFINITY;
  for (std::size_t x = 0; x < n; ++x) {
    logw[x] = static_cast<long double>(to_double(u[x]));
    top = std::max(top, logw[x]);
  }
  long double z = 0;
  for (std::size_t x = 0; x < n; ++x) z += std::exp(logw[x] - top);
  out.probs.resize(n);
  long double tv = 0;
  out.strictly_positive = true;
  for (std::size_t x = 0; x < n; ++x) {
    long double px = std::exp(logw[x] - top) / z;
    out.probs[x] = static_cast<double>(px);
    if (!(out.probs[x] > 0)) out.strictly_positive = false;
    tv += std::fabs(px - static_cast<long double>(to_double(f[x])));
  }
  out.tv = static_cast<double>(tv / 2);
  return out;
}

}  // namespace ssetkit
