#include "ssetkit/face_oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "ssetkit/coding_bounds.hpp"
#include "ssetkit/errors.hpp"
#include "ssetkit/lp.hpp"

namespace ssetkit {

namespace {

std::vector<bool> membership(const SampleSubset& y, std::size_t universe) {
  if (y.universe() != universe) throw ShapeError("subset does not belong to the family's sample space");
  std::vector<bool> in(universe, false);
  for (std::size_t m : y.members()) in[m] = true;
  return in;
}

std::vector<std::size_t> mask_members(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

std::uint64_t full_mask(std::size_t universe) {
  return universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
}

void require_nonempty(const SampleSubset& y) {
  if (y.empty()) throw DomainError("facial and S-set oracles are not defined for the empty set");
}

}  // namespace

bool check_certificate(const SufficientStatistics& stats, const FaceCertificate& cert) {
  const auto& a = stats.matrix();
  if (cert.functional.size() != a.rows() || cert.zero_set.universe() != a.cols()) return false;
  std::size_t k = 0;
  for (std::size_t x = 0; x < a.cols(); ++x) {
    Rational v = 0;
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (cert.functional[r] != 0) v += cert.functional[r] * a(r, x);
    if (cert.zero_set.contains(x)) {
      if (v != 0) return false;
    } else {
      if (v < 1) return false;
      if (k >= cert.slack.size() || cert.slack[k] != v) return false;
      ++k;
    }
  }
  return k == cert.slack.size();
}

SampleSubset KernelVector::positive_support() const {
  std::vector<std::size_t> m;
  for (std::size_t x = 0; x < values.size(); ++x)
    if (values[x] > 0) m.push_back(x);
  return SampleSubset(values.size(), std::move(m));
}

SampleSubset KernelVector::negative_support() const {
  std::vector<std::size_t> m;
  for (std::size_t x = 0; x < values.size(); ++x)
    if (values[x] < 0) m.push_back(x);
  return SampleSubset(values.size(), std::move(m));
}

SampleSubset KernelVector::support() const { return positive_support().unite(negative_support()); }

FaceOracle::FaceOracle(SufficientStatistics stats) : stats_(std::move(stats)) {
  basis_rows_ = independent_rows(stats_.matrix());
  reduced_ = stats_.matrix().select_rows(basis_rows_);
}

FaceOracle::Probe FaceOracle::probe(const std::vector<bool>& in_y) const {
  const std::size_t n = reduced_.cols();
  RationalVector b(reduced_.rows());
  RationalVector c(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (in_y[x]) {
      for (std::size_t r = 0; r < reduced_.rows(); ++r) b[r] += reduced_(r, x);
    } else {
      c[x] = 1;
    }
  }
  LpSolution s = maximize(reduced_, b, c);
  if (s.status != LpStatus::optimal) throw std::logic_error("facial LP is always feasible and bounded");
  return {s.objective == 0, std::move(s.primal), std::move(s.dual)};
}

FacialVerdict FaceOracle::facial(const SampleSubset& y) const {
  require_nonempty(y);
  const std::size_t n = universe();
  std::vector<bool> in = membership(y, n);
  FacialVerdict verdict;
  if (y.size() == n) {
    verdict.facial = true;
    verdict.certificate = FaceCertificate{RationalVector(stats_.row_count()), y, {}};
    return verdict;
  }
  Probe p = probe(in);
  verdict.facial = p.facial;
  if (p.facial) {
    FaceCertificate cert;
    cert.functional.assign(stats_.row_count(), Rational(0));
    for (std::size_t i = 0; i < basis_rows_.size(); ++i) cert.functional[basis_rows_[i]] = p.dual[i];
    cert.zero_set = y;
    for (std::size_t x = 0; x < n; ++x) {
      if (in[x]) continue;
      Rational v = 0;
      for (std::size_t r = 0; r < reduced_.rows(); ++r) v += p.dual[r] * reduced_(r, x);
      cert.slack.push_back(std::move(v));
    }
    if (!check_certificate(stats_, cert)) throw std::logic_error("LP dual failed to certify a facial set");
    verdict.certificate = std::move(cert);
  } else {
    RationalVector probs = std::move(p.primal);
    Rational scale(1, static_cast<long>(y.size()));
    for (auto& v : probs) v *= scale;
    verdict.witness = Distribution(stats_.space(), std::move(probs));
  }
  return verdict;
}

std::size_t FaceOracle::column_rank(const SampleSubset& y) const {
  if (y.universe() != universe()) throw ShapeError("subset does not belong to the family's sample space");
  if (y.empty()) return 0;
  return rank(reduced_.select_columns(y.members()));
}

std::size_t FaceOracle::column_rank(std::uint64_t y) const {
  if (y == 0) return 0;
  auto cols = mask_members(y);
  return rank(reduced_.select_columns(cols));
}

SSetVerdict FaceOracle::sset(const SampleSubset& y) const {
  require_nonempty(y);
  SSetVerdict verdict;
  RationalMatrix cols = reduced_.select_columns(y.members());
  auto kernel = nullspace(cols);
  verdict.column_rank = y.size() - kernel.size();
  if (!kernel.empty()) {
    KernelVector dep;
    dep.values.assign(universe(), Rational(0));
    for (std::size_t i = 0; i < y.size(); ++i) dep.values[y.members()[i]] = kernel.front()[i];
    verdict.dependency = std::move(dep);
    return verdict;
  }
  FacialVerdict f = facial(y);
  verdict.facial = f.facial;
  verdict.sset = f.facial;
  verdict.certificate = std::move(f.certificate);
  verdict.witness = std::move(f.witness);
  return verdict;
}

std::uint64_t FaceOracle::closure_probe(std::uint64_t y) const {
  const std::size_t n = universe();
  if (n > 64) throw CapacityError("bitmask probes need |X| <= 64");
  if (y == 0) throw DomainError("facial oracle is not defined for the empty set");
  if (y == full_mask(n)) return y;
  std::vector<bool> in(n, false);
  for (std::size_t m : mask_members(y)) in[m] = true;
  Probe p = probe(in);
  if (p.facial) return y;
  std::uint64_t out = y;
  for (std::size_t x = 0; x < n; ++x)
    if (p.primal[x] != 0) out |= std::uint64_t{1} << x;
  return out;
}

std::vector<KernelVector> kernel_basis(const SufficientStatistics& stats) {
  std::vector<KernelVector> out;
  for (auto& v : nullspace(stats.matrix())) out.push_back(KernelVector{std::move(v)});
  return out;
}

FacialVerdict is_facial(const SufficientStatistics& stats, const SampleSubset& y) { return FaceOracle(stats).facial(y); }

SSetVerdict is_sset(const SufficientStatistics& stats, const SampleSubset& y) { return FaceOracle(stats).sset(y); }

std::size_t face_dimension(const SufficientStatistics& stats, const SampleSubset& y) {
  FaceOracle oracle(stats);
  if (!oracle.facial(y).facial) throw PreconditionError("face_dimension needs a facial set");
  return oracle.column_rank(y) - 1;
}

CircuitSet::CircuitSet(const SufficientStatistics& stats, std::size_t guard) {
  const std::size_t n = stats.space().size();
  if (n > guard || n > 64) throw CapacityError("circuit enumeration is guarded to |X| <= " + std::to_string(guard));
  RationalMatrix reduced = stats.matrix().select_rows(independent_rows(stats.matrix()));
  const std::size_t r = reduced.rows();
  if (r >= n) return;  // columns independent: ker A = 0

  std::set<SignPattern> found;
  const std::size_t k = r + 1;
  // Gosper's hack over all k-subsets of the columns.
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = n == 64 ? 0 : (std::uint64_t{1} << n);
  while (s < limit || (n == 64 && s != 0)) {
    auto cols = mask_members(s);
    auto kernel = nullspace(reduced.select_columns(cols));
    if (kernel.size() == 1) {
      SignPattern p{0, 0};
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (kernel[0][i] > 0) p.positive |= std::uint64_t{1} << cols[i];
        if (kernel[0][i] < 0) p.negative |= std::uint64_t{1} << cols[i];
      }
      // Normalise the global sign: the lowest support index is positive.
      std::uint64_t supp = p.positive | p.negative;
      if ((p.negative & (supp & (~supp + 1))) != 0) std::swap(p.positive, p.negative);
      found.insert(p);
    }
    std::uint64_t c = s & (~s + 1);
    std::uint64_t rr = s + c;
    if (rr == 0) break;
    s = (((rr ^ s) >> 2) / c) | rr;
  }
  circuits_.assign(found.begin(), found.end());
}

bool CircuitSet::admits_sset(std::uint64_t y) const {
  for (const auto& c : circuits_)
    if ((c.positive & ~y) == 0 || (c.negative & ~y) == 0) return false;
  return true;
}

bool sset_kernel_crosscheck(const SufficientStatistics& stats, const SampleSubset& y, std::size_t guard) {
  if (y.empty()) throw DomainError("S-set cross-check is not defined for the empty set");
  CircuitSet circuits(stats, guard);
  return circuits.admits_sset(y.mask());
}

bool FaceLattice::is_facial(std::uint64_t y) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), y,
                             [](const FaceRecord& f, std::uint64_t m) { return f.members < m; });
  return it != faces.end() && it->members == y;
}

std::vector<FaceRecord> FaceLattice::facets() const {
  const std::uint64_t all = full_mask(universe);
  std::vector<FaceRecord> proper;
  for (const auto& f : faces)
    if (f.members != all) proper.push_back(f);
  std::stable_sort(proper.begin(), proper.end(), [](const FaceRecord& a, const FaceRecord& b) {
    return std::popcount(a.members) > std::popcount(b.members);
  });
  std::vector<FaceRecord> maximal;
  for (const auto& f : proper) {
    bool covered = std::any_of(maximal.begin(), maximal.end(),
                               [&](const FaceRecord& g) { return (f.members & ~g.members) == 0; });
    if (!covered) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end(), [](const FaceRecord& a, const FaceRecord& b) { return a.members < b.members; });
  return maximal;
}

FaceLattice enumerate_facial_sets(const FaceOracle& oracle, std::optional<std::uint64_t> within, std::size_t guard) {
  const std::size_t n = oracle.universe();
  if (n > guard || n > 24) throw CapacityError("facial-set enumeration is guarded to |X| <= " + std::to_string(guard));
  const std::uint64_t all = full_mask(n);
  const std::uint64_t u = within.value_or(all);
  if ((u & ~all) != 0) throw DomainError("restriction mask has bits outside X");

  FaceLattice lattice;
  lattice.universe = n;
  // known[s] is a subset of the facial closure of s, equal to s iff s is facial.
  std::vector<std::uint64_t> known(std::size_t{1} << n, 0);
  for (std::uint64_t s = (0 - u) & u; s != 0; s = (s - u) & u) {
    std::uint64_t bound = s;
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
      std::uint64_t sub = s & ~(rest & (~rest + 1));
      if (sub != 0) bound |= known[sub];
    }
    if (bound != s) {
      known[s] = bound;
      continue;
    }
    known[s] = oracle.closure_probe(s);
    ++lattice.lp_calls;
    if (known[s] == s) {
      std::size_t rk = oracle.column_rank(s);
      lattice.faces.push_back({s, rk - 1, rk == static_cast<std::size_t>(std::popcount(s))});
    }
  }
  return lattice;
}

FaceLattice enumerate_facial_sets(const SufficientStatistics& stats, std::size_t guard) {
  if (stats.space().size() > guard) throw CapacityError("facial-set enumeration is guarded to |X| <= " + std::to_string(guard));
  return enumerate_facial_sets(FaceOracle(stats), std::nullopt, guard);
}

FacetCensus facet_census(const SufficientStatistics& stats, const FaceLattice& lattice) {
  FacetCensus census;
  census.polytope_dimension = stats.rank() - 1;
  census.facial_set_count = lattice.faces.size();
  for (const auto& f : lattice.faces)
    if (std::popcount(f.members) == 1) ++census.vertex_count;
  const bool binary = stats.space().is_binary();
  std::optional<ParityPair> parity;
  if (binary) parity = parity_sets(stats.space());
  for (const auto& f : lattice.facets()) {
    FacetRecord rec{SampleSubset::from_mask(lattice.universe, f.members), f.dimension, f.simplex, std::nullopt, std::nullopt};
    if (parity) {
      rec.even_count = static_cast<std::size_t>(std::popcount(f.members & parity->even.mask()));
      rec.odd_count = static_cast<std::size_t>(std::popcount(f.members & parity->odd.mask()));
    }
    ++census.facets_by_vertex_count[rec.members.size()];
    if (rec.simplex) {
      ++census.simplex_facets;
      if (parity) ++census.simplex_parity_profile[{*rec.even_count, *rec.odd_count}];
    }
    census.facets.push_back(std::move(rec));
  }
  return census;
}

std::vector<std::vector<int>> cyclic_facets_gale(int v, int d) {
  if (d < 1 || v < d + 1) throw DomainError("cyclic polytope C(v,d) needs d >= 1 and v >= d + 1");
  if (v > 40) throw CapacityError("cyclic facet enumeration is limited to v <= 40");
  if (binomial(v, d) > 50'000'000) throw CapacityError("too many d-subsets to test");
  std::vector<std::vector<int>> facets;
  std::vector<int> pick(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pick[static_cast<std::size_t>(i)] = i;
  std::vector<bool> chosen(static_cast<std::size_t>(v));
  for (;;) {
    std::fill(chosen.begin(), chosen.end(), false);
    for (int p : pick) chosen[static_cast<std::size_t>(p)] = true;
    // Between any two consecutive non-members the number of members must be even.
    bool ok = true;
    int last_gap = -1;
    int run = 0;
    for (int i = 0; i < v && ok; ++i) {
      if (chosen[static_cast<std::size_t>(i)]) {
        ++run;
      } else {
        if (last_gap >= 0 && run % 2 != 0) ok = false;
        last_gap = i;
        run = 0;
      }
    }
    if (ok) facets.push_back(pick);
    int i = d - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == v - d + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return facets;
}

SSetCardinalityBounds sset_cardinality_bounds(int variables, int k) {
  if (k <= 0 || k >= variables) throw DomainError("S-set cardinality bounds need 0 < k < N");
  if (variables > 62) throw DomainError("N too large for 64-bit bounds");
  CodeBoundReport marking = marking_number(variables, k + 1);
  SSetCardinalityBounds out{};
  out.marking_exact = marking.exact.has_value();
  out.marking = marking.exact.value_or(marking.lower);
  const std::uint64_t half = std::uint64_t{1} << (variables - 1);
  out.parity_bound = half - std::min(half, out.marking);
  out.interaction_bound = hamming_ball_size(variables, k);
  const std::uint64_t all = std::uint64_t{1} << variables;
  out.complement_bound = all - std::min(all, 2 * out.marking);
  out.size_bound = std::min(out.interaction_bound, out.complement_bound);
  return out;
}

}  // namespace ssetkit
