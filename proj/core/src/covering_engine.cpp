#include "ssetkit/covering_engine.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ssetkit/errors.hpp"

namespace ssetkit {
namespace {

ElementSet to_bits(std::size_t universe, const SampleSubset& s) {
  ElementSet b(universe);
  for (std::size_t x : s.members()) b.set(x);
  return b;
}

ElementSet to_bits(std::size_t universe, std::uint64_t mask) {
  ElementSet b(universe);
  for (; mask != 0; mask &= mask - 1) b.set(static_cast<std::size_t>(std::countr_zero(mask)));
  return b;
}

// Inclusion-maximal masks, ascending.
std::vector<std::uint64_t> maximal_masks(std::vector<std::uint64_t> sets) {
  std::stable_sort(sets.begin(), sets.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) > std::popcount(b); });
  std::vector<std::uint64_t> out;
  for (std::uint64_t s : sets)
    if (std::none_of(out.begin(), out.end(), [&](std::uint64_t m) { return (s & ~m) == 0; })) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

// Minimum cover of `target` by `pool`; fills kappa/sets/bounds of `result`.
void solve_cover(CoverResult& result, const std::vector<std::uint64_t>& pool) {
  const std::size_t n = result.target.universe();
  SetCoverProblem problem;
  problem.universe = n;
  problem.target = to_bits(n, result.target);
  for (std::uint64_t m : pool) problem.candidates.push_back(to_bits(n, m));
  SetCoverSolution s = solve_set_cover(problem);
  if (!s.feasible) {
    // Some target point lies in no candidate: kappa = infinity, proven by inspection.
    result.kappa.reset();
    result.optimal = true;
    result.lower_bound = {0, BoundSource::exhausted_search};
    return;
  }
  for (std::size_t i : s.chosen) result.sets.push_back(SampleSubset::from_mask(n, pool[i]));
  result.kappa = s.chosen.size();
  result.optimal = s.optimal;
  result.lower_bound = {s.lower_bound, s.bound_source};
}

std::shared_ptr<const SufficientStatistics> interaction_family(const SampleSpace& space, int k) {
  InteractionComplex delta = InteractionComplex::up_to(space.variables(), k);
  if (space.is_binary()) return std::make_shared<const SufficientStatistics>(character_matrix(space.variables(), delta));
  return std::make_shared<const SufficientStatistics>(qary_statistics(space, delta));
}

// Constructions re-verify their sets on spaces small enough for the LP oracle.
constexpr std::size_t kConstructionCheckLimit = 1024;

void check_construction(const CoverResult& cover, const char* what) {
  if (cover.target.universe() > kConstructionCheckLimit) return;
  CoverCheck c = verify_cover(*cover.family, cover);
  if (!c.ok) throw std::logic_error(std::string(what) + " produced an invalid cover: " + c.failures.front());
}

}  // namespace

const char* to_string(CoverMode mode) {
  return mode == CoverMode::sset_cover ? "sset-cover" : "facial-packing";
}

std::vector<std::uint64_t> maximal_ssets(const FaceLattice& lattice) {
  std::vector<std::uint64_t> simplices;
  for (const auto& f : lattice.faces)
    if (f.simplex) simplices.push_back(f.members);
  return maximal_masks(std::move(simplices));
}

CoverResult min_sset_cover(const SufficientStatistics& stats, const SampleSubset& target, std::size_t guard) {
  const std::size_t n = stats.space().size();
  if (target.universe() != n) throw ShapeError("target subset lives on a different sample space");
  if (n > guard) throw CapacityError("exact S-set cover is guarded to |X| <= " + std::to_string(guard));
  CoverResult result;
  result.target = target;
  result.mode = CoverMode::sset_cover;
  result.family = std::make_shared<const SufficientStatistics>(stats);
  FaceLattice lattice = enumerate_facial_sets(FaceOracle(stats), std::nullopt, guard);
  solve_cover(result, maximal_ssets(lattice));
  return result;
}

CoverResult min_facial_packing(const std::shared_ptr<const SufficientStatistics>& stats, const FaceLattice& lattice,
                               const SampleSubset& target) {
  if (target.universe() != lattice.universe) throw ShapeError("target subset lives on a different sample space");
  CoverResult result;
  result.target = target;
  result.mode = CoverMode::facial_packing;
  result.family = stats;
  if (target.empty()) {
    result.kappa = 0;
    result.optimal = true;
    result.lower_bound = {0, BoundSource::exhausted_search};
    return result;
  }
  const std::uint64_t z = target.mask();
  std::vector<std::uint64_t> inside;
  for (const auto& f : lattice.faces)
    if ((f.members & ~z) == 0) inside.push_back(f.members);
  // Subsets of a packing set need not be facial, but dropping non-maximal
  // candidates never increases the size of a union-equals-Z cover.
  solve_cover(result, maximal_masks(std::move(inside)));
  return result;
}

CoverResult min_facial_packing(const SufficientStatistics& stats, const SampleSubset& target, std::size_t guard) {
  const std::size_t n = stats.space().size();
  if (target.universe() != n) throw ShapeError("target subset lives on a different sample space");
  if (n > guard) throw CapacityError("exact facial packing is guarded to |X| <= " + std::to_string(guard));
  auto family = std::make_shared<const SufficientStatistics>(stats);
  if (target.empty()) return min_facial_packing(family, FaceLattice{n, {}, 0}, target);
  FaceLattice lattice = enumerate_facial_sets(FaceOracle(stats), target.mask(), guard);
  return min_facial_packing(family, lattice, target);
}

KappaCross kappa_cross(const SufficientStatistics& family, const SufficientStatistics& other, std::size_t guard) {
  if (!(family.space() == other.space())) throw ShapeError("kappa_cross needs both families on the same space");
  const std::size_t n = family.space().size();
  if (n > guard) throw CapacityError("kappa_cross is guarded to |X| <= " + std::to_string(guard));
  auto fam = std::make_shared<const SufficientStatistics>(family);
  FaceLattice mine = enumerate_facial_sets(FaceOracle(family), std::nullopt, guard);
  FaceLattice theirs = enumerate_facial_sets(FaceOracle(other), std::nullopt, guard);

  KappaCross out;
  for (const auto& z : theirs.faces) {
    SampleSubset zs = SampleSubset::from_mask(n, z.members);
    std::size_t value;
    if (mine.is_facial(z.members)) {
      value = 1;
    } else {
      CoverResult c = min_facial_packing(fam, mine, zs);
      if (!c.kappa) throw PreconditionError("a facial set of the second family has no facial packing");
      value = *c.kappa;
      out.exact = out.exact && c.optimal;
    }
    if (value > out.value) {
      out.value = value;
      out.argmax = zs;
    }
  }
  return out;
}

std::uint64_t parameter_count_bound(int variables, int j) {
  if (variables < 1 || j < 0 || j > variables) throw DomainError("parameter_count_bound needs 0 <= j <= N");
  std::uint64_t dim = 0;
  for (int i = 1; i <= j; ++i) dim += binomial(variables, i);
  const std::uint64_t per_component = static_cast<std::uint64_t>(variables) + 1;
  return (dim + 1 + per_component - 1) / per_component;
}

CoverResult cylinder_cover(const SampleSpace& space, int k) {
  const int n = space.variables();
  if (k < 1 || k > n) throw DomainError("cylinder_cover needs 0 < k <= N");
  CoverResult result;
  result.target = SampleSubset::full(space.size());
  result.mode = CoverMode::sset_cover;
  result.family = interaction_family(space, k);
  result.partition = true;
  // Enumerate the fixed part (coordinates k..N-1) in mixed radix, last coordinate fastest.
  std::size_t count = 1;
  for (int v = k; v < n; ++v) count *= static_cast<std::size_t>(space.arity(v));
  for (std::size_t j = 0; j < count; ++j) {
    PartialAssignment fixed;
    std::size_t rest = j;
    for (int v = n - 1; v >= k; --v) {
      fixed.emplace_back(v, static_cast<int>(rest % static_cast<std::size_t>(space.arity(v))));
      rest /= static_cast<std::size_t>(space.arity(v));
    }
    std::reverse(fixed.begin(), fixed.end());
    result.sets.push_back(cylinder_set(space, fixed));
  }
  result.kappa = result.sets.size();
  check_construction(result, "cylinder_cover");
  return result;
}

CoverResult product_line_cover(const SampleSpace& space) {
  const int n = space.variables();
  if (n < 1) throw DomainError("product_line_cover needs at least one variable");
  int axis = 0;
  for (int v = 1; v < n; ++v)
    if (space.arity(v) > space.arity(axis)) axis = v;
  CoverResult result;
  result.target = SampleSubset::full(space.size());
  result.mode = CoverMode::sset_cover;
  result.family = interaction_family(space, 1);
  result.partition = true;
  // One line per configuration with symbol 0 on the axis.
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (space.symbol(x, axis) != 0) continue;
    Configuration c = space.configuration(x);
    std::vector<std::size_t> line;
    for (int a = 0; a < space.arity(axis); ++a) {
      c[static_cast<std::size_t>(axis)] = a;
      line.push_back(space.index_of(c));
    }
    std::sort(line.begin(), line.end());
    result.sets.emplace_back(space.size(), std::move(line));
  }
  result.kappa = result.sets.size();
  check_construction(result, "product_line_cover");
  return result;
}

std::uint64_t recursive_cover_size(int variables, int k) {
  if (k < 1 || k >= variables || variables > 62) throw DomainError("recursive cover needs 0 < k < N <= 62");
  // 2^(N-k-1) / (1 - 2^-k) = 2^(N-1) / (2^k - 1)
  const std::uint64_t num = std::uint64_t{1} << (variables - 1);
  const std::uint64_t den = (std::uint64_t{1} << k) - 1;
  return (num + den - 1) / den;
}

CoverResult recursive_binary_cover(int variables, int k) {
  if (k < 1 || k >= variables) throw DomainError("recursive_binary_cover needs 0 < k < N");
  if (variables > 24) throw CapacityError("recursive_binary_cover materialises X; N <= 24");
  const SampleSpace space = SampleSpace::binary(variables);
  const std::size_t n = space.size();
  auto bit = [&](int v) { return std::size_t{1} << (variables - 1 - v); };

  CoverResult result;
  result.target = SampleSubset::full(n);
  result.mode = CoverMode::sset_cover;
  result.family = interaction_family(space, k);
  result.partition = true;

  // All sums of bits over a coordinate list.
  auto span = [&](const std::vector<int>& coords) {
    std::vector<std::size_t> out{0};
    for (int v : coords) {
      const std::size_t sz = out.size();
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] | bit(v));
    }
    return out;
  };

  // Free coordinates shrink by k per round; the fixed ones of the residual are 0.
  std::vector<int> free_coords(static_cast<std::size_t>(variables));
  for (int v = 0; v < variables; ++v) free_coords[static_cast<std::size_t>(v)] = v;
  while (static_cast<int>(free_coords.size()) > k) {
    std::vector<int> cyl(free_coords.begin(), free_coords.begin() + k + 1);
    std::vector<int> rest(free_coords.begin() + k + 1, free_coords.end());
    const int edge_axis = cyl.back();
    for (std::size_t y : span(rest)) {
      // C_y minus the edge where the first k cylinder coordinates are 0.
      std::vector<std::size_t> g;
      for (std::size_t c : span(cyl))
        if ((c & ~bit(edge_axis)) != 0) g.push_back(c | y);
      std::sort(g.begin(), g.end());
      result.sets.emplace_back(n, std::move(g));
    }
    free_coords.erase(free_coords.begin(), free_coords.begin() + k);
  }
  std::vector<std::size_t> last = span(free_coords);
  std::sort(last.begin(), last.end());
  result.sets.emplace_back(n, std::move(last));

  result.kappa = result.sets.size();
  check_construction(result, "recursive_binary_cover");
  return result;
}

CoverCheck verify_cover(const SufficientStatistics& stats, const CoverResult& cover) {
  CoverCheck check;
  auto fail = [&](std::string msg) {
    check.ok = false;
    check.failures.push_back(std::move(msg));
  };
  const std::size_t n = stats.space().size();
  if (cover.target.universe() != n) {
    fail("target lives on a different sample space");
    return check;
  }
  FaceOracle oracle(stats);
  std::vector<bool> seen(n, false);
  bool overlap = false;
  for (std::size_t i = 0; i < cover.sets.size(); ++i) {
    const SampleSubset& s = cover.sets[i];
    const std::string tag = "set " + std::to_string(i);
    if (s.universe() != n) {
      fail(tag + " lives on a different sample space");
      continue;
    }
    if (s.empty()) {
      fail(tag + " is empty");
      continue;
    }
    for (std::size_t x : s.members()) {
      if (seen[x]) overlap = true;
      seen[x] = true;
    }
    if (cover.mode == CoverMode::sset_cover) {
      if (!oracle.sset(s).sset) fail(tag + " is not an S-set");
    } else {
      if (!s.is_subset_of(cover.target)) fail(tag + " is not a subset of the target");
      if (!oracle.facial(s).facial) fail(tag + " is not facial");
    }
  }
  for (std::size_t x : cover.target.members())
    if (!seen[x]) fail("target point " + stats.space().format(x) + " is not covered");
  if (cover.partition) {
    if (overlap) fail("sets of a partition overlap");
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) fail("partition does not exhaust X");
  }
  if (cover.kappa && *cover.kappa != cover.sets.size()) fail("kappa differs from the number of sets");
  if (!cover.kappa && !cover.sets.empty()) fail("infinite kappa reported with a witness");
  if (cover.optimal && cover.kappa && cover.lower_bound.value != *cover.kappa)
    fail("optimal cover whose lower bound differs from kappa");
  return check;
}

}  // namespace ssetkit
