#include "ssetkit/set_cover.hpp"

#include <algorithm>
#include <limits>

#include "ssetkit/errors.hpp"
#include "ssetkit/lp.hpp"

namespace ssetkit {

const char* to_string(BoundSource source) {
  switch (source) {
    case BoundSource::none: return "none";
    case BoundSource::exhausted_search: return "exhausted search";
    case BoundSource::dual_bound: return "dual bound";
    case BoundSource::code_bound: return "code bound";
  }
  return "none";
}

namespace {

class Search {
 public:
  Search(const SetCoverProblem& p, const SetCoverOptions& o) : problem_(p), options_(o) {
    const std::size_t n = p.universe;
    containing_.resize(n);
    for (std::size_t i = 0; i < p.candidates.size(); ++i)
      for (std::size_t e = p.candidates[i].find_first(); e != ElementSet::npos; e = p.candidates[i].find_next(e))
        if (p.target.test(e)) containing_[e].push_back(i);
    neighbourhood_.assign(n, ElementSet(n));
    for (std::size_t e = 0; e < n; ++e)
      for (std::size_t i : containing_[e]) neighbourhood_[e] |= p.candidates[i];
    for (const auto& c : p.candidates) max_size_ = std::max(max_size_, (c & p.target).count());
  }

  bool coverable() const {
    for (std::size_t e = problem_.target.find_first(); e != ElementSet::npos; e = problem_.target.find_next(e))
      if (containing_[e].empty()) return false;
    return true;
  }

  std::vector<std::size_t> greedy(ElementSet uncovered, std::vector<std::size_t> chosen) const {
    while (uncovered.any()) {
      std::size_t best = 0, gain = 0;
      for (std::size_t i = 0; i < problem_.candidates.size(); ++i) {
        std::size_t g = (problem_.candidates[i] & uncovered).count();
        if (g > gain) {
          gain = g;
          best = i;
        }
      }
      chosen.push_back(best);
      uncovered -= problem_.candidates[best];
    }
    return chosen;
  }

  // Lower bound on the number of further sets needed for `uncovered`.
  std::size_t bound(const ElementSet& uncovered) const {
    std::size_t count = uncovered.count();
    if (count == 0) return 0;
    std::size_t by_size = (count + max_size_ - 1) / max_size_;
    // Elements no single candidate covers together need distinct sets.
    ElementSet blocked(problem_.universe);
    std::size_t packing = 0;
    for (std::size_t e = uncovered.find_first(); e != ElementSet::npos; e = uncovered.find_next(e)) {
      if (blocked.test(e)) continue;
      ++packing;
      blocked |= neighbourhood_[e];
    }
    return std::max(by_size, packing);
  }

  void run(ElementSet uncovered, std::vector<std::size_t>& chosen) {
    if (aborted_) return;
    if (++nodes_ > options_.node_limit) {
      aborted_ = true;
      return;
    }
    if (uncovered.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + bound(uncovered) >= best_.size()) return;

    std::size_t pick = ElementSet::npos, fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t e = uncovered.find_first(); e != ElementSet::npos; e = uncovered.find_next(e)) {
      if (containing_[e].size() < fewest) {
        fewest = containing_[e].size();
        pick = e;
      }
    }
    for (std::size_t i : containing_[pick]) {
      chosen.push_back(i);
      run(uncovered - problem_.candidates[i], chosen);
      chosen.pop_back();
      if (aborted_ || best_.size() <= global_lb_) return;
    }
  }

  std::vector<std::size_t> best_;
  std::size_t global_lb_ = 0;
  std::size_t nodes_ = 0;
  bool aborted_ = false;

 private:
  const SetCoverProblem& problem_;
  const SetCoverOptions& options_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<ElementSet> neighbourhood_;
  std::size_t max_size_ = 0;
};

// ceil of the optimal fractional cover value, computed exactly.
std::size_t lp_bound(const SetCoverProblem& p, const ElementSet& uncovered) {
  std::vector<std::size_t> elems;
  for (std::size_t e = uncovered.find_first(); e != ElementSet::npos; e = uncovered.find_next(e)) elems.push_back(e);
  const std::size_t m = p.candidates.size();
  // minimise sum x_S  s.t.  sum_{S ∋ e} x_S - s_e = 1,  x, s >= 0
  RationalMatrix a(elems.size(), m + elems.size());
  for (std::size_t r = 0; r < elems.size(); ++r) {
    for (std::size_t i = 0; i < m; ++i)
      if (p.candidates[i].test(elems[r])) a(r, i) = 1;
    a(r, m + r) = -1;
  }
  RationalVector b(elems.size(), Rational(1));
  RationalVector c(m + elems.size());
  for (std::size_t i = 0; i < m; ++i) c[i] = -1;
  LpSolution s = maximize(a, b, c);
  if (s.status != LpStatus::optimal) return 0;
  Integer v = ceil(Rational(-s.objective));
  return v.convert_to<std::size_t>();
}

}  // namespace

SetCoverSolution solve_set_cover(const SetCoverProblem& problem, const SetCoverOptions& options) {
  if (problem.target.size() != problem.universe) throw ShapeError("set cover target has the wrong universe size");
  for (const auto& c : problem.candidates)
    if (c.size() != problem.universe) throw ShapeError("set cover candidate has the wrong universe size");

  SetCoverSolution out;
  if (problem.target.none()) {
    out.feasible = true;
    out.optimal = true;
    out.bound_source = BoundSource::exhausted_search;
    return out;
  }
  Search search(problem, options);
  if (!search.coverable()) return out;
  out.feasible = true;

  ElementSet uncovered = problem.target;
  std::vector<std::size_t> prefix;
  if (options.forced) {
    if (*options.forced >= problem.candidates.size()) throw DomainError("forced candidate index out of range");
    prefix.push_back(*options.forced);
    uncovered -= problem.candidates[*options.forced];
  }
  search.best_ = search.greedy(uncovered, prefix);

  std::size_t root = prefix.size() + search.bound(uncovered);
  out.bound_source = BoundSource::exhausted_search;
  if (!options.forced && problem.candidates.size() * problem.target.count() <= options.lp_cell_limit) {
    std::size_t lp = lp_bound(problem, uncovered);
    if (lp > root) root = lp;
    if (root >= search.best_.size()) out.bound_source = BoundSource::dual_bound;
  }
  search.global_lb_ = root;

  if (root < search.best_.size()) {
    std::vector<std::size_t> chosen = prefix;
    search.run(uncovered, chosen);
  }
  out.nodes = search.nodes_;
  out.chosen = search.best_;
  std::sort(out.chosen.begin(), out.chosen.end());
  out.optimal = !search.aborted_;
  out.lower_bound = out.optimal ? out.chosen.size() : root;
  // Root bounds (size, element packing, LP) are all values of dual-feasible solutions.
  if (search.aborted_) out.bound_source = BoundSource::dual_bound;
  return out;
}

}  // namespace ssetkit
