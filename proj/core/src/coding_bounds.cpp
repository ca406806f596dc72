#include "ssetkit/coding_bounds.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "ssetkit/errors.hpp"
#include "ssetkit/set_cover.hpp"

namespace ssetkit {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) throw DomainError("q^N overflows 64 bits");
    r *= base;
  }
  return r;
}

void check_code_args(int q, int n, int d) {
  if (q < 2) throw DomainError("alphabet size q must be at least 2");
  if (n < 1) throw DomainError("code length N must be at least 1");
  if (d < 1 || d > n) throw DomainError("minimum distance d must satisfy 1 <= d <= N");
}

}  // namespace

bool is_prime(int q) {
  if (q < 2) return false;
  for (int f = 2; f * f <= q; ++f)
    if (q % f == 0) return false;
  return true;
}

std::uint64_t gv_bound(int q, int n, int d) {
  check_code_args(q, n, d);
  std::uint64_t volume = 0;
  for (int j = 0; j < d; ++j) volume += binomial(n, j) * checked_pow(static_cast<std::uint64_t>(q - 1), j);
  std::uint64_t total = checked_pow(static_cast<std::uint64_t>(q), n);
  return (total + volume - 1) / volume;
}

std::uint64_t singleton_bound(int q, int n, int d) {
  check_code_args(q, n, d);
  return checked_pow(static_cast<std::uint64_t>(q), n - d + 1);
}

int minimum_distance(const SampleSpace& space, const std::vector<std::size_t>& code) {
  int best = space.variables() + 1;
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j) best = std::min(best, hamming_distance(space, code[i], code[j]));
  return best;
}

int covering_radius(int n, const std::vector<std::size_t>& code) {
  if (code.empty()) throw DomainError("covering radius of an empty code");
  int worst = 0;
  for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
    int nearest = n + 1;
    for (std::size_t c : code) nearest = std::min(nearest, std::popcount(x ^ c));
    worst = std::max(worst, nearest);
  }
  return worst;
}

CodeBoundReport parity_code(int q, int n) {
  if (n < 2) throw DomainError("a distance-2 code needs length N >= 2");
  CodeBoundReport report;
  report.q = q;
  report.n = n;
  report.distance = 2;
  report.lower = gv_bound(q, n, 2);
  report.upper = singleton_bound(q, n, 2);
  if (!is_prime(q)) {
    report.note = "no constructive witness for composite q";
    return report;
  }
  SampleSpace space = SampleSpace::uniform(q, n);
  std::vector<std::size_t> code;
  for (std::size_t x = 0; x < space.size(); ++x) {
    int sum = 0;
    for (int v = 0; v < n; ++v) sum += space.symbol(x, v);
    if (sum % q == 0) code.push_back(x);
  }
  if (minimum_distance(space, code) < 2) throw std::logic_error("parity code failed its distance check");
  report.lower = std::max<std::uint64_t>(report.lower, code.size());
  report.exact = code.size();
  report.witness = std::move(code);
  return report;
}

CodeBoundReport marking_number(int n, int radius, std::size_t node_limit) {
  if (n < 1 || n > 62) throw DomainError("marking_number needs 1 <= N <= 62");
  if (radius < 1 || radius > n) throw DomainError("marking_number needs 1 <= R <= N");
  CodeBoundReport report;
  report.n = n;
  report.radius = radius;
  const std::uint64_t points = std::uint64_t{1} << n;
  const std::uint64_t ball = hamming_ball_size(n, radius);
  report.lower = (points + ball - 1) / ball;

  if (radius == n) {
    report.lower = report.upper = 1;
    report.exact = 1;
    report.witness = std::vector<std::size_t>{0};
    return report;
  }
  if (n <= 2 * radius + 1) {
    // A word and its complement are within R of everything when N <= 2R+1; one ball misses the complement.
    report.lower = report.upper = 2;
    report.exact = 2;
    report.witness = std::vector<std::size_t>{0, static_cast<std::size_t>(points - 1)};
    return report;
  }
  if (n > 8) {
    std::vector<std::size_t> code;
    // Greedy upper bound over all centres.
    std::vector<bool> covered(points, false);
    std::uint64_t left = points;
    while (left > 0) {
      std::size_t best = 0, gain = 0;
      for (std::size_t c = 0; c < points; ++c) {
        std::size_t g = 0;
        for (std::size_t x = 0; x < points; ++x)
          if (!covered[x] && std::popcount(x ^ c) <= radius) ++g;
        if (g > gain) {
          gain = g;
          best = c;
        }
      }
      code.push_back(best);
      for (std::size_t x = 0; x < points; ++x)
        if (!covered[x] && std::popcount(x ^ best) <= radius) {
          covered[x] = true;
          --left;
        }
    }
    report.upper = code.size();
    report.witness = std::move(code);
    report.note = "exact search limited to N <= 8";
    return report;
  }

  SetCoverProblem problem;
  problem.universe = points;
  problem.target = ElementSet(points);
  problem.target.set();
  for (std::size_t c = 0; c < points; ++c) {
    ElementSet b(points);
    for (std::size_t x = 0; x < points; ++x)
      if (std::popcount(x ^ c) <= radius) b.set(x);
    problem.candidates.push_back(std::move(b));
  }
  SetCoverOptions options;
  options.node_limit = node_limit;
  options.forced = 0;  // the cube is vertex-transitive: some optimal code contains 0
  SetCoverSolution s = solve_set_cover(problem, options);
  report.upper = s.chosen.size();
  report.witness = s.chosen;
  if (s.optimal) {
    report.exact = s.chosen.size();
    report.lower = s.chosen.size();
  } else {
    report.note = "search budget exhausted before optimality was proven";
  }
  return report;
}

}  // namespace ssetkit
