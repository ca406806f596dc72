#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ssetkit/errors.hpp"
#include "ssetkit/linalg.hpp"
#include "ssetkit/lp.hpp"

using namespace ssetkit;

TEST_CASE("rational text round trip") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(4)) == "4/1");
  CHECK(to_string(Rational(-2, 3)) == "-2/3");
  CHECK(parse_rational("-2/3") == Rational(-2, 3));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(ceil(Rational(3)) == 3);
}

TEST_CASE("rank and nullspace agree with an integer elimination oracle") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 6;
    RationalMatrix m(r, c);
    std::vector<std::vector<long long>> ints(r, std::vector<long long>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = ints[i][j] = entry(rng);
    const std::size_t rk = rank(m);
    CHECK(rk == oracle::integer_rank(ints));
    auto kernel = nullspace(m);
    CHECK(kernel.size() == c - rk);
    for (const auto& v : kernel) {
      auto image = m * std::span<const Rational>(v);
      CHECK(std::all_of(image.begin(), image.end(), [](const Rational& x) { return x == 0; }));
    }
    auto rows = independent_rows(m);
    CHECK(rows.size() == rk);
    CHECK(rank(m.select_rows(rows)) == rk);
  }
}

TEST_CASE("solve and inverse") {
  RationalMatrix a{{2, 1}, {1, 3}};
  RationalVector b{Rational(3), Rational(5)};
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK((*x)[0] == Rational(4, 5));
  CHECK((*x)[1] == Rational(7, 5));
  auto inv = inverse(a);
  REQUIRE(inv);
  RationalMatrix id = a * *inv;
  CHECK(id == RationalMatrix{{1, 0}, {0, 1}});
  CHECK_FALSE(inverse(RationalMatrix{{1, 2}, {2, 4}}));
  CHECK_FALSE(solve(RationalMatrix{{1, 1}, {1, 1}}, RationalVector{Rational(1), Rational(2)}));
}

TEST_CASE("lp: optimum, infeasibility, unboundedness") {
  // max x + 2y  s.t. x + y + s1 = 4, x + 3y + s2 = 6
  RationalMatrix a{{1, 1, 1, 0}, {1, 3, 0, 1}};
  RationalVector b{Rational(4), Rational(6)}, c{Rational(1), Rational(2), Rational(0), Rational(0)};
  LpSolution s = maximize(a, b, c);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.objective == 5);  // x = 3, y = 1
  CHECK(s.primal[0] == 3);
  CHECK(s.primal[1] == 1);
  CHECK(dot(b, s.dual) == s.objective);

  RationalMatrix inf{{1, 1}, {1, 1}};
  CHECK(maximize(inf, RationalVector{Rational(1), Rational(2)}, RationalVector{Rational(0), Rational(0)}).status ==
        LpStatus::infeasible);

  RationalMatrix unb{{1, -1}};
  CHECK(maximize(unb, RationalVector{Rational(1)}, RationalVector{Rational(1), Rational(0)}).status == LpStatus::unbounded);
}

TEST_CASE("lp duality on random feasible programs") {
  // Oracle: enumerate all basic feasible solutions of tiny programs.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-3, 3), pos(0, 3);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 2, n = 4;
    RationalMatrix a(m, n);
    RationalVector x0(n), c(n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    for (std::size_t j = 0; j < n; ++j) {
      x0[j] = pos(rng);
      c[j] = entry(rng);
    }
    RationalVector b = a * std::span<const Rational>(x0);
    LpSolution s = maximize(a, b, c);
    REQUIRE(s.status != LpStatus::infeasible);

    // Best vertex: every pair of columns with an invertible basis.
    std::optional<Rational> best;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        std::vector<std::size_t> cols{p, q};
        auto sol = solve(a.select_columns(cols), b);
        if (!sol || rank(a.select_columns(cols)) < 2) continue;
        if ((*sol)[0] < 0 || (*sol)[1] < 0) continue;
        Rational v = c[p] * (*sol)[0] + c[q] * (*sol)[1];
        if (!best || v > *best) best = v;
      }
    if (s.status == LpStatus::optimal) {
      // Dual feasibility: A^T y >= c.
      for (std::size_t j = 0; j < n; ++j) {
        Rational col = 0;
        for (std::size_t i = 0; i < m; ++i) col += a(i, j) * s.dual[i];
        CHECK(col >= c[j]);
      }
      CHECK(dot(b, s.dual) == s.objective);
      if (best && rank(a) == m) {
        CHECK(*best == s.objective);
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}
