#include "ssetkit/lp.hpp"

#include <limits>
#include <optional>

#include "ssetkit/errors.hpp"

namespace ssetkit {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau. Columns: [structural | artificial | rhs]. The objective row
// holds z_j - c_j, so a negative entry marks an improving column.
class Tableau {
 public:
  Tableau(const RationalMatrix& a, std::span<const Rational> b)
      : m_(a.rows()), n_(a.cols()), width_(a.cols() + a.rows() + 1), cells_(m_ * width_), obj_(width_),
        basis_(m_), sign_(m_, 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      sign_[i] = b[i] < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j)
        if (a(i, j) != 0) at(i, j) = sign_[i] < 0 ? Rational(-a(i, j)) : a(i, j);
      at(i, n_ + i) = 1;
      at(i, rhs()) = sign_[i] < 0 ? Rational(-b[i]) : b[i];
      basis_[i] = n_ + i;
    }
  }

  // Phase 1: maximize -(sum of artificials).
  bool phase_one() {
    for (std::size_t j = 0; j < width_; ++j) obj_[j] = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) obj_[j] -= at(i, j);
      obj_[rhs()] -= at(i, rhs());
    }
    run(/*allow_artificial=*/false);
    if (obj_[rhs()] != 0) return false;
    // Drive zero-level artificials out of the basis where a structural pivot exists.
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (at(i, j) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
    return true;
  }

  bool phase_two(std::span<const Rational> c) {
    for (std::size_t j = 0; j < width_; ++j) obj_[j] = 0;
    for (std::size_t j = 0; j < n_; ++j) obj_[j] = -c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      std::size_t bj = basis_[i];
      if (bj >= n_ || c[bj] == 0) continue;
      const Rational& cb = c[bj];
      for (std::size_t j = 0; j < width_; ++j)
        if (at(i, j) != 0) obj_[j] += cb * at(i, j);
    }
    return run(false);
  }

  LpSolution solution(LpStatus status) const {
    LpSolution s;
    s.status = status;
    s.pivots = pivots_;
    if (status != LpStatus::optimal) return s;
    s.objective = obj_[rhs()];
    s.primal.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) s.primal[basis_[i]] = at(i, rhs());
    s.dual.assign(m_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) s.dual[i] = sign_[i] < 0 ? Rational(-obj_[n_ + i]) : obj_[n_ + i];
    return s;
  }

  std::size_t pivots() const { return pivots_; }

 private:
  Rational& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return cells_[i * width_ + j]; }
  std::size_t rhs() const { return width_ - 1; }

  // Returns false when unbounded.
  bool run(bool allow_artificial) {
    const std::size_t limit = allow_artificial ? n_ + m_ : n_;
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < limit; ++j) {
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;

      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (at(i, enter) <= 0) continue;
        Rational ratio = at(i, rhs()) / at(i, enter);
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    Rational inv = 1 / at(r, c);
    nonzero_.clear();
    for (std::size_t j = 0; j < width_; ++j) {
      if (at(r, j) == 0) continue;
      at(r, j) *= inv;
      nonzero_.push_back(j);
    }
    auto eliminate = [&](Rational* row) {
      if (row[c] == 0) return;
      Rational f = row[c];
      for (std::size_t j : nonzero_) row[j] -= f * at(r, j);
    };
    for (std::size_t i = 0; i < m_; ++i)
      if (i != r) eliminate(&cells_[i * width_]);
    eliminate(obj_.data());
    basis_[r] = c;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<Rational> cells_;
  std::vector<Rational> obj_;
  std::vector<std::size_t> basis_;
  std::vector<int> sign_;
  std::vector<std::size_t> nonzero_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpSolution maximize(const RationalMatrix& a, std::span<const Rational> b, std::span<const Rational> c) {
  if (b.size() != a.rows()) throw ShapeError("lp: rhs length differs from row count");
  if (c.size() != a.cols()) throw ShapeError("lp: objective length differs from column count");
  Tableau t(a, b);
  if (!t.phase_one()) return t.solution(LpStatus::infeasible);
  if (!t.phase_two(c)) return t.solution(LpStatus::unbounded);
  return t.solution(LpStatus::optimal);
}

}  // namespace ssetkit
