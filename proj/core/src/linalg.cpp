#include "ssetkit/linalg.hpp"

#include <utility>

#include "ssetkit/errors.hpp"

namespace ssetkit {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::select_columns(std::span<const std::size_t> columns) const {
  RationalMatrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = (*this)(r, columns[j]);
  return out;
}

RationalMatrix RationalMatrix::select_rows(std::span<const std::size_t> rows) const {
  RationalMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto src = row(rows[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw ShapeError("append_row: length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimensions differ");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw ShapeError("matrix-vector product: dimension mismatch");
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(a.row(i), x);
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

RowEchelon row_echelon(RationalMatrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
    Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(lead_row, j) != 0) m(r, j) -= f * m(lead_row, j);
    }
    out.pivot_columns.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return row_echelon(m).pivot_columns.size(); }

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  RowEchelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> independent_rows(const RationalMatrix& m) {
  // Pivot columns of the transpose are exactly the greedy independent rows.
  return row_echelon(m.transpose()).pivot_columns;
}

std::optional<RationalVector> solve(const RationalMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw ShapeError("solve: rhs length mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowEchelon e = row_echelon(std::move(aug));
  RationalVector x(m.cols());
  for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
    std::size_t c = e.pivot_columns[r];
    if (c == m.cols()) return std::nullopt;
    x[c] = e.reduced(r, m.cols());
  }
  return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return RationalMatrix();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = row_echelon(std::move(aug));
  if (e.pivot_columns.size() < n || e.pivot_columns[n - 1] != n - 1) return std::nullopt;
  RationalMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
  return out;
}

}  // namespace ssetkit
