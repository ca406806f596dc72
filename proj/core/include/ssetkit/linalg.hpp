#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "ssetkit/rational.hpp"

namespace ssetkit {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  RationalVector column(std::size_t c) const;
  RationalMatrix select_columns(std::span<const std::size_t> columns) const;
  RationalMatrix select_rows(std::span<const std::size_t> rows) const;
  RationalMatrix transpose() const;

  void append_row(std::span<const Rational> values);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Reduced row echelon form and the pivot column of each nonzero row.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RowEchelon row_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of { v : m v = 0 }, one vector per free column.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Indices of a maximal linearly independent set of rows, chosen greedily top-down.
std::vector<std::size_t> independent_rows(const RationalMatrix& m);

/// Some solution of m x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, std::span<const Rational> b);

/// Inverse of a square nonsingular matrix; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

}  // namespace ssetkit
