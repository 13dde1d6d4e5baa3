#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "jkres/rational.hpp"

namespace jkres {

using QVector = std::vector<Rational>;

/// Dense rectangular matrix of rationals, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix from_rows(std::span<const QVector> rows);
  static QMatrix from_columns(std::span<const QVector> columns);
  static QMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVector row(std::size_t i) const;
  QVector column(std::size_t j) const;

  QVector operator*(const QVector& v) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational dot(const QVector& a, const QVector& b);
bool is_zero(const QVector& v);

std::size_t rank(const QMatrix& m);
std::size_t rank(std::span<const QVector> vectors);

/// Throws DimensionError unless `m` is square.
Rational determinant(const QMatrix& m);

/// One exact solution of m·x = b (free variables set to zero), or nullopt
/// when the system is inconsistent. Throws DimensionError on shape mismatch.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

/// Scales `v` to a primitive integer vector whose first nonzero entry is
/// positive. The zero vector is returned unchanged.
QVector canonical_direction(const QVector& v);

/// Normal of the hyperplane spanned by `vectors` inside Q^dim, canonicalized
/// by canonical_direction. Throws RankError unless the span has dimension
/// exactly dim - 1.
QVector hyperplane_normal(std::span<const QVector> vectors, std::size_t dim);

/// A point xi with <a, xi> > 0 for every a in `forms`, found by exact
/// Fourier-Motzkin elimination, or nullopt if none exists. Throws
/// ValidationError on a zero or ragged input.
std::optional<QVector> strictly_feasible(std::span<const QVector> forms);

}  // namespace jkres
