#include "jkres/linalg.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "jkres/errors.hpp"

namespace jkres {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::from_rows(std::span<const QVector> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged rows in matrix construction");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(std::span<const QVector> columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  QMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("ragged columns in matrix construction");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QVector QMatrix::column(std::size_t j) const {
  QVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot product of vectors with different lengths");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

namespace {

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

struct Elimination {
  std::vector<std::size_t> pivot_columns;
  int swaps = 0;
};

// Row echelon form in place over the first `ncols` columns. Among the
// candidate pivots of a column the entry of smallest bit size wins.
Elimination echelon(QMatrix& m, std::size_t ncols, bool reduce) {
  Elimination info;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < ncols && prow < m.rows(); ++col) {
    std::size_t best = m.rows();
    for (std::size_t i = prow; i < m.rows(); ++i) {
      if (m(i, col) != 0 && (best == m.rows() || bit_size(m(i, col)) < bit_size(m(best, col)))) {
        best = i;
      }
    }
    if (best == m.rows()) continue;
    if (best != prow) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(prow, j));
      ++info.swaps;
    }
    const Rational pivot = m(prow, col);
    if (reduce) {
      for (std::size_t j = col; j < m.cols(); ++j) m(prow, j) /= pivot;
    }
    for (std::size_t i = reduce ? 0 : prow + 1; i < m.rows(); ++i) {
      if (i == prow || m(i, col) == 0) continue;
      const Rational factor = m(i, col) / m(prow, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(prow, j);
    }
    info.pivot_columns.push_back(col);
    ++prow;
  }
  return info;
}

}  // namespace

std::size_t rank(const QMatrix& m) {
  QMatrix work = m;
  return echelon(work, work.cols(), false).pivot_columns.size();
}

std::size_t rank(std::span<const QVector> vectors) {
  if (vectors.empty()) return 0;
  return rank(QMatrix::from_rows(vectors));
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  }
  QMatrix work = m;
  const Elimination info = echelon(work, work.cols(), false);
  if (info.pivot_columns.size() < work.rows()) return 0;
  Rational det = info.swaps % 2 == 0 ? 1 : -1;
  for (std::size_t i = 0; i < work.rows(); ++i) det *= work(i, i);
  return det;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length does not match matrix rows");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const Elimination info = echelon(aug, m.cols(), true);
  for (std::size_t i = info.pivot_columns.size(); i < aug.rows(); ++i) {
    if (aug(i, m.cols()) != 0) return std::nullopt;
  }
  QVector x(m.cols());
  for (std::size_t k = 0; k < info.pivot_columns.size(); ++k) x[info.pivot_columns[k]] = aug(k, m.cols());
  return x;
}

QVector canonical_direction(const QVector& v) {
  if (is_zero(v)) return v;
  Integer den_lcm = 1;
  for (const auto& q : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(v.size());
  Integer g = 0;
  for (const auto& q : v) {
    Integer k = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
    ints.push_back(std::move(k));
  }
  const auto first = std::find_if(ints.begin(), ints.end(), [](const Integer& k) { return k != 0; });
  if (*first < 0) g = -g;
  QVector out;
  out.reserve(v.size());
  for (const auto& k : ints) out.emplace_back(Integer(k / g));
  return out;
}

QVector hyperplane_normal(std::span<const QVector> vectors, std::size_t dim) {
  if (dim == 0) throw DimensionError("hyperplane normal requested in dimension 0");
  for (const auto& v : vectors) {
    if (v.size() != dim) throw DimensionError("vector length differs from the ambient dimension");
  }
  QMatrix work(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = 0; j < dim; ++j) work(i, j) = vectors[i][j];
  }
  const Elimination info = echelon(work, dim, true);
  if (info.pivot_columns.size() != dim - 1) {
    throw RankError("vectors span a subspace of dimension " + std::to_string(info.pivot_columns.size()) +
                    ", expected " + std::to_string(dim - 1));
  }
  std::size_t free_col = 0;
  while (free_col < info.pivot_columns.size() && info.pivot_columns[free_col] == free_col) ++free_col;
  QVector normal(dim);
  normal[free_col] = 1;
  for (std::size_t k = 0; k < info.pivot_columns.size(); ++k) {
    normal[info.pivot_columns[k]] = -work(k, free_col);
  }
  return canonical_direction(normal);
}

namespace {

using System = std::set<QVector>;

// Strict homogeneous inequality rows a with a.x > 0; rows are stored scaled
// to primitive integer vectors so duplicates collapse.
QVector normalize_row(const QVector& row) {
  if (is_zero(row)) return row;
  QVector scaled = canonical_direction(row);
  const auto lead = std::find_if(row.begin(), row.end(), [](const Rational& q) { return q != 0; });
  if (*lead < 0) {
    for (auto& q : scaled) q = -q;
  }
  return scaled;
}

}  // namespace

std::optional<QVector> strictly_feasible(std::span<const QVector> forms) {
  if (forms.empty()) return std::nullopt;
  const std::size_t dim = forms.front().size();
  System initial;
  for (const auto& a : forms) {
    if (a.size() != dim) throw ValidationError("forms have different lengths");
    if (is_zero(a)) throw ValidationError("zero vector in strict feasibility problem");
    initial.insert(normalize_row(a));
  }

  // stages[k] constrains variables 0..k-1 only.
  std::vector<System> stages(dim + 1);
  stages[dim] = std::move(initial);
  for (std::size_t k = dim; k-- > 0;) {
    std::vector<const QVector*> pos, neg;
    System next;
    for (const auto& row : stages[k + 1]) {
      const int s = sign(row[k]);
      if (s > 0) {
        pos.push_back(&row);
      } else if (s < 0) {
        neg.push_back(&row);
      } else {
        next.insert(QVector(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(k)));
      }
    }
    for (const QVector* p : pos) {
      for (const QVector* q : neg) {
        QVector combined(k);
        const Rational wp = -(*q)[k];
        const Rational wq = (*p)[k];
        for (std::size_t j = 0; j < k; ++j) combined[j] = wp * (*p)[j] + wq * (*q)[j];
        next.insert(normalize_row(combined));
      }
    }
    for (const auto& row : next) {
      if (is_zero(row)) return std::nullopt;
    }
    stages[k] = std::move(next);
  }

  QVector xi(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    std::optional<Rational> lower, upper;
    for (const auto& row : stages[k + 1]) {
      Rational rest;
      for (std::size_t j = 0; j < k; ++j) rest += row[j] * xi[j];
      if (row[k] > 0) {
        Rational bound = -rest / row[k];
        if (!lower || bound > *lower) lower = bound;
      } else if (row[k] < 0) {
        Rational bound = rest / -row[k];
        if (!upper || bound < *upper) upper = bound;
      }
    }
    if (lower && upper) {
      xi[k] = (*lower + *upper) / 2;
    } else if (lower) {
      xi[k] = *lower + 1;
    } else if (upper) {
      xi[k] = *upper - 1;
    } else {
      xi[k] = 0;
    }
  }
  return xi;
}

}  // namespace jkres
