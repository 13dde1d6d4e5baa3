#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "jkres/linalg.hpp"
#include "jkres/monomial.hpp"
#include "jkres/rational.hpp"

namespace jkres {

/// Sparse multivariate polynomial over Q.
///
/// Terms are kept in a map sorted in descending order under the
/// polynomial's own monomial order, so the leading term is the first entry.
/// Zero coefficients are never stored and the zero polynomial has no terms.
/// Equality compares terms only; two equal polynomials may carry different
/// orders.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, MonomialGreater>;

  explicit Polynomial(std::size_t nvars = 0, MonomialOrder order = MonomialOrder::grevlex);

  static Polynomial constant(std::size_t nvars, const Rational& c,
                             MonomialOrder order = MonomialOrder::grevlex);
  static Polynomial variable(std::size_t nvars, std::size_t index,
                             MonomialOrder order = MonomialOrder::grevlex);
  static Polynomial term(const Monomial& m, const Rational& c,
                         MonomialOrder order = MonomialOrder::grevlex);

  std::size_t nvars() const noexcept { return nvars_; }
  MonomialOrder order() const noexcept { return terms_.key_comp().order; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_homogeneous() const noexcept;
  /// Total degree; nullopt for the zero polynomial.
  std::optional<std::uint64_t> degree() const noexcept;
  Rational coefficient(const Monomial& m) const;

  /// Same polynomial re-sorted under `order`.
  Polynomial with_order(MonomialOrder order) const;

  /// Leading monomial / coefficient under the polynomial's own order.
  /// Throws DegreeError on the zero polynomial.
  const Monomial& lead_monomial() const;
  const Rational& lead_coefficient() const;

  /// this += c * m * g
  void add_scaled(const Polynomial& g, const Rational& c, const Monomial& m);
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }
  friend Polynomial operator-(Polynomial f) { return f *= Rational(-1); }
  friend bool operator==(const Polynomial& f, const Polynomial& g);

  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial monic() const;

 private:
  void check_compatible(const Polynomial& g) const;

  std::size_t nvars_;
  Terms terms_;
};

/// (Lc(f), Lm(f)) under `order`. Throws DegreeError for f = 0.
std::pair<Rational, Monomial> leading_term(const Polynomial& f, MonomialOrder order);

/// Linear form sum c_i x_i with zero constant term.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(QVector coefficients) : coeffs_(std::move(coefficients)) {}

  /// Throws DegreeError unless f is homogeneous of degree 1 (or zero).
  static LinearForm from_polynomial(const Polynomial& f);

  const QVector& coefficients() const noexcept { return coeffs_; }
  std::size_t nvars() const noexcept { return coeffs_.size(); }
  bool is_zero() const { return jkres::is_zero(coeffs_); }
  Rational operator()(const QVector& point) const { return dot(coeffs_, point); }
  Polynomial to_polynomial(MonomialOrder order = MonomialOrder::grevlex) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  QVector coeffs_;
};

/// Product of the given forms (1 for an empty list).
Polynomial product(std::span<const LinearForm> forms, std::size_t nvars,
                   MonomialOrder order = MonomialOrder::grevlex);

/// Degree-indexed homogeneous pieces of f; the zero polynomial gives an empty map.
std::map<std::uint64_t, Polynomial> homogeneous_components(const Polynomial& f);

/// x0^d * f(x/x0) with the fresh variable x0 inserted at `position`.
/// Throws DegreeError when d < deg f.
Polynomial homogenize(const Polynomial& f, std::size_t position, std::uint64_t degree);

/// Substitutes `value` for variable `var` and drops that variable.
Polynomial specialize(const Polynomial& f, std::size_t var, const Rational& value);

/// Coefficients a_j = (dP/dx_j)/d with sum_j a_j x_j = P (Euler's identity).
/// Throws DegreeError unless P is homogeneous of degree >= 1.
std::vector<Polynomial> euler_split(const Polynomial& p);

/// f(images[0], ..., images[r-1]); every image must share one variable count.
Polynomial compose(const Polynomial& f, std::span<const Polynomial> images);

/// g in fresh variables u_1..u_r with g(basis_1(x), ..., basis_r(x)) = f(x).
/// Throws RankError when the forms are dependent.
Polynomial substitute_linear_forms(const Polynomial& f, std::span<const LinearForm> basis);

}  // namespace jkres
