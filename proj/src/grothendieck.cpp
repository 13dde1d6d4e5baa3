#include "jkres/grothendieck.hpp"

#include <string>

#include "jkres/errors.hpp"
#include "jkres/groebner.hpp"
#include "jkres/poly_io.hpp"

namespace jkres {

namespace {

Polynomial expand_minor(const PolyMatrix& m, std::size_t row, std::vector<bool>& used) {
  const std::size_t n = m.size();
  const std::size_t nvars = m[0][0].nvars();
  if (row == n) return Polynomial::constant(nvars, 1);
  Polynomial sum(nvars);
  int parity = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (used[col]) continue;
    if (!m[row][col].is_zero()) {
      used[col] = true;
      Polynomial minor = m[row][col] * expand_minor(m, row + 1, used);
      used[col] = false;
      if (parity % 2 == 0) {
        sum += minor;
      } else {
        sum -= minor;
      }
    }
    ++parity;
  }
  return sum;
}

void check_system(const Polynomial& h, std::span<const Polynomial> system) {
  const std::size_t r = system.size();
  if (r == 0) throw ValidationError("empty denominator system");
  if (h.nvars() != r) {
    throw DimensionError("numerator has " + std::to_string(h.nvars()) + " variables but there are " +
                         std::to_string(r) + " denominators");
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (system[i].nvars() != r) throw DimensionError("denominator " + std::to_string(i + 1) + " has the wrong variable count");
    const auto d = system[i].degree();
    if (!d || *d == 0) {
      throw DegreeError("denominator " + std::to_string(i + 1) + " must have degree >= 1, got " +
                        format_polynomial(system[i]));
    }
  }
}

void check_homogeneous(const Polynomial& h, std::span<const Polynomial> system) {
  if (!h.is_homogeneous()) throw DegreeError("numerator " + format_polynomial(h) + " is not homogeneous");
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (!system[i].is_homogeneous()) {
      throw DegreeError("denominator " + std::to_string(i + 1) + " (" + format_polynomial(system[i]) +
                        ") is not homogeneous");
    }
  }
}

std::uint64_t socle_degree(std::span<const Polynomial> system) {
  std::uint64_t total = 0;
  for (const auto& p : system) total += *p.degree() - 1;
  return total;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.empty()) throw DimensionError("determinant of an empty polynomial matrix");
  for (const auto& row : m) {
    if (row.size() != m.size()) throw DimensionError("determinant of a non-square polynomial matrix");
  }
  std::vector<bool> used(m.size(), false);
  return expand_minor(m, 0, used);
}

PolyMatrix euler_matrix(std::span<const Polynomial> system) {
  PolyMatrix a;
  a.reserve(system.size());
  for (const auto& p : system) a.push_back(euler_split(p));
  return a;
}

Rational residue_homogeneous(const Polynomial& h, std::span<const Polynomial> system, MonomialOrder order) {
  check_system(h, system);
  check_homogeneous(h, system);
  if (h.is_zero() || *h.degree() != socle_degree(system)) return 0;
  return residue_homogeneous(h, system, euler_matrix(system), order);
}

Rational residue_homogeneous(const Polynomial& h, std::span<const Polynomial> system, const PolyMatrix& split,
                             MonomialOrder order) {
  check_system(h, system);
  check_homogeneous(h, system);
  const std::size_t r = system.size();
  if (split.size() != r) throw DimensionError("splitting matrix has the wrong number of rows");
  for (std::size_t i = 0; i < r; ++i) {
    if (split[i].size() != r) throw DimensionError("splitting matrix has the wrong number of columns");
    Polynomial recombined(r);
    for (std::size_t j = 0; j < r; ++j) recombined += split[i][j] * Polynomial::variable(r, j);
    if (recombined != system[i]) {
      throw ValidationError("splitting row " + std::to_string(i + 1) + " does not reproduce denominator " +
                            format_polynomial(system[i]));
    }
  }
  const std::uint64_t target = socle_degree(system);
  if (h.is_zero() || *h.degree() != target) return 0;

  const GroebnerBasis gb = groebner_basis(system, order);
  if (!has_only_origin_zero(gb)) {
    throw NotIsolatedError("the denominators have a common zero other than the origin");
  }
  // Only the socle-degree part of the determinant carries residue.
  const auto parts = homogeneous_components(determinant(split));
  const auto slice = parts.find(target);
  if (slice == parts.end()) throw InternalError("splitting determinant has no part in the socle degree");
  const Polynomial nd = normal_form(slice->second, gb);
  const Polynomial nh = normal_form(h, gb);
  if (nd.size() != 1) {
    throw InternalError("normal form of the determinant is not a single socle monomial: " + format_polynomial(nd));
  }
  if (nh.is_zero()) return 0;
  if (nh.size() != 1 || nh.lead_monomial() != nd.lead_monomial()) {
    throw InternalError("normal forms are not multiples of one socle monomial");
  }
  return nh.lead_coefficient() / nd.lead_coefficient();
}

Rational residue_affine(const Polynomial& h, std::span<const Polynomial> system, MonomialOrder order) {
  check_system(h, system);
  const std::size_t r = system.size();
  std::vector<Polynomial> top;
  top.reserve(r);
  for (const auto& p : system) top.push_back(homogeneous_components(p).rbegin()->second);
  if (!has_only_origin_zero(top, order)) {
    throw NotIsolatedError("the top-degree forms of the denominators have a common zero other than the origin");
  }
  if (h.is_zero()) return 0;
  const std::uint64_t d = *h.degree();
  const std::uint64_t target = socle_degree(system);
  if (d < target) return 0;

  std::vector<Polynomial> lifted;
  lifted.reserve(r + 1);
  lifted.push_back(Polynomial::term(Monomial::variable(r + 1, 0, static_cast<Monomial::Exponent>(d + 1 - target)), 1));
  for (const auto& p : system) lifted.push_back(homogenize(p, 0, *p.degree()));
  return residue_homogeneous(homogenize(h, 0, d), lifted, order);
}

}  // namespace jkres
