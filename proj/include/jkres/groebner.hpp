#pragma once

#include <functional>
#include <span>
#include <vector>

#include "jkres/polynomial.hpp"

namespace jkres {

/// Generator list tagged with the monomial order it is a Groebner basis for.
/// Every generator is stored sorted under that order.
struct GroebnerBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order = MonomialOrder::grevlex;
  bool reduced = false;

  std::size_t nvars() const { return generators.empty() ? 0 : generators.front().nvars(); }
  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Observer called with the monomial eliminated at each step of divide().
using DivisionStepObserver = std::function<void(const Monomial&)>;

/// Multivariate division f = sum q_i f_i + R.
///
/// Each step picks the greatest monomial of the running remainder that is
/// divisible by some Lt(f_i), and divides by the smallest such i. Throws
/// ValidationError on an empty divisor list or a zero divisor.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder order,
                      const DivisionStepObserver& observer = {});

/// Remainder of divide(); cheaper since quotients are not built.
Polynomial remainder(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

/// Buchberger's algorithm with the normal selection strategy and the
/// coprime and chain criteria. Zero inputs are dropped. The result is a
/// Groebner basis but not necessarily reduced.
GroebnerBasis buchberger(std::span<const Polynomial> generators, MonomialOrder order);

/// The unique reduced Groebner basis of the ideal, generators sorted by
/// ascending leading monomial. Input that is not yet a Groebner basis is
/// completed first.
GroebnerBasis reduce_basis(const GroebnerBasis& basis);

/// reduce_basis(buchberger(...)).
GroebnerBasis groebner_basis(std::span<const Polynomial> generators, MonomialOrder order);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
bool contains(const GroebnerBasis& basis, const Polynomial& f);

/// True when every S-polynomial of the basis reduces to zero.
bool is_groebner(const GroebnerBasis& basis);

/// Whether 0 is the only common zero of homogeneous generators, decided by
/// finding a pure power of every variable among the leading monomials of
/// the reduced basis. Throws ValidationError on non-homogeneous input.
bool has_only_origin_zero(std::span<const Polynomial> generators, MonomialOrder order = MonomialOrder::grevlex);
bool has_only_origin_zero(const GroebnerBasis& basis);

}  // namespace jkres
