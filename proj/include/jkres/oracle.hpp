#pragma once

#include <map>
#include <vector>

#include "jkres/arrangement.hpp"
#include "jkres/polynomial.hpp"

namespace jkres {

/// coefficient * numerator / prod_{i in denominator} alpha_i. The
/// denominator is a sorted multiset of configuration indices.
struct FractionTerm {
  Rational coefficient;
  Polynomial numerator;
  IndexSet denominator;
};

/// How the rewriting basis is picked from the support of a fraction.
enum class RewriteStrategy {
  first_basis,  ///< lexicographically first independent r-subset
  last_basis,   ///< lexicographically last independent r-subset
};

struct PartialFractions {
  /// Coefficient of 1 / prod_{i in sigma} alpha_i for each basis sigma.
  std::map<IndexSet, Rational> basis_terms;
  /// Terms whose denominator forms do not span.
  std::vector<FractionTerm> ng_terms;
};

/// Decomposes P / prod(alpha_i) into basis fractions plus fractions with
/// non-spanning denominators.
///
/// Works on single-monomial numerators: a numerator variable is rewritten
/// in an independent r-subset of the denominator forms and each resulting
/// form cancels one denominator factor. Like terms are merged level by
/// level, and the numerator degree drops by one per step.
/// Throws DegreeError unless P is zero or homogeneous of degree n - r.
PartialFractions total_partial_fraction(const Polynomial& p, const Configuration& config,
                                        RewriteStrategy strategy = RewriteStrategy::first_basis);

/// Sum of all decomposition terms over the common denominator
/// prod(alpha_i), i.e. the polynomial that should equal P.
Polynomial recombine(const PartialFractions& parts, const Configuration& config);

/// Residue value by partial fractions: sum of basis coefficients times
/// jk_basis_fraction; non-spanning terms contribute nothing. Same
/// preconditions and degree padding as jk_residue.
Rational jk_oracle(const Configuration& config, const QVector& epsilon, const Polynomial& p,
                   RewriteStrategy strategy = RewriteStrategy::first_basis);

}  // namespace jkres
