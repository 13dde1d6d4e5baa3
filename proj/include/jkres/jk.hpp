#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "jkres/arrangement.hpp"
#include "jkres/groebner.hpp"
#include "jkres/polynomial.hpp"

namespace jkres {

/// Input of the Jeffrey-Kirwan residue of numerator / prod(alpha_i) at epsilon.
struct JKProblem {
  Configuration config;
  QVector epsilon;
  Polynomial numerator;
  MonomialOrder order = MonomialOrder::grevlex;
};

enum class ShortCircuit { not_spanning, epsilon_outside_cone, degree_too_high };

std::string_view to_string(ShortCircuit reason);

struct JKReport {
  Rational value;
  /// Reduced basis of the ideal whose top-degree slice is the kernel.
  GroebnerBasis ideal_basis;
  std::vector<IndexSet> generator_sets;
  IndexSet chosen_basis;
  /// |det| of the chosen basis; the value is scaled by its inverse.
  Rational gram_factor;
  /// Numerator after padding every homogeneous piece up to degree n - r.
  Polynomial effective_numerator;
  Polynomial normal_form_numerator;
  Polynomial normal_form_delta;
  std::optional<ShortCircuit> short_circuit;
};

/// Value of the residue functional on 1 / prod_{j in basis} alpha_j:
/// 1/|det| when epsilon lies in the cone of the basis, else 0.
/// Throws RankError when the forms at `basis` are dependent.
Rational jk_basis_fraction(const Configuration& config, const QVector& epsilon, const IndexSet& basis);

/// Replaces each homogeneous component P_d (d <= n - r) by
/// eps(x)^(n-r-d) P_d / (n-r-d)! and drops components of higher degree.
/// The result is homogeneous of degree n - r (or zero).
Polynomial effective_numerator(const Configuration& config, const QVector& epsilon, const Polynomial& numerator);

/// Full pipeline: degree padding, positive basis J, Groebner basis of the
/// half-space product ideal, and the ratio of normal forms of P and of
/// prod_{i not in J} alpha_i.
///
/// `basis_override` replaces the automatically chosen J; it must be a basis
/// whose open cone contains epsilon.
///
/// Throws PolarizationError for an unpolarized list, RegularityError for a
/// non-regular epsilon and DimensionError on shape mismatches.
JKReport jk_residue(const JKProblem& problem, const std::optional<IndexSet>& basis_override = std::nullopt);

}  // namespace jkres
