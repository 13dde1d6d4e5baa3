#pragma once

#include <span>
#include <vector>

#include "jkres/polynomial.hpp"

namespace jkres {

/// Square matrix of polynomials, row-major: rows[i][j].
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant by permutation expansion; fine for the small sizes used here.
Polynomial determinant(const PolyMatrix& m);

/// The canonical splitting P_i = sum_j a_ij x_j with a_ij = (dP_i/dx_j)/deg P_i.
PolyMatrix euler_matrix(std::span<const Polynomial> system);

/// Local residue at 0 of H / (P_1 | ... | P_r) for homogeneous inputs with 0
/// as only common zero, computed as Lc N(H) / Lc N(det a) for the Euler
/// splitting a.
///
/// Returns 0 when deg H differs from sum (deg P_i - 1). Throws DegreeError on
/// non-homogeneous input and NotIsolatedError when the P_i share a zero
/// besides the origin.
Rational residue_homogeneous(const Polynomial& h, std::span<const Polynomial> system,
                             MonomialOrder order = MonomialOrder::grevlex);

/// Same as residue_homogeneous but with a caller-supplied splitting
/// P_i = sum_j split[i][j] x_j. Throws ValidationError if the splitting
/// does not reproduce the system.
Rational residue_homogeneous(const Polynomial& h, std::span<const Polynomial> system, const PolyMatrix& split,
                             MonomialOrder order = MonomialOrder::grevlex);

/// Residue at 0 of h / (p_1 | ... | p_r) for arbitrary p_i whose top-degree
/// forms have 0 as only common zero. Reduces to the homogeneous case in
/// r + 1 variables with the extra denominator x0^d0. Throws NotIsolatedError
/// when the top forms share a nonzero zero.
Rational residue_affine(const Polynomial& h, std::span<const Polynomial> system,
                        MonomialOrder order = MonomialOrder::grevlex);

}  // namespace jkres
