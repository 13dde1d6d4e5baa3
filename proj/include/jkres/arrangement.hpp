#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "jkres/linalg.hpp"
#include "jkres/polynomial.hpp"

namespace jkres {

/// Index set into a Configuration, 0-based and strictly increasing.
using IndexSet = std::vector<std::size_t>;

/// Ordered list of nonzero linear forms alpha_1..alpha_n on Q^r. Duplicates
/// are allowed.
class Configuration {
 public:
  /// Throws ValidationError on an empty list, a zero form or mixed lengths.
  explicit Configuration(std::vector<LinearForm> forms);
  static Configuration from_vectors(std::span<const QVector> vectors);

  std::size_t size() const noexcept { return forms_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const LinearForm& form(std::size_t i) const { return forms_.at(i); }
  const std::vector<LinearForm>& forms() const noexcept { return forms_; }
  const QVector& vector(std::size_t i) const { return forms_.at(i).coefficients(); }
  std::vector<QVector> vectors() const;
  std::vector<QVector> vectors(const IndexSet& subset) const;

  /// Whether the forms span the dual space.
  bool spans() const;

  /// Product of the forms at `subset` (1 for the empty set).
  Polynomial product_of(const IndexSet& subset, MonomialOrder order = MonomialOrder::grevlex) const;
  /// Product of the forms outside `subset`.
  Polynomial product_excluding(const IndexSet& subset, MonomialOrder order = MonomialOrder::grevlex) const;

 private:
  std::vector<LinearForm> forms_;
  std::size_t dim_ = 0;
};

/// xi with alpha_i(xi) > 0 for all i, or nullopt when the list is not polarized.
std::optional<QVector> polarization_witness(const Configuration& config);

/// Canonical normals of the distinct hyperplanes spanned by subsets of the
/// configuration, in order of first appearance over (r-1)-subsets taken
/// lexicographically. Empty when the forms do not span.
std::vector<QVector> spanned_hyperplanes(const Configuration& config);

/// True iff epsilon lies on no proper subspace spanned by forms of the
/// configuration.
bool is_regular(const Configuration& config, const QVector& epsilon);

/// Throws RegularityError naming epsilon unless it is regular.
void require_regular(const Configuration& config, const QVector& epsilon);

/// Coordinates of epsilon in the basis given by `subset`, or nullopt when
/// those forms are not a basis.
std::optional<QVector> basis_coordinates(const Configuration& config, const IndexSet& subset,
                                         const QVector& epsilon);

/// Lexicographically first basis J with epsilon in the open cone of J, or
/// nullopt when epsilon lies outside Cone(config). Requires regular epsilon.
std::optional<IndexSet> positive_basis(const Configuration& config, const QVector& epsilon);

/// Hyperplane normal oriented so that <normal, epsilon> > 0, with the forms
/// strictly on that side.
struct OrientedHyperplane {
  QVector normal;
  IndexSet positive_indices;
};

std::vector<OrientedHyperplane> oriented_hyperplanes(const Configuration& config, const QVector& epsilon);

/// Index sets whose products generate the ideal of the ε-side half-space
/// products, deduplicated and sorted by (size, lexicographic).
std::vector<IndexSet> jk_ideal_generator_sets(const Configuration& config, const QVector& epsilon);

std::vector<Polynomial> jk_ideal_generators(const Configuration& config, const QVector& epsilon,
                                            MonomialOrder order = MonomialOrder::grevlex);

/// Side of epsilon (+1 / -1) relative to each spanned hyperplane.
struct ChamberSignature {
  std::vector<int> signs;
  friend bool operator==(const ChamberSignature&, const ChamberSignature&) = default;
};

ChamberSignature chamber_signature(const Configuration& config, const QVector& epsilon);

}  // namespace jkres
