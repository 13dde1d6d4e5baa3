#include "jkres/arrangement.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "jkres/combinatorics.hpp"
#include "jkres/errors.hpp"

namespace jkres {

namespace {

std::string format_vector(const QVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

void check_epsilon(const Configuration& config, const QVector& epsilon) {
  if (epsilon.size() != config.dim()) {
    throw DimensionError("epsilon has length " + std::to_string(epsilon.size()) + " but the forms live in dimension " +
                         std::to_string(config.dim()));
  }
}

}  // namespace

Configuration::Configuration(std::vector<LinearForm> forms) : forms_(std::move(forms)) {
  if (forms_.empty()) throw ValidationError("configuration needs at least one form");
  dim_ = forms_.front().nvars();
  if (dim_ == 0) throw ValidationError("forms must have at least one coordinate");
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (forms_[i].nvars() != dim_) {
      throw ValidationError("form " + std::to_string(i + 1) + " has length " + std::to_string(forms_[i].nvars()) +
                            ", expected " + std::to_string(dim_));
    }
    if (forms_[i].is_zero()) throw ValidationError("form " + std::to_string(i + 1) + " is zero");
  }
}

Configuration Configuration::from_vectors(std::span<const QVector> vectors) {
  std::vector<LinearForm> forms;
  forms.reserve(vectors.size());
  for (const auto& v : vectors) forms.emplace_back(v);
  return Configuration(std::move(forms));
}

std::vector<QVector> Configuration::vectors() const {
  std::vector<QVector> out;
  out.reserve(forms_.size());
  for (const auto& f : forms_) out.push_back(f.coefficients());
  return out;
}

std::vector<QVector> Configuration::vectors(const IndexSet& subset) const {
  std::vector<QVector> out;
  out.reserve(subset.size());
  for (std::size_t i : subset) out.push_back(vector(i));
  return out;
}

bool Configuration::spans() const { return rank(vectors()) == dim_; }

Polynomial Configuration::product_of(const IndexSet& subset, MonomialOrder order) const {
  Polynomial p = Polynomial::constant(dim_, 1, order);
  for (std::size_t i : subset) p *= form(i).to_polynomial(order);
  return p;
}

Polynomial Configuration::product_excluding(const IndexSet& subset, MonomialOrder order) const {
  Polynomial p = Polynomial::constant(dim_, 1, order);
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (!std::binary_search(subset.begin(), subset.end(), i)) p *= form(i).to_polynomial(order);
  }
  return p;
}

std::optional<QVector> polarization_witness(const Configuration& config) {
  const auto vs = config.vectors();
  return strictly_feasible(vs);
}

std::vector<QVector> spanned_hyperplanes(const Configuration& config) {
  std::vector<QVector> normals;
  std::set<QVector> seen;
  const std::size_t r = config.dim();
  for_each_combination(config.size(), r - 1, [&](const IndexSet& subset) {
    const auto vs = config.vectors(subset);
    if (rank(vs) == r - 1) {
      QVector normal = hyperplane_normal(vs, r);
      if (seen.insert(normal).second) normals.push_back(std::move(normal));
    }
    return true;
  });
  return normals;
}

bool is_regular(const Configuration& config, const QVector& epsilon) {
  check_epsilon(config, epsilon);
  if (!config.spans()) {
    // Every subset spans a subspace of span(config); epsilon must avoid it.
    std::vector<QVector> vs = config.vectors();
    const std::size_t base = rank(vs);
    vs.push_back(epsilon);
    return rank(vs) > base;
  }
  const auto normals = spanned_hyperplanes(config);
  return std::all_of(normals.begin(), normals.end(), [&](const QVector& n) { return dot(n, epsilon) != 0; });
}

void require_regular(const Configuration& config, const QVector& epsilon) {
  if (!is_regular(config, epsilon)) {
    throw RegularityError("epsilon " + format_vector(epsilon) +
                          " is not regular: it lies on a subspace spanned by forms of the configuration");
  }
}

std::optional<QVector> basis_coordinates(const Configuration& config, const IndexSet& subset,
                                         const QVector& epsilon) {
  check_epsilon(config, epsilon);
  if (subset.size() != config.dim()) return std::nullopt;
  const auto cols = config.vectors(subset);
  const QMatrix m = QMatrix::from_columns(cols);
  if (determinant(m) == 0) return std::nullopt;
  return solve(m, epsilon);
}

std::optional<IndexSet> positive_basis(const Configuration& config, const QVector& epsilon) {
  require_regular(config, epsilon);
  std::optional<IndexSet> found;
  for_each_combination(config.size(), config.dim(), [&](const IndexSet& subset) {
    const auto coords = basis_coordinates(config, subset, epsilon);
    if (!coords) return true;
    bool positive = true;
    for (const auto& c : *coords) {
      if (c == 0) throw InternalError("regular epsilon has a zero coordinate in a basis of the configuration");
      positive = positive && c > 0;
    }
    if (positive) {
      found = subset;
      return false;
    }
    return true;
  });
  return found;
}

std::vector<OrientedHyperplane> oriented_hyperplanes(const Configuration& config, const QVector& epsilon) {
  require_regular(config, epsilon);
  std::vector<OrientedHyperplane> out;
  for (QVector normal : spanned_hyperplanes(config)) {
    if (dot(normal, epsilon) < 0) {
      for (auto& q : normal) q = -q;
    }
    OrientedHyperplane h;
    for (std::size_t i = 0; i < config.size(); ++i) {
      if (dot(normal, config.vector(i)) > 0) h.positive_indices.push_back(i);
    }
    h.normal = std::move(normal);
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<IndexSet> jk_ideal_generator_sets(const Configuration& config, const QVector& epsilon) {
  std::set<IndexSet> unique;
  for (auto& h : oriented_hyperplanes(config, epsilon)) unique.insert(std::move(h.positive_indices));
  std::vector<IndexSet> sets(unique.begin(), unique.end());
  std::stable_sort(sets.begin(), sets.end(),
                   [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
  return sets;
}

std::vector<Polynomial> jk_ideal_generators(const Configuration& config, const QVector& epsilon,
                                            MonomialOrder order) {
  std::vector<Polynomial> gens;
  for (const auto& set : jk_ideal_generator_sets(config, epsilon)) gens.push_back(config.product_of(set, order));
  return gens;
}

ChamberSignature chamber_signature(const Configuration& config, const QVector& epsilon) {
  require_regular(config, epsilon);
  ChamberSignature sig;
  for (const auto& normal : spanned_hyperplanes(config)) sig.signs.push_back(sign(dot(normal, epsilon)));
  return sig;
}

}  // namespace jkres
