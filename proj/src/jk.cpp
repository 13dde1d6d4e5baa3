#include "jkres/jk.hpp"

#include <string>

#include "jkres/errors.hpp"
#include "jkres/poly_io.hpp"

namespace jkres {

std::string_view to_string(ShortCircuit reason) {
  switch (reason) {
    case ShortCircuit::not_spanning:
      return "not-spanning";
    case ShortCircuit::epsilon_outside_cone:
      return "epsilon-outside-cone";
    case ShortCircuit::degree_too_high:
      return "degree-too-high";
  }
  return "?";
}

Rational jk_basis_fraction(const Configuration& config, const QVector& epsilon, const IndexSet& basis) {
  if (basis.size() != config.dim()) {
    throw RankError("a basis needs " + std::to_string(config.dim()) + " forms, got " + std::to_string(basis.size()));
  }
  require_regular(config, epsilon);
  const QMatrix m = QMatrix::from_columns(config.vectors(basis));
  const Rational det = determinant(m);
  if (det == 0) throw RankError("forms of the requested basis are linearly dependent");
  const QVector coords = *solve(m, epsilon);
  for (const auto& c : coords) {
    if (c == 0) throw InternalError("regular epsilon has a zero coordinate in a basis of the configuration");
    if (c < 0) return 0;
  }
  return 1 / abs(det);
}

Polynomial effective_numerator(const Configuration& config, const QVector& epsilon, const Polynomial& numerator) {
  const std::size_t r = config.dim();
  if (numerator.nvars() != r) {
    throw DimensionError("numerator has " + std::to_string(numerator.nvars()) + " variables, expected " +
                         std::to_string(r));
  }
  if (epsilon.size() != r) throw DimensionError("epsilon length differs from the dimension");
  Polynomial out(r, numerator.order());
  if (config.size() < r) return out;
  const std::uint64_t top = config.size() - r;
  const Polynomial eps_form = LinearForm(epsilon).to_polynomial(numerator.order());
  for (const auto& [d, part] : homogeneous_components(numerator)) {
    if (d > top) continue;
    const auto k = static_cast<unsigned>(top - d);
    out += eps_form.pow(k) * part * Rational(1 / factorial(k));
  }
  return out;
}

namespace {

void require_valid_override(const Configuration& config, const QVector& epsilon, const IndexSet& basis) {
  const auto coords = basis_coordinates(config, basis, epsilon);
  if (!coords) throw ValidationError("override J is not a basis of the configuration");
  for (const auto& c : *coords) {
    if (c <= 0) throw ValidationError("epsilon is not in the open cone of the override J");
  }
}

}  // namespace

JKReport jk_residue(const JKProblem& problem, const std::optional<IndexSet>& basis_override) {
  const Configuration& config = problem.config;
  const std::size_t r = config.dim();
  const std::size_t n = config.size();
  if (problem.epsilon.size() != r) {
    throw DimensionError("epsilon has length " + std::to_string(problem.epsilon.size()) + ", expected " +
                         std::to_string(r));
  }
  if (problem.numerator.nvars() != r) {
    throw DimensionError("numerator has " + std::to_string(problem.numerator.nvars()) + " variables, expected " +
                         std::to_string(r));
  }
  if (!polarization_witness(config)) {
    throw PolarizationError("configuration is not polarized: no xi has alpha_i(xi) > 0 for every form");
  }

  JKReport report;
  report.value = 0;
  report.ideal_basis.order = problem.order;
  report.effective_numerator = Polynomial(r, problem.order);
  report.normal_form_numerator = Polynomial(r, problem.order);
  report.normal_form_delta = Polynomial(r, problem.order);

  if (!config.spans()) {
    report.short_circuit = ShortCircuit::not_spanning;
    return report;
  }
  require_regular(config, problem.epsilon);

  report.effective_numerator =
      effective_numerator(config, problem.epsilon, problem.numerator.with_order(problem.order));
  bool all_too_high = !problem.numerator.is_zero();
  for (const auto& [d, part] : homogeneous_components(problem.numerator)) all_too_high = all_too_high && d + r > n;
  if (all_too_high) {
    report.short_circuit = ShortCircuit::degree_too_high;
    return report;
  }

  if (basis_override) {
    require_valid_override(config, problem.epsilon, *basis_override);
    report.chosen_basis = *basis_override;
  } else {
    auto basis = positive_basis(config, problem.epsilon);
    if (!basis) {
      report.short_circuit = ShortCircuit::epsilon_outside_cone;
      return report;
    }
    report.chosen_basis = std::move(*basis);
  }
  report.gram_factor = abs(determinant(QMatrix::from_columns(config.vectors(report.chosen_basis))));

  report.generator_sets = jk_ideal_generator_sets(config, problem.epsilon);
  std::vector<Polynomial> gens;
  gens.reserve(report.generator_sets.size());
  for (const auto& set : report.generator_sets) gens.push_back(config.product_of(set, problem.order));
  report.ideal_basis = groebner_basis(gens, problem.order);

  const Polynomial delta = config.product_excluding(report.chosen_basis, problem.order);
  report.normal_form_numerator = normal_form(report.effective_numerator, report.ideal_basis);
  report.normal_form_delta = normal_form(delta, report.ideal_basis);

  const Polynomial& nd = report.normal_form_delta;
  const Polynomial& np = report.normal_form_numerator;
  if (nd.is_zero()) {
    throw InternalError("normal form of the complementary product vanished; the ideal is wrong");
  }
  if (nd.size() != 1) {
    throw InternalError("normal form of the complementary product has several terms: " + format_polynomial(nd));
  }
  if (np.is_zero()) return report;
  if (np.size() != 1 || np.lead_monomial() != nd.lead_monomial()) {
    throw InternalError("normal forms are not multiples of one monomial: " + format_polynomial(np) + " vs " +
                        format_polynomial(nd));
  }
  report.value = np.lead_coefficient() / nd.lead_coefficient() / report.gram_factor;
  return report;
}

}  // namespace jkres
