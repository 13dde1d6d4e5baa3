#include "jkres/oracle.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "jkres/combinatorics.hpp"
#include "jkres/errors.hpp"
#include "jkres/jk.hpp"

namespace jkres {

namespace {

struct PendingKey {
  std::uint64_t degree;
  IndexSet denominator;
  Monomial numerator;

  // Highest numerator degree first so like terms merge before expansion.
  bool operator<(const PendingKey& other) const {
    if (degree != other.degree) return degree > other.degree;
    return std::tie(denominator, numerator) < std::tie(other.denominator, other.numerator);
  }
};

IndexSet distinct(const IndexSet& multiset) {
  IndexSet out(multiset);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<IndexSet> rewriting_basis(const Configuration& config, const IndexSet& support,
                                        RewriteStrategy strategy) {
  std::optional<IndexSet> chosen;
  for_each_combination(support.size(), config.dim(), [&](const IndexSet& pick) {
    IndexSet candidate;
    for (std::size_t k : pick) candidate.push_back(support[k]);
    if (rank(config.vectors(candidate)) == config.dim()) {
      chosen = std::move(candidate);
      return strategy == RewriteStrategy::last_basis;
    }
    return true;
  });
  return chosen;
}

}  // namespace

PartialFractions total_partial_fraction(const Polynomial& p, const Configuration& config, RewriteStrategy strategy) {
  const std::size_t r = config.dim();
  const std::size_t n = config.size();
  if (p.nvars() != r) throw DimensionError("numerator variable count differs from the dimension");
  if (!p.is_zero() && (!p.is_homogeneous() || n < r || *p.degree() != n - r)) {
    throw DegreeError("numerator must be homogeneous of degree n - r = " +
                      (n < r ? std::string("(negative)") : std::to_string(n - r)));
  }

  IndexSet all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::map<PendingKey, Rational> pending;
  for (const auto& [m, c] : p.terms()) pending.emplace(PendingKey{m.degree(), all, m}, c);

  std::map<IndexSet, std::optional<IndexSet>> basis_cache;
  PartialFractions out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const PendingKey& key = node.key();
    const Rational& coeff = node.mapped();
    if (coeff == 0) continue;
    if (key.degree + r != key.denominator.size()) throw InternalError("fraction left degree -r during decomposition");

    const IndexSet support = distinct(key.denominator);
    auto cached = basis_cache.find(support);
    if (cached == basis_cache.end()) {
      cached = basis_cache.emplace(support, rewriting_basis(config, support, strategy)).first;
    }
    const std::optional<IndexSet>& basis = cached->second;
    if (!basis) {
      out.ng_terms.push_back({coeff, Polynomial::term(key.numerator, 1), key.denominator});
      continue;
    }
    if (key.degree == 0) {
      if (key.denominator.size() != r || support.size() != r) {
        throw InternalError("constant numerator over a denominator that is not a basis");
      }
      out.basis_terms[key.denominator] += coeff;
      continue;
    }

    // Rewrite the highest-index variable x_k of the numerator monomial as
    // sum_j c_j beta_j over the chosen basis.
    std::size_t k = r;
    while (key.numerator[k - 1] == 0) --k;
    --k;
    std::vector<LinearForm> beta;
    for (std::size_t i : *basis) beta.push_back(config.form(i));
    const Polynomial xk = Polynomial::variable(r, k);
    const Polynomial in_basis = substitute_linear_forms(xk, beta);

    Monomial rest = key.numerator;
    rest[k] -= 1;
    for (std::size_t j = 0; j < r; ++j) {
      const Rational cj = in_basis.coefficient(Monomial::variable(r, j));
      if (cj == 0) continue;
      IndexSet denom = key.denominator;
      denom.erase(std::find(denom.begin(), denom.end(), (*basis)[j]));
      auto [it, inserted] = pending.try_emplace(PendingKey{key.degree - 1, std::move(denom), rest}, 0);
      it->second += coeff * cj;
    }
  }
  for (auto it = out.basis_terms.begin(); it != out.basis_terms.end();) {
    it = it->second == 0 ? out.basis_terms.erase(it) : std::next(it);
  }
  return out;
}

Polynomial recombine(const PartialFractions& parts, const Configuration& config) {
  const std::size_t n = config.size();
  IndexSet all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  // Clearing over prod(alpha_i) multiplies each term by the forms missing
  // from its denominator.
  auto cofactor = [&](const IndexSet& denom) {
    IndexSet missing;
    std::set_difference(all.begin(), all.end(), denom.begin(), denom.end(), std::back_inserter(missing));
    return config.product_of(missing);
  };
  Polynomial total(config.dim());
  for (const auto& [sigma, c] : parts.basis_terms) total += cofactor(sigma) * c;
  for (const auto& t : parts.ng_terms) total += t.numerator * cofactor(t.denominator) * t.coefficient;
  return total;
}

Rational jk_oracle(const Configuration& config, const QVector& epsilon, const Polynomial& p,
                   RewriteStrategy strategy) {
  if (epsilon.size() != config.dim()) throw DimensionError("epsilon length differs from the dimension");
  if (!polarization_witness(config)) {
    throw PolarizationError("configuration is not polarized: no xi has alpha_i(xi) > 0 for every form");
  }
  if (!config.spans()) return 0;
  require_regular(config, epsilon);
  const Polynomial padded = effective_numerator(config, epsilon, p);
  const PartialFractions parts = total_partial_fraction(padded, config, strategy);
  Rational value = 0;
  for (const auto& [sigma, c] : parts.basis_terms) value += c * jk_basis_fraction(config, epsilon, sigma);
  return value;
}

}  // namespace jkres
