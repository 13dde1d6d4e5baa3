#include "jkres/polynomial.hpp"

#include <algorithm>
#include <string>

#include "jkres/errors.hpp"

namespace jkres {

Polynomial::Polynomial(std::size_t nvars, MonomialOrder order)
    : nvars_(nvars), terms_(MonomialGreater{order}) {}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c, MonomialOrder order) {
  Polynomial p(nvars, order);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, MonomialOrder order) {
  if (index >= nvars) throw DimensionError("variable index out of range");
  Polynomial p(nvars, order);
  p.add_term(Monomial::variable(nvars, index), 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c, MonomialOrder order) {
  Polynomial p(m.nvars(), order);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

std::optional<std::uint64_t> Polynomial::degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  Polynomial out(nvars_, order);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

const Monomial& Polynomial::lead_monomial() const {
  if (terms_.empty()) throw DegreeError("leading term of the zero polynomial is undefined");
  return terms_.begin()->first;
}

const Rational& Polynomial::lead_coefficient() const {
  if (terms_.empty()) throw DegreeError("leading term of the zero polynomial is undefined");
  return terms_.begin()->second;
}

void Polynomial::check_compatible(const Polynomial& g) const {
  if (g.nvars_ != nvars_) {
    throw DimensionError("polynomials in " + std::to_string(nvars_) + " and " + std::to_string(g.nvars_) +
                         " variables");
  }
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw DimensionError("monomial variable count does not match polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::add_scaled(const Polynomial& g, const Rational& c, const Monomial& m) {
  check_compatible(g);
  if (c == 0) return;
  for (const auto& [gm, gc] : g.terms_) {
    Rational coeff = c * gc;
    auto [it, inserted] = terms_.try_emplace(gm * m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  check_compatible(g);
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  check_compatible(g);
  for (const auto& [m, c] : g.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
  *this = *this * g;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_compatible(g);
  Polynomial out(f.nvars_, f.order());
  for (const auto& [m, c] : g.terms_) out.add_scaled(f, c, m);
  return out;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (f.nvars_ != g.nvars_ || f.terms_.size() != g.terms_.size()) return false;
  if (f.order() == g.order()) {
    return std::equal(f.terms_.begin(), f.terms_.end(), g.terms_.begin(),
                      [](const auto& a, const auto& b) { return a.first == b.first && a.second == b.second; });
  }
  for (const auto& [m, c] : f.terms_) {
    const auto it = g.terms_.find(m);
    if (it == g.terms_.end() || it->second != c) return false;
  }
  return true;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1, order());
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw DimensionError("derivative variable out of range");
  Polynomial out(nvars_, order());
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    dm[var] -= 1;
    out.add_term(dm, c * m[var]);
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * Rational(1 / lead_coefficient());
}

std::pair<Rational, Monomial> leading_term(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) throw DegreeError("leading term of the zero polynomial is undefined");
  if (f.order() == order) return {f.lead_coefficient(), f.lead_monomial()};
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it) {
    if (compare(it->first, best->first, order) > 0) best = it;
  }
  return {best->second, best->first};
}

LinearForm LinearForm::from_polynomial(const Polynomial& f) {
  QVector coeffs(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != 1) throw DegreeError("polynomial is not a linear form");
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 1) coeffs[i] = c;
    }
  }
  return LinearForm(std::move(coeffs));
}

Polynomial LinearForm::to_polynomial(MonomialOrder order) const {
  Polynomial p(coeffs_.size(), order);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p.add_term(Monomial::variable(coeffs_.size(), i), coeffs_[i]);
  return p;
}

Polynomial product(std::span<const LinearForm> forms, std::size_t nvars, MonomialOrder order) {
  Polynomial out = Polynomial::constant(nvars, 1, order);
  for (const auto& form : forms) {
    if (form.nvars() != nvars) throw DimensionError("linear form variable count mismatch");
    out *= form.to_polynomial(order);
  }
  return out;
}

std::map<std::uint64_t, Polynomial> homogeneous_components(const Polynomial& f) {
  std::map<std::uint64_t, Polynomial> parts;
  for (const auto& [m, c] : f.terms()) {
    auto it = parts.try_emplace(m.degree(), f.nvars(), f.order()).first;
    it->second.add_term(m, c);
  }
  return parts;
}

Polynomial homogenize(const Polynomial& f, std::size_t position, std::uint64_t degree) {
  if (position > f.nvars()) throw DimensionError("homogenizing variable position out of range");
  const auto deg = f.degree();
  if (deg && *deg > degree) {
    throw DegreeError("target degree " + std::to_string(degree) + " is below the polynomial degree " +
                      std::to_string(*deg));
  }
  Polynomial out(f.nvars() + 1, f.order());
  for (const auto& [m, c] : f.terms()) {
    std::vector<Monomial::Exponent> exps(m.exponents());
    exps.insert(exps.begin() + static_cast<std::ptrdiff_t>(position),
                static_cast<Monomial::Exponent>(degree - m.degree()));
    out.add_term(Monomial(std::move(exps)), c);
  }
  return out;
}

Polynomial specialize(const Polynomial& f, std::size_t var, const Rational& value) {
  if (var >= f.nvars()) throw DimensionError("specialized variable out of range");
  Polynomial out(f.nvars() - 1, f.order());
  for (const auto& [m, c] : f.terms()) {
    std::vector<Monomial::Exponent> exps(m.exponents());
    const auto e = exps[var];
    exps.erase(exps.begin() + static_cast<std::ptrdiff_t>(var));
    Rational factor = 1;
    for (Monomial::Exponent k = 0; k < e; ++k) factor *= value;
    out.add_term(Monomial(std::move(exps)), c * factor);
  }
  return out;
}

std::vector<Polynomial> euler_split(const Polynomial& p) {
  const auto deg = p.degree();
  if (!deg || *deg == 0) throw DegreeError("Euler split needs a homogeneous polynomial of degree >= 1");
  if (!p.is_homogeneous()) throw DegreeError("Euler split of a non-homogeneous polynomial");
  std::vector<Polynomial> parts;
  parts.reserve(p.nvars());
  const Rational inv_degree(1, static_cast<unsigned long>(*deg));
  for (std::size_t j = 0; j < p.nvars(); ++j) parts.push_back(p.derivative(j) * inv_degree);
  return parts;
}

Polynomial compose(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.size() != f.nvars()) throw DimensionError("composition needs one image per variable");
  const std::size_t target_vars = images.empty() ? 0 : images.front().nvars();
  for (const auto& img : images) {
    if (img.nvars() != target_vars) throw DimensionError("composition images have different variable counts");
  }
  // powers[i][e] = images[i]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, std::size_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target_vars, 1, f.order()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial out(target_vars, f.order());
  for (const auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial::constant(target_vars, c, f.order());
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] > 0) t *= power(i, m[i]);
    }
    out += t;
  }
  return out;
}

Polynomial substitute_linear_forms(const Polynomial& f, std::span<const LinearForm> basis) {
  const std::size_t r = f.nvars();
  if (basis.size() != r) throw DimensionError("substitution needs exactly one form per variable");
  std::vector<QVector> rows;
  rows.reserve(r);
  for (const auto& form : basis) {
    if (form.nvars() != r) throw DimensionError("basis form has the wrong variable count");
    rows.push_back(form.coefficients());
  }
  const QMatrix b = QMatrix::from_rows(rows);
  if (determinant(b) == 0) throw RankError("forms are linearly dependent; cannot rewrite in them");
  // u = B x, so x_i = sum_j (B^-1)_{ij} u_j; column j of B^-1 solves B c = e_j.
  std::vector<Polynomial> images(r, Polynomial(r, f.order()));
  for (std::size_t j = 0; j < r; ++j) {
    QVector e(r);
    e[j] = 1;
    const QVector col = *solve(b, e);
    for (std::size_t i = 0; i < r; ++i) images[i].add_term(Monomial::variable(r, j), col[i]);
  }
  return compose(f, images);
}

}  // namespace jkres
