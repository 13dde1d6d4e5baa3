#include "jkres/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "jkres/errors.hpp"

namespace jkres {

namespace {

std::vector<Polynomial> sorted_under(std::span<const Polynomial> polys, MonomialOrder order) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.order() == order ? p : p.with_order(order));
  return out;
}

void check_divisors(const Polynomial& f, std::span<const Polynomial> divisors) {
  if (divisors.empty()) throw ValidationError("division by an empty divisor list");
  for (const auto& d : divisors) {
    if (d.is_zero()) throw ValidationError("division by the zero polynomial");
    if (d.nvars() != f.nvars()) throw DimensionError("divisor variable count differs from dividend");
  }
}

// Shared division loop. `on_step(i, coeff, mono)` is told each reduction step.
template <typename OnStep>
Polynomial run_division(const Polynomial& f, const std::vector<Polynomial>& divisors, MonomialOrder order,
                        OnStep&& on_step) {
  Polynomial rem = f.order() == order ? f : f.with_order(order);
  auto it = rem.terms().begin();
  while (it != rem.terms().end()) {
    const Monomial& m = it->first;
    std::size_t which = divisors.size();
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (divides(divisors[i].lead_monomial(), m)) {
        which = i;
        break;
      }
    }
    if (which == divisors.size()) {
      ++it;
      continue;
    }
    const Monomial eliminated = m;
    const Polynomial& d = divisors[which];
    const Rational coeff = it->second / d.lead_coefficient();
    const Monomial mono = quotient(eliminated, d.lead_monomial());
    on_step(which, coeff, mono, eliminated);
    rem.add_scaled(d, -coeff, mono);
    // Terms above the eliminated monomial are untouched; resume just below it.
    it = rem.terms().upper_bound(eliminated);
  }
  return rem;
}

}  // namespace

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder order,
                      const DivisionStepObserver& observer) {
  check_divisors(f, divisors);
  const auto ds = sorted_under(divisors, order);
  DivisionResult result;
  result.quotients.assign(ds.size(), Polynomial(f.nvars(), order));
  result.remainder = run_division(f, ds, order,
                                  [&](std::size_t i, const Rational& c, const Monomial& mono, const Monomial& m) {
                                    if (observer) observer(m);
                                    result.quotients[i].add_term(mono, c);
                                  });
  return result;
}

Polynomial remainder(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder order) {
  check_divisors(f, divisors);
  return run_division(f, sorted_under(divisors, order), order,
                      [](std::size_t, const Rational&, const Monomial&, const Monomial&) {});
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  const auto [cf, mf] = leading_term(f, order);
  const auto [cg, mg] = leading_term(g, order);
  const Monomial l = lcm(mf, mg);
  Polynomial s(f.nvars(), order);
  s.add_scaled(f, 1 / cf, quotient(l, mf));
  s.add_scaled(g, -1 / cg, quotient(l, mg));
  return s;
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, MonomialOrder order) {
  GroebnerBasis gb;
  gb.order = order;
  for (const auto& g : generators) {
    if (!g.is_zero()) gb.generators.push_back((g.order() == order ? g : g.with_order(order)).monic());
  }
  auto& basis = gb.generators;
  if (basis.empty()) return gb;

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
  }
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    // Normal strategy: smallest lcm of leading monomials first.
    auto chosen = pending.begin();
    Monomial chosen_lcm = lcm(basis[chosen->first].lead_monomial(), basis[chosen->second].lead_monomial());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm(basis[it->first].lead_monomial(), basis[it->second].lead_monomial());
      if (compare(l, chosen_lcm, order) < 0) {
        chosen = it;
        chosen_lcm = std::move(l);
      }
    }
    const auto [i, j] = *chosen;
    pending.erase(chosen);

    const Monomial& li = basis[i].lead_monomial();
    const Monomial& lj = basis[j].lead_monomial();
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = divides(basis[k].lead_monomial(), chosen_lcm) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;

    Polynomial s = remainder(s_polynomial(basis[i], basis[j], order), basis, order);
    if (s.is_zero()) continue;
    basis.push_back(s.monic());
    const std::size_t t = basis.size() - 1;
    for (std::size_t k = 0; k < t; ++k) pending.emplace(k, t);
  }
  return gb;
}

namespace {

GroebnerBasis reduce_minimal(const GroebnerBasis& input) {
  GroebnerBasis out;
  out.order = input.order;
  out.reduced = true;
  const auto gens = sorted_under(input.generators, input.order);

  // Drop generators whose leading monomial is divisible by another's; among
  // equal leading monomials the first survives.
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    if (gens[a].is_zero()) continue;
    bool redundant = false;
    for (std::size_t b = 0; b < gens.size() && !redundant; ++b) {
      if (a == b || gens[b].is_zero()) continue;
      const Monomial& la = gens[a].lead_monomial();
      const Monomial& lb = gens[b].lead_monomial();
      redundant = divides(lb, la) && (la != lb || b < a);
    }
    if (!redundant) minimal.push_back(gens[a].monic());
  }

  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t b = 0; b < minimal.size(); ++b) {
      if (b != a) others.push_back(minimal[b]);
    }
    if (!others.empty()) minimal[a] = remainder(minimal[a], others, input.order);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& p, const Polynomial& q) {
    return compare(p.lead_monomial(), q.lead_monomial(), input.order) < 0;
  });
  out.generators = std::move(minimal);
  return out;
}

}  // namespace

GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
  return reduce_minimal(is_groebner(basis) ? basis : buchberger(basis.generators, basis.order));
}

GroebnerBasis groebner_basis(std::span<const Polynomial> generators, MonomialOrder order) {
  return reduce_minimal(buchberger(generators, order));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (basis.generators.empty()) return f.order() == basis.order ? f : f.with_order(basis.order);
  return remainder(f, basis.generators, basis.order);
}

bool contains(const GroebnerBasis& basis, const Polynomial& f) { return normal_form(f, basis).is_zero(); }

bool is_groebner(const GroebnerBasis& basis) {
  const auto& g = basis.generators;
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!remainder(s_polynomial(g[i], g[j], basis.order), g, basis.order).is_zero()) return false;
    }
  }
  return true;
}

bool has_only_origin_zero(const GroebnerBasis& basis) {
  const std::size_t n = basis.nvars();
  if (basis.generators.empty()) return false;
  std::vector<bool> found(n, false);
  for (const auto& g : basis.generators) {
    const Monomial& m = leading_term(g, basis.order).second;
    if (m.is_one()) return true;
    std::size_t support = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) {
        ++support;
        var = i;
      }
    }
    if (support == 1) found[var] = true;
  }
  return std::all_of(found.begin(), found.end(), [](bool b) { return b; });
}

bool has_only_origin_zero(std::span<const Polynomial> generators, MonomialOrder order) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!generators[i].is_homogeneous()) {
      throw ValidationError("generator " + std::to_string(i + 1) + " is not homogeneous");
    }
  }
  return has_only_origin_zero(groebner_basis(generators, order));
}

}  // namespace jkres
