#include "jkres/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "jkres/errors.hpp"

namespace jkres {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) out.exps_[i] = a.exps_[i] + b.exps_[i];
  return out;
}

bool divides(const Monomial& divisor, const Monomial& m) {
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (divisor[i] > m[i]) return false;
  }
  return true;
}

Monomial quotient(const Monomial& m, const Monomial& divisor) {
  Monomial out(m.nvars());
  for (std::size_t i = 0; i < m.nvars(); ++i) out[i] = m[i] - divisor[i];
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

namespace {

int compare_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::lex) return compare_lex(a, b);
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  if (order == MonomialOrder::grlex) return compare_lex(a, b);
  // grevlex: the rightmost nonzero entry of a - b is negative iff a > b.
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

std::string_view to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::lex:
      return "lex";
    case MonomialOrder::grlex:
      return "grlex";
    case MonomialOrder::grevlex:
      return "grevlex";
  }
  return "?";
}

MonomialOrder parse_order(std::string_view name) {
  if (name == "lex") return MonomialOrder::lex;
  if (name == "grlex") return MonomialOrder::grlex;
  if (name == "grevlex") return MonomialOrder::grevlex;
  throw ValidationError("unknown monomial order '" + std::string(name) + "' (expected lex, grlex or grevlex)");
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial current(nvars);
  // Recursive fill: exponent of variable i runs from the remaining degree down.
  auto fill = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == nvars) {
      current[i] = remaining;
      out.push_back(current);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      current[i] = e;
      self(self, i + 1, remaining - e);
    }
  };
  fill(fill, 0, degree);
  return out;
}

}  // namespace jkres
