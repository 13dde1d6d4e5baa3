#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "jkres/arrangement.hpp"
#include "jkres/combinatorics.hpp"
#include "jkres/groebner.hpp"
#include "jkres/poly_io.hpp"
#include "jkres/polynomial.hpp"

namespace testing {

using namespace jkres;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Polynomial poly(const char* text, std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex) {
  return parse_polynomial(text, nvars, order);
}

inline QVector qvec(std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Configuration config_of(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<QVector> vs;
  for (const auto& row : rows) vs.push_back(qvec(row));
  return Configuration::from_vectors(vs);
}

inline QVector random_vector(Rng& rng, std::size_t r, long lo, long hi) {
  QVector v(r);
  do {
    for (auto& x : v) x = uniform(rng, lo, hi);
  } while (is_zero(v));
  return v;
}

// Random forms flipped onto the positive side of a random xi, so the
// configuration is polarized by construction.
inline Configuration random_polarized(Rng& rng, std::size_t r, std::size_t n, bool spanning = true) {
  for (;;) {
    QVector xi(r);
    for (auto& x : xi) {
      do x = uniform(rng, -3, 3);
      while (x == 0);
    }
    std::vector<QVector> vs;
    while (vs.size() < n) {
      QVector v = random_vector(rng, r, -3, 3);
      const Rational s = dot(v, xi);
      if (s == 0) continue;
      if (s < 0)
        for (auto& x : v) x = -x;
      vs.push_back(std::move(v));
    }
    if (spanning && rank(vs) != r) continue;
    return Configuration::from_vectors(vs);
  }
}

// Positive combination of the forms, perturbed by a small rational, kept
// only when regular.
inline QVector random_regular_epsilon(Rng& rng, const Configuration& config) {
  const std::size_t r = config.dim();
  for (;;) {
    QVector eps(r, 0);
    for (std::size_t i = 0; i < config.size(); ++i) {
      const long c = uniform(rng, 0, 4);
      for (std::size_t j = 0; j < r; ++j) eps[j] += c * config.vector(i)[j];
    }
    for (auto& x : eps) x += make_rational(uniform(rng, -2, 2), uniform(rng, 3, 7));
    if (!is_zero(eps) && is_regular(config, eps)) return eps;
  }
}

inline Polynomial random_homogeneous(Rng& rng, std::size_t nvars, unsigned degree, long lo = -5, long hi = 5,
                                     MonomialOrder order = MonomialOrder::grevlex) {
  Polynomial p(nvars, order);
  for (const auto& m : monomials_of_degree(nvars, degree)) {
    if (uniform(rng, 0, 2) == 0) continue;
    p.add_term(m, uniform(rng, lo, hi));
  }
  return p;
}

inline Polynomial random_polynomial(Rng& rng, std::size_t nvars, unsigned max_degree, long lo = -5, long hi = 5,
                                    MonomialOrder order = MonomialOrder::grevlex) {
  Polynomial p(nvars, order);
  for (unsigned d = 0; d <= max_degree; ++d) p += random_homogeneous(rng, nvars, d, lo, hi, order);
  return p;
}

inline Polynomial random_sparse(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t terms,
                                MonomialOrder order = MonomialOrder::grevlex) {
  Polynomial p(nvars, order);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(nvars);
    const long d = uniform(rng, 0, max_degree);
    for (long k = 0; k < d; ++k) m[uniform(rng, 0, static_cast<long>(nvars) - 1)] += 1;
    long c;
    do c = uniform(rng, -4, 4);
    while (c == 0);
    p.add_term(m, c);
  }
  return p;
}

// Random zero-dimensional homogeneous system of r forms in r variables.
inline std::vector<Polynomial> random_isolated_system(Rng& rng, std::size_t r, unsigned max_degree) {
  for (;;) {
    std::vector<Polynomial> sys;
    for (std::size_t i = 0; i < r; ++i) {
      const auto d = static_cast<unsigned>(uniform(rng, 1, max_degree));
      Polynomial p = random_homogeneous(rng, r, d, -3, 3);
      if (p.is_zero()) break;
      sys.push_back(std::move(p));
    }
    if (sys.size() == r && has_only_origin_zero(sys)) return sys;
  }
}

// Greedy splitting: each monomial goes to its largest-index variable.
inline std::vector<std::vector<Polynomial>> greedy_split(std::span<const Polynomial> system) {
  const std::size_t r = system.front().nvars();
  std::vector<std::vector<Polynomial>> a(system.size(), std::vector<Polynomial>(r, Polynomial(r)));
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (const auto& [m, c] : system[i].terms()) {
      std::size_t j = r;
      while (m[j - 1] == 0) --j;
      --j;
      Monomial rest = m;
      rest[j] -= 1;
      a[i][j].add_term(rest, c);
    }
  }
  return a;
}

inline IndexSet all_indices(std::size_t n) {
  IndexSet s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  return s;
}

// Caratheodory: epsilon is in the closed cone of `subset` iff it is a
// nonnegative combination of some independent part of it.
inline bool in_cone(const Configuration& config, const IndexSet& subset, const QVector& eps) {
  bool found = false;
  for (std::size_t k = 1; k <= std::min(subset.size(), config.dim()) && !found; ++k) {
    for_each_combination(subset.size(), k, [&](const IndexSet& pick) {
      IndexSet t;
      for (std::size_t i : pick) t.push_back(subset[i]);
      const auto vs = config.vectors(t);
      if (rank(vs) != k) return true;
      const QMatrix m = QMatrix::from_columns(vs);
      const auto c = solve(m, eps);
      if (!c || m * *c != eps) return true;
      found = std::all_of(c->begin(), c->end(), [](const Rational& x) { return x >= 0; });
      return !found;
    });
  }
  return found;
}

// Products over every J whose complement cone misses epsilon.
inline std::vector<Polynomial> cone_complement_generators(const Configuration& config, const QVector& eps) {
  const std::size_t n = config.size();
  std::vector<Polynomial> gens;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    IndexSet j, rest;
    for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? j : rest).push_back(i);
    if (!in_cone(config, rest, eps)) gens.push_back(config.product_of(j));
  }
  return gens;
}

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  std::shuffle(v.begin(), v.end(), rng);
}

}  // namespace testing
