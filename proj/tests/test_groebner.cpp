#include <doctest.h>

#include "jkres/errors.hpp"
#include "jkres/groebner.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const auto lex = MonomialOrder::lex;
const auto grevlex = MonomialOrder::grevlex;

std::vector<Polynomial> polys(std::initializer_list<const char*> texts, std::size_t n,
                              MonomialOrder order = MonomialOrder::grevlex) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(poly(t, n, order));
  return out;
}

bool remainder_is_reduced(const Polynomial& rem, std::span<const Polynomial> divisors, MonomialOrder order) {
  for (const auto& [m, c] : rem.terms()) {
    for (const auto& f : divisors) {
      if (divides(leading_term(f, order).second, m)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("division examples") {
  const auto F = polys({"x1*x2 - 1", "x2^2 - 1"}, 2, lex);
  const auto res = divide(poly("x1^2*x2 + x1*x2^2 + x2^2", 2, lex), F, lex);
  CHECK(res.remainder == poly("x1 + x2 + 1", 2));
  CHECK(res.quotients[0] == poly("x1 + x2", 2));
  CHECK(res.quotients[1] == poly("1", 2));

  const auto G = polys({"x1 + x2"}, 2);
  const auto r2 = divide(poly("x1 + x2", 2), G, grevlex);
  CHECK(r2.quotients[0] == Polynomial::constant(2, 1));
  CHECK(r2.remainder.is_zero());

  const auto H = polys({"x2"}, 2);
  CHECK(remainder(poly("x1", 2), H, grevlex) == poly("x1", 2));
  CHECK_THROWS_AS(divide(poly("x1", 2), std::span<const Polynomial>{}, grevlex), ValidationError);
}

TEST_CASE("division identity, reduced remainder and strict descent") {
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = uniform(rng, 1, 3);
    const auto order = static_cast<MonomialOrder>(uniform(rng, 0, 2));
    const Polynomial f = random_sparse(rng, r, 4, uniform(rng, 1, 6), order);
    std::vector<Polynomial> F;
    const long k = uniform(rng, 1, 3);
    while (static_cast<long>(F.size()) < k) {
      Polynomial g = random_sparse(rng, r, 3, uniform(rng, 1, 3), order);
      if (!g.is_zero()) F.push_back(g);
    }
    std::optional<Monomial> last;
    bool descending = true;
    const auto res = divide(f, F, order, [&](const Monomial& m) {
      if (last && compare(m, *last, order) >= 0) descending = false;
      last = m;
    });
    Polynomial sum = res.remainder;
    for (std::size_t i = 0; i < F.size(); ++i) sum += res.quotients[i] * F[i];
    CHECK(sum == f);
    CHECK(remainder_is_reduced(res.remainder, F, order));
    CHECK(descending);
    CHECK(remainder(f, F, order) == res.remainder);
  }
}

TEST_CASE("buchberger examples") {
  const auto a = groebner_basis(polys({"x1 + x2", "x1 - x2"}, 2, lex), lex);
  CHECK(a.generators == polys({"x2", "x1"}, 2, lex));
  CHECK(a.reduced);
  CHECK(groebner_basis(polys({"x1"}, 2), grevlex).generators == polys({"x1"}, 2));
  const auto b = groebner_basis(polys({"x1", "x1*x2 + x2^2"}, 2), grevlex);
  CHECK(b.generators == polys({"x1", "x2^2"}, 2));
  CHECK(s_polynomial(poly("x1", 2), poly("x1*x2 + x2^2", 2), grevlex) == poly("-x2^2", 2));
  CHECK(groebner_basis(polys({"0"}, 2), grevlex).generators.empty());
}

TEST_CASE("reduction of a basis") {
  GroebnerBasis g{polys({"x1", "x1 + x2"}, 2, lex), lex, false};
  CHECK(reduce_basis(g).generators == polys({"x2", "x1"}, 2, lex));
  GroebnerBasis h{polys({"2*x1"}, 2), grevlex, false};
  CHECK(reduce_basis(h).generators == polys({"x1"}, 2));
}

TEST_CASE("normal forms and membership") {
  const auto gb = groebner_basis(polys({"x1", "x2*(x1 + x2)"}, 2), grevlex);
  CHECK(gb.generators == polys({"x1", "x2^2"}, 2));
  CHECK(normal_form(poly("x1*(x1 + x2)", 2), gb).is_zero());
  CHECK(normal_form(poly("x2", 2), gb) == poly("x2", 2));
  CHECK(normal_form(poly("x2^2 + x2", 2), gb) == poly("x2", 2));
  CHECK(contains(gb, poly("x1*(x2^3 + 7)", 2)));
  CHECK_FALSE(contains(gb, poly("x2", 2)));
  CHECK(contains(gb, Polynomial(2)));
}

TEST_CASE("origin as the only common zero") {
  CHECK(has_only_origin_zero(polys({"x1^2", "x2"}, 2)));
  CHECK_FALSE(has_only_origin_zero(polys({"x1*x2"}, 2)));
  CHECK_FALSE(has_only_origin_zero(polys({"x1 + x2"}, 2)));
  CHECK(has_only_origin_zero(polys({"x1 + x2", "x1 - x2"}, 2)));
  CHECK_FALSE(has_only_origin_zero(polys({"x1^2 - x2^2", "x1*x2 - x2^2"}, 2)));
  CHECK_THROWS_AS(has_only_origin_zero(polys({"x1 + 1", "x2"}, 2)), ValidationError);
}

TEST_CASE("computed bases are Groebner, reduced and canonical") {
  Rng rng(43);
  for (int t = 0; t < 80; ++t) {
    const std::size_t r = uniform(rng, 1, 3);
    const auto order = static_cast<MonomialOrder>(uniform(rng, 0, 2));
    std::vector<Polynomial> gens;
    const long k = uniform(rng, 1, 3);
    for (long i = 0; i < k; ++i) gens.push_back(random_sparse(rng, r, 3, uniform(rng, 1, 3), order));
    const GroebnerBasis gb = groebner_basis(gens, order);
    CHECK(is_groebner(gb));
    for (std::size_t i = 0; i < gb.generators.size(); ++i) {
      const auto& g = gb.generators[i];
      CHECK(leading_term(g, order).first == 1);
      for (std::size_t j = 0; j < gb.generators.size(); ++j) {
        if (i == j) continue;
        CHECK(remainder(s_polynomial(g, gb.generators[j], order), gb.generators, order).is_zero());
        const Monomial lj = leading_term(gb.generators[j], order).second;
        for (const auto& [m, c] : g.terms()) CHECK_FALSE(divides(lj, m));
      }
    }
    for (const auto& g : gens) CHECK(contains(gb, g));
    auto shuffled = gens;
    shuffle(shuffled, rng);
    CHECK(groebner_basis(shuffled, order) == gb);

    const Polynomial f = random_sparse(rng, r, 4, 4, order);
    const Polynomial nf = normal_form(f, gb);
    CHECK(normal_form(nf, gb) == nf);
    CHECK(contains(gb, f - nf));
    GroebnerBasis permuted = gb;
    shuffle(permuted.generators, rng);
    CHECK(remainder(f, permuted.generators, order) == nf);
  }
}

TEST_CASE("leading monomials count the dimension of each graded slice") {
  Rng rng(47);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = uniform(rng, 1, 3);
    std::vector<Polynomial> gens;
    const long k = uniform(rng, 1, 3);
    for (long i = 0; i < k; ++i) {
      Polynomial g = random_homogeneous(rng, r, uniform(rng, 1, 3), -3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    const GroebnerBasis gb = groebner_basis(gens, grevlex);
    for (unsigned d = 0; d <= 5; ++d) {
      const auto basis = monomials_of_degree(r, d);
      std::size_t in_lt = 0;
      for (const auto& m : basis) {
        bool hit = false;
        for (const auto& g : gb.generators) hit = hit || divides(g.lead_monomial(), m);
        in_lt += hit;
      }
      // Span of m * g for monomials m and generators g, as coefficient rows.
      std::vector<QVector> rows;
      for (const auto& g : gens) {
        const auto dg = *g.degree();
        if (dg > d) continue;
        for (const auto& m : monomials_of_degree(r, d - dg)) {
          Polynomial prod = g * Polynomial::term(m, 1);
          QVector row;
          for (const auto& b : basis) row.push_back(prod.coefficient(b));
          rows.push_back(row);
        }
      }
      CHECK(rank(rows) == in_lt);
    }
  }
}
