#include <doctest.h>

#include "jkres/errors.hpp"
#include "jkres/poly_io.hpp"
#include "jkres/polynomial.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const MonomialOrder all_orders[] = {MonomialOrder::lex, MonomialOrder::grlex, MonomialOrder::grevlex};

Monomial mono(std::initializer_list<Monomial::Exponent> e) { return Monomial(std::vector<Monomial::Exponent>(e)); }

}  // namespace

TEST_CASE("arithmetic") {
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1);
  CHECK((x + y) * (x - y) == poly("x1^2 - x2^2", 2));
  const Polynomial f = poly("3*x1^2*x2 - 1/2*x2 + 4", 2);
  CHECK((f + Rational(-1) * f).is_zero());
  CHECK(x * y * (x + y) == poly("x1^2*x2 + x1*x2^2", 2));
  CHECK_THROWS_AS(x + Polynomial::variable(3, 0), DimensionError);
  CHECK(poly("x1 + x2", 2).pow(3) == poly("x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3", 2));
  CHECK(poly("x1^3*x2 + x2", 2).derivative(0) == poly("3*x1^2*x2", 2));
}

TEST_CASE("no zero coefficients are stored") {
  Polynomial p = poly("x1 + x2", 2);
  p.add_term(mono({1, 0}), -1);
  CHECK(p.size() == 1);
  CHECK(p == Polynomial::variable(2, 1));
}

TEST_CASE("leading terms") {
  const auto lex = MonomialOrder::lex;
  CHECK(leading_term(poly("x1^2 + x1*x2 + x2^2", 2), lex) == std::pair(Rational(1), mono({2, 0})));
  const Polynomial f = poly("2*x1*x2^2 + x1^2", 2);
  CHECK(leading_term(f, lex) == std::pair(Rational(1), mono({2, 0})));
  CHECK(leading_term(f, MonomialOrder::grlex) == std::pair(Rational(2), mono({1, 2})));
  CHECK(leading_term(poly("x1*x2 + x2^2", 2), MonomialOrder::grevlex) == std::pair(Rational(1), mono({1, 1})));
  CHECK_THROWS_AS(leading_term(Polynomial(2), lex), DegreeError);
}

TEST_CASE("grevlex breaks ties on the last variable") {
  // x1*x3 vs x2^2: the last exponent of x1*x3 is larger, so it is smaller.
  CHECK(compare(mono({1, 0, 1}), mono({0, 2, 0}), MonomialOrder::grevlex) < 0);
  CHECK(compare(mono({1, 0, 1}), mono({0, 2, 0}), MonomialOrder::grlex) > 0);
  CHECK(compare(mono({0, 3, 0}), mono({1, 0, 0}), MonomialOrder::lex) < 0);
}

TEST_CASE("monomial order axioms") {
  Rng rng(17);
  auto rand_mono = [&](std::size_t n) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = uniform(rng, 0, 3);
    return m;
  };
  for (auto order : all_orders) {
    for (int t = 0; t < 300; ++t) {
      const std::size_t n = uniform(rng, 1, 4);
      const Monomial a = rand_mono(n), b = rand_mono(n), c = rand_mono(n);
      const int ab = compare(a, b, order);
      CHECK(ab == -compare(b, a, order));
      CHECK((ab == 0) == (a == b));
      CHECK(compare(a * c, b * c, order) == ab);
      if (divides(a, b)) CHECK(compare(a, b, order) <= 0);
      if (ab < 0 && compare(b, c, order) < 0) CHECK(compare(a, c, order) < 0);
      CHECK(compare(Monomial(n), a, order) <= 0);
    }
  }
}

TEST_CASE("homogeneous components") {
  CHECK(homogeneous_components(Polynomial(2)).empty());
  const auto parts = homogeneous_components(poly("x1*x2 + x1 + x2", 2));
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(2) == poly("x1*x2", 2));
  CHECK(parts.at(1) == poly("x1 + x2", 2));
  const auto q = homogeneous_components(poly("x1^2 + x1 + 1", 1));
  CHECK(q.size() == 3);
  CHECK(q.at(0) == Polynomial::constant(1, 1));
}

TEST_CASE("homogenization") {
  // The fresh variable goes to position 0, so x0 is x1 in the text.
  CHECK(homogenize(poly("x1^2 + x1 + 1", 1), 0, 2) == poly("x2^2 + x2*x1 + x1^2", 2));
  CHECK(homogenize(Polynomial::constant(1, 1), 0, 3) == poly("x1^3", 2));
  CHECK(homogenize(poly("x1 + x2", 2), 0, 1) == poly("x2 + x3", 3));
  CHECK_THROWS_AS(homogenize(poly("x1^3", 1), 0, 2), DegreeError);

  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = uniform(rng, 1, 3);
    const Polynomial f = random_polynomial(rng, n, 3);
    if (f.is_zero()) continue;
    const std::size_t pos = uniform(rng, 0, n);
    const auto d = *f.degree() + uniform(rng, 0, 2);
    const Polynomial h = homogenize(f, pos, d);
    CHECK(h.is_homogeneous());
    CHECK(specialize(h, pos, 1) == f);
  }
}

TEST_CASE("euler split") {
  const auto a = euler_split(poly("x1^2 + x1*x2", 2));
  CHECK(a[0] == poly("x1 + 1/2*x2", 2));
  CHECK(a[1] == poly("1/2*x1", 2));
  const auto b = euler_split(poly("x1", 2));
  CHECK(b[0] == Polynomial::constant(2, 1));
  CHECK(b[1].is_zero());
  const auto c = euler_split(poly("x1*x2", 2));
  CHECK(c[0] == poly("1/2*x2", 2));
  CHECK(c[1] == poly("1/2*x1", 2));
  CHECK_THROWS_AS(euler_split(poly("x1 + 1", 2)), DegreeError);

  Rng rng(29);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = uniform(rng, 1, 3);
    const auto d = static_cast<unsigned>(uniform(rng, 1, 4));
    const Polynomial p = random_homogeneous(rng, r, d);
    if (p.is_zero()) continue;
    const auto split = euler_split(p);
    Polynomial sum(r);
    for (std::size_t j = 0; j < r; ++j) sum += split[j] * Polynomial::variable(r, j);
    CHECK(sum == p);
  }
}

TEST_CASE("substitution into linear forms") {
  const std::vector<LinearForm> id{LinearForm(qvec({1, 0})), LinearForm(qvec({0, 1}))};
  CHECK(substitute_linear_forms(poly("x1", 2), id) == poly("x1", 2));
  const std::vector<LinearForm> b{LinearForm(qvec({1, 0})), LinearForm(qvec({1, 1}))};
  CHECK(substitute_linear_forms(poly("x2", 2), b) == poly("x2 - x1", 2));
  CHECK(substitute_linear_forms(poly("x1 + x2", 2), b) == poly("x2", 2));
  const std::vector<LinearForm> dep{LinearForm(qvec({1, 1})), LinearForm(qvec({2, 2}))};
  CHECK_THROWS_AS(substitute_linear_forms(poly("x1", 2), dep), RankError);

  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = uniform(rng, 1, 3);
    std::vector<LinearForm> forms;
    std::vector<QVector> vs;
    for (std::size_t i = 0; i < r; ++i) vs.push_back(random_vector(rng, r, -3, 3));
    if (rank(vs) != r) continue;
    std::vector<Polynomial> images;
    for (const auto& v : vs) {
      forms.emplace_back(v);
      images.push_back(forms.back().to_polynomial());
    }
    const Polynomial f = random_polynomial(rng, r, 3);
    CHECK(compose(substitute_linear_forms(f, forms), images) == f);
  }
}

TEST_CASE("linear forms round trip") {
  const LinearForm a(qvec({2, 0, -1}));
  CHECK(LinearForm::from_polynomial(a.to_polynomial()) == a);
  CHECK(a(qvec({1, 1, 1})) == 1);
  CHECK_THROWS_AS(LinearForm::from_polynomial(poly("x1^2", 2)), DegreeError);
}

TEST_CASE("parsing and formatting") {
  const Polynomial p = poly("x1^2*x2 + 3/2*x2", 2);
  CHECK(p.size() == 2);
  CHECK(p.coefficient(mono({2, 1})) == 1);
  CHECK(p.coefficient(mono({0, 1})) == Rational(3, 2));
  CHECK(poly("0", 3).is_zero());
  CHECK(format_polynomial(poly("x1^2 - x2^2", 2)) == "x1^2 - x2^2");
  CHECK(format_polynomial(Polynomial(2)) == "0");
  CHECK(format_polynomial(poly("-x2 + 2/3 - x1^1", 2)) == "-x1 - x2 + 2/3");
  CHECK(poly(" x1 * x2 -  x2*x1 ", 2).is_zero());
  CHECK(poly("2*(x1 + x2)^2", 2) == poly("2*x1^2 + 4*x1*x2 + 2*x2^2", 2));
  CHECK_THROWS_AS(poly("x3", 2), ParseError);
  CHECK_THROWS_AS(poly("x1 +", 2), ParseError);
  CHECK_THROWS_AS(poly("x1^", 2), ParseError);
  CHECK_THROWS_AS(poly("1/0", 2), ParseError);
  CHECK(max_variable_index("x12 + x3") == 12);

  Rng rng(37);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = uniform(rng, 1, 4);
    const Polynomial f = random_polynomial(rng, r, 3) * make_rational(1, uniform(rng, 1, 5));
    CHECK(poly(format_polynomial(f).c_str(), r) == f);
  }

  const std::vector<LinearForm> forms{LinearForm(qvec({0, 1})), LinearForm(qvec({1, 1})), LinearForm(qvec({-1, 0}))};
  CHECK(format_product(forms) == "x2*(x1+x2)*(-x1)");
  CHECK(poly(format_product(forms).c_str(), 2) == product(forms, 2));
  CHECK(format_product(std::span<const LinearForm>{}) == "1");
}
