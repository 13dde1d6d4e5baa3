#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jkres {

/// x^a for an exponent vector a. The length is the number of variables.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

bool divides(const Monomial& divisor, const Monomial& m);
/// m / divisor; requires divides(divisor, m).
Monomial quotient(const Monomial& m, const Monomial& divisor);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

enum class MonomialOrder { lex, grlex, grevlex };

/// Three-way comparison of monomials under `order` (variable 0 is largest).
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

std::string_view to_string(MonomialOrder order);
/// Accepts "lex", "grlex" or "grevlex"; throws ValidationError otherwise.
MonomialOrder parse_order(std::string_view name);

/// Strict weak ordering that sorts monomials in descending order.
struct MonomialGreater {
  MonomialOrder order = MonomialOrder::grevlex;
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b, order) > 0; }
};

/// All monomials in `nvars` variables of total degree `degree`, in
/// descending lexicographic order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace jkres
