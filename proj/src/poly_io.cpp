#include "jkres/poly_io.hpp"

#include <cctype>
#include <sstream>

#include "jkres/errors.hpp"

namespace jkres {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars, MonomialOrder order)
      : text_(text), nvars_(nvars), order_(order) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  std::string digits() {
    skip_space();
    if (!at_digit()) throw ParseError("expected a number", pos_);
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expression() {
    Polynomial sum(nvars_, order_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    for (;;) {
      Polynomial t = product();
      if (negate) {
        sum -= t;
      } else {
        sum += t;
      }
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        return sum;
      }
    }
  }

  Polynomial product() {
    Polynomial p = power();
    while (accept('*')) p *= power();
    return p;
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      const std::size_t where = pos_;
      const std::string e = digits();
      if (e.size() > 6) throw ParseError("exponent too large", where);
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (c == 'x') {
      const std::size_t where = pos_;
      ++pos_;
      if (!at_digit()) throw ParseError("expected a variable index after 'x'", pos_);
      const std::string idx = digits();
      const unsigned long k = idx.size() > 9 ? 0 : std::stoul(idx);
      if (k == 0 || k > nvars_) {
        throw ParseError("unknown variable 'x" + idx + "' (expected x1..x" + std::to_string(nvars_) + ")", where);
      }
      return Polynomial::variable(nvars_, k - 1, order_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = digits();
      Rational value{Integer(num, 10)};
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t where = pos_;
        const std::string den = digits();
        Integer d(den, 10);
        if (d == 0) throw ParseError("zero denominator", where);
        value = make_rational(Integer(num, 10), d);
      }
      return Polynomial::constant(nvars_, value, order_);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t nvars_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

std::string format_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars, MonomialOrder order) {
  return Parser(text, nvars, order).parse();
}

std::size_t max_variable_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    std::size_t k = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && k < 100000000) {
      k = k * 10 + static_cast<std::size_t>(text[j] - '0');
      ++j;
    }
    best = std::max(best, k);
  }
  return best;
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Polynomial sorted = f.order() == MonomialOrder::grevlex ? f : f.with_order(MonomialOrder::grevlex);
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    if (m.is_one()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += format_monomial(m);
    } else {
      out += to_string(mag) + "*" + format_monomial(m);
    }
  }
  return out;
}

std::string format_product(std::span<const LinearForm> forms) {
  if (forms.empty()) return "1";
  std::string out;
  for (const auto& form : forms) {
    if (!out.empty()) out += '*';
    const Polynomial p = form.to_polynomial();
    std::string text = format_polynomial(p);
    if (p.size() > 1 || text.front() == '-') {
      std::string compact;
      for (char ch : text) {
        if (ch != ' ') compact += ch;
      }
      out += "(" + compact + ")";
    } else {
      out += text;
    }
  }
  return out;
}

}  // namespace jkres
