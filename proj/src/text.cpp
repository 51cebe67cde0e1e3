#include "ymps/text.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace ymps {

namespace {

constexpr unsigned long kMaxExponent = 1000000;

// Recursive-descent evaluator over the grammar
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ['^' uint]
//   base   := '(' expr ')' | int | 't'
// Integer literals are unbounded; whitespace is insignificant.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFun run() {
    RatFun value = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return value;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RatFun expr() {
    bool negate = false;
    if (!eat('+') && eat('-')) negate = true;
    RatFun acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  RatFun term() {
    RatFun acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        const std::size_t at = pos_ - 1;
        RatFun d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RatFun factor() {
    RatFun b = base();
    if (eat('^')) return b.pow(exponent());
    return b;
  }

  RatFun base() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFun inner = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (c == 't') {
      ++pos_;
      return RatFun::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFun(Rational(integer()));
    throw ParseError("expected '(', integer or 't'", pos_);
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  unsigned long exponent() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected nonnegative integer exponent", pos_);
    const std::size_t start = pos_;
    Integer e = integer();
    if (e > kMaxExponent) throw ParseError("exponent overflow", start);
    return e.get_ui();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Rational& mag, std::size_t deg, bool latex) {
  std::ostringstream out;
  const bool unit = (mag == 1);
  if (deg == 0) {
    out << to_string(mag);
    return out.str();
  }
  if (!unit) {
    out << to_string(mag);
    out << (latex ? "" : "*");
  }
  out << 't';
  if (deg > 1) {
    if (latex)
      out << "^{" << deg << '}';
    else
      out << '^' << deg;
  }
  return out.str();
}

std::string poly_text(const Poly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(p.degree()); ++k) {
    const Rational c = p.coeff(k);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    out << monomial_text(abs(c), k, latex);
  }
  return out.str();
}

}  // namespace

RatFun parse_ratfun(std::string_view text) { return Parser(text).run(); }

std::string poly_to_text(const Poly& p) { return poly_text(p, false); }

std::string poly_to_latex(const Poly& p) { return poly_text(p, true); }

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << poly_to_text(p); }

std::ostream& operator<<(std::ostream& os, const RatFun& r) {
  return os << render(r, Format::plain);
}

std::string render(const RatFun& r, Format format) {
  switch (format) {
    case Format::plain:
      if (r.den().is_one()) return poly_to_text(r.num());
      return "(" + poly_to_text(r.num()) + ")/(" + poly_to_text(r.den()) + ")";
    case Format::latex:
      if (r.den().is_one()) return poly_to_latex(r.num());
      return "\\frac{" + poly_to_latex(r.num()) + "}{" + poly_to_latex(r.den()) + "}";
    case Format::json: {
      nlohmann::json j;
      auto encode = [](const Poly& p) {
        nlohmann::json terms = nlohmann::json::array();
        for (std::size_t k = 0; k <= static_cast<std::size_t>(std::max(p.degree(), 0)); ++k) {
          const Rational c = p.coeff(k);
          if (c != 0) terms.push_back({k, to_string(c)});
        }
        return terms;
      };
      j["num"] = encode(r.num());
      j["den"] = encode(r.den());
      return j.dump();
    }
  }
  return {};
}

}  // namespace ymps
