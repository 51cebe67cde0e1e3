#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ymps/ratfun.hpp"

namespace ymps {

enum class Format { plain, json, latex };

/// Syntax error in a rational-function expression; `position` is the
/// zero-based offset of the offending character.
struct ParseError : std::runtime_error {
  std::size_t position;

  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        position(pos) {}
};

/// Parses an expression over integers and t with +, -, *, /, ^ and
/// parentheses into an exact rational function.
RatFun parse_ratfun(std::string_view text);

std::string poly_to_text(const Poly& p);
std::string poly_to_latex(const Poly& p);

/// Renders r so that parse_ratfun(render(r, plain)) == r.
std::string render(const RatFun& r, Format format = Format::plain);

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const RatFun& r);

}  // namespace ymps
