#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nowicki/constants.hpp"
#include "nowicki/element.hpp"

namespace nowicki {

/// Syntax or range error; position is a 0-based byte offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (whitespace-insensitive):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := rational ['*' factor ('*' factor)*] | [rational ['*']] factor ('*' factor)*
///   factor := var | var '^' nat | '[' var (',' var)+ ']'
///   var    := ('x'|'y'|'u'|'v'|'a') nat
/// Letters per algebra: comm and meta use x_1..x_{2d}, uv uses u and v,
/// grass uses x_1..x_d and y_1..y_d, wreath uses y, a (1..2d) with u, v
/// coefficients on module terms.
AnyElement parse(std::string_view text, Algebra algebra, int d);

/// Canonical text in the basis order; "0" for zero. A metabelian commutator
/// term with negative coefficient is printed with its head swapped.
std::string render(const AnyElement& e);

/// The algebra an element naturally belongs to (Metabelian for MetaElement).
Algebra algebra_of(const AnyElement& e);

/// JSON schema violation; pointer is an RFC 6901 path such as "/terms/2/coeff".
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& message, std::string pointer);
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// {"algebra", "d", "terms": [{"coeff": "p/q", "exponents": [...], "comm": [[...]]}]}.
/// comm: x, uv: exponents over the alphabet, comm empty. meta: exponents of
/// the ordered prefix, comm holds the commutator letters. grass: exponents
/// over x_1, y_1, ..., x_d, y_d, comm holds the position pairs of the block.
/// wreath: polynomial terms have exponents over y and comm []; module terms
/// have exponents over u_1..u_{2d}, v_1..v_{2d} and comm [[k]] for a_k.
std::string to_json(const AnyElement& e, Algebra algebra, int indent = -1);
std::string to_json(const AnyElement& e, int indent = -1);

struct JsonElement {
  Algebra algebra;
  int d;
  AnyElement element;
};
JsonElement from_json(std::string_view document);

/// Product of u(j), v(i), alpha(p,q), beta(p,q), gamma(p,q) joined by '*'.
/// Indices are checked against d.
std::vector<ConstGen> parse_const_product(std::string_view text, int d);

}  // namespace nowicki
