#pragma once

#include <optional>
#include <string>
#include <variant>

#include "nowicki/commpoly.hpp"
#include "nowicki/grassmann.hpp"
#include "nowicki/metabelian.hpp"
#include "nowicki/wreath.hpp"

namespace nowicki {

/// Commutative: K[X_{2d}]. Metabelian: F_{2d}. MetabelianIdeal: its commutator
/// ideal F'_{2d}. GrassmannVariety: F_{2d}(G). UVPolynomial: K[U_{2d},V_{2d}].
/// WreathModule: the module part M_{2d} of W_{2d}.
enum class Algebra { Commutative, Metabelian, MetabelianIdeal, GrassmannVariety, UVPolynomial, WreathModule };

/// Short names "comm", "meta", "meta-ideal", "grass", "uv", "wreath".
std::string algebra_name(Algebra a);
std::optional<Algebra> algebra_from_name(const std::string& name);

/// Module elements travel as WreathElement with zero polynomial part.
using AnyElement = std::variant<CommPoly, MetaElement, GrassElement, WreathElement>;

AnyElement zero_element(Algebra a, int d);
bool is_zero(const AnyElement& e);
/// Applies the algebra's own derivation.
AnyElement derive(const AnyElement& e);

}  // namespace nowicki
