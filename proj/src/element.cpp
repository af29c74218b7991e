#include "nowicki/element.hpp"

namespace nowicki {

std::string algebra_name(Algebra a) {
  switch (a) {
    case Algebra::Commutative: return "comm";
    case Algebra::Metabelian: return "meta";
    case Algebra::MetabelianIdeal: return "meta-ideal";
    case Algebra::GrassmannVariety: return "grass";
    case Algebra::UVPolynomial: return "uv";
    case Algebra::WreathModule: return "wreath";
  }
  return "?";
}

std::optional<Algebra> algebra_from_name(const std::string& name) {
  for (auto a : {Algebra::Commutative, Algebra::Metabelian, Algebra::MetabelianIdeal, Algebra::GrassmannVariety,
                 Algebra::UVPolynomial, Algebra::WreathModule})
    if (algebra_name(a) == name) return a;
  if (name == "commutative") return Algebra::Commutative;
  if (name == "metabelian") return Algebra::Metabelian;
  if (name == "grassmann") return Algebra::GrassmannVariety;
  return std::nullopt;
}

AnyElement zero_element(Algebra a, int d) {
  switch (a) {
    case Algebra::Commutative: return CommPoly(Alphabet::x(d));
    case Algebra::UVPolynomial: return CommPoly(Alphabet::uv(d));
    case Algebra::Metabelian:
    case Algebra::MetabelianIdeal: return MetaElement(d);
    case Algebra::GrassmannVariety: return GrassElement(d);
    case Algebra::WreathModule: return WreathElement(d);
  }
  return CommPoly();
}

bool is_zero(const AnyElement& e) {
  return std::visit([](const auto& x) { return x.is_zero(); }, e);
}

AnyElement derive(const AnyElement& e) {
  return std::visit(
      [](const auto& x) -> AnyElement {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CommPoly>) return weitz_derive(x);
        else if constexpr (std::is_same_v<T, MetaElement>) return meta_derive(x);
        else if constexpr (std::is_same_v<T, GrassElement>) return grass_derive(x);
        else return wreath_derive(x);
      },
      e);
}

}  // namespace nowicki
