#include "nowicki/random.hpp"

#include "nowicki/kernel.hpp"

namespace nowicki {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  int n = 0;
  while (n == 0) n = num(rng);
  Rational q(n, den(rng));
  q.canonicalize();
  return q;
}

AnyElement random_element(Algebra a, int d, int max_degree, int max_terms, std::mt19937_64& rng) {
  const int low = a == Algebra::MetabelianIdeal ? 2 : a == Algebra::WreathModule ? 1 : 0;
  AnyElement out = zero_element(a, d);
  if (max_degree < low || max_terms < 1) return out;
  std::uniform_int_distribution<int> degree(low, max_degree), count(1, max_terms);
  const int width = key_width(a, d);
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    const int deg = degree(rng);
    const auto keys = keys_of_degree(width, deg);
    const ComponentKey& key = keys[std::uniform_int_distribution<std::size_t>(0, keys.size() - 1)(rng)];
    const auto basis = component_basis(a, d, key);
    if (basis.empty()) continue;
    const AnyElement& pick = basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)];
    const Rational c = random_rational(rng);
    std::visit(
        [&](auto& acc) {
          using T = std::decay_t<decltype(acc)>;
          T term = std::get<T>(pick);
          term *= c;
          acc += term;
        },
        out);
  }
  if (a == Algebra::WreathModule) {
    // polynomial part: a few monomials in Y
    auto& w = std::get<WreathElement>(out);
    CommPoly poly(Alphabet::y(d));
    std::uniform_int_distribution<int> slot(0, 2 * d - 1), terms(0, 2);
    for (int t = terms(rng); t > 0; --t) {
      CommMonomial m{std::vector<int>(2 * d, 0)};
      for (int k = degree(rng); k > 0; --k) m.exps[slot(rng)] += 1;
      poly.add_term(m, random_rational(rng));
    }
    w = WreathElement(poly, w.module());
  }
  return out;
}

}  // namespace nowicki
