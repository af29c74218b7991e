#include "doctest.h"

#include <random>

#include "nowicki/element.hpp"
#include "nowicki/metabelian.hpp"
#include "nowicki/random.hpp"

using namespace nowicki;

namespace {

MetaElement L(int d, int k) { return MetaElement::letter(d, k); }
MetaElement C(int d, std::vector<int> letters) { return MetaElement::commutator(d, letters); }

// Monomial over u_1..u_2d, v_1..v_2d given as (letter, index) pairs.
CommMonomial uv(int d, std::initializer_list<std::pair<char, int>> factors) {
  CommMonomial m{std::vector<int>(4 * d, 0)};
  for (const auto& [c, i] : factors) ++m.exps[(c == 'u' ? 0 : 2 * d) + i - 1];
  return m;
}

MetaElement random_meta(int d, std::mt19937_64& rng) {
  return std::get<MetaElement>(random_element(Algebra::Metabelian, d, 3, 3, rng));
}

}  // namespace

TEST_SUITE("metabelian") {
  TEST_CASE("normal form of words") {
    const int d = 2;
    const MetaElement w = meta_normalize(d, {{Rational(1), {{false, {2}}, {false, {1}}}}});
    CHECK(w == L(d, 1) * L(d, 2) + C(d, {2, 1}));
    CHECK(w == L(d, 2) * L(d, 1));

    CHECK((C(d, {2, 1}) * C(d, {4, 3})).is_zero());
    CHECK(C(d, {2, 1}) * L(d, 3) == L(d, 3) * C(d, {2, 1}) + C(d, {2, 1, 3}));
  }

  TEST_CASE("multiplication") {
    const int d = 2;
    CHECK(meta_mul(L(d, 1), L(d, 1)) == MetaElement::from_monomial(d, MetaMonomial::pure({2, 0, 0, 0})));
    CHECK(meta_mul(L(d, 2), L(d, 1)) == L(d, 1) * L(d, 2) + C(d, {2, 1}));
    CHECK(meta_mul(C(d, {2, 1}), C(d, {2, 1})).is_zero());
    CHECK(C(d, {1, 2}) == -C(d, {2, 1}));
    CHECK(C(d, {1, 1}).is_zero());
    CHECK(meta_bracket(L(d, 4), L(d, 2)) == C(d, {4, 2}));
  }

  TEST_CASE("derivation") {
    const int d = 2;
    CHECK(meta_derive(C(d, {1, 2})).is_zero());
    CHECK(meta_derive(C(d, {4, 2})) == C(d, {3, 2}) + C(d, {4, 1}));
    CHECK(meta_derive(L(d, 2) * C(d, {2, 1})) == L(d, 1) * C(d, {2, 1}));
  }

  TEST_CASE("module action of u and v") {
    const int d = 2;
    const MetaElement c = C(d, {2, 1});
    CHECK(act_uv(c, uv(d, {{'u', 3}})) == L(d, 3) * c);
    CHECK(act_uv(c, uv(d, {{'v', 3}})) == C(d, {2, 1, 3}));
    const MetaElement both = act_uv(c, uv(d, {{'u', 1}, {'v', 2}}));
    CHECK(both == L(d, 1) * C(d, {2, 1, 2}));
    CHECK(both == act_uv(act_uv(c, uv(d, {{'v', 2}})), uv(d, {{'u', 1}})));
    CHECK_THROWS_AS(act_uv(L(d, 1), uv(d, {{'u', 1}})), std::invalid_argument);
  }

  TEST_CASE("commutator tails may be reordered") {
    const int d = 2;
    CHECK(C(d, {2, 1, 3, 4}) == C(d, {2, 1, 4, 3}));
    CHECK(C(d, {3, 1, 2}) == C(d, {3, 2, 1}) + C(d, {2, 1, 3}));
  }

  TEST_CASE("random: associativity, metabelian identity, Leibniz") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
      const MetaElement f = random_meta(2, rng), g = random_meta(2, rng), h = random_meta(2, rng);
      CHECK((f * g) * h == f * (g * h));
      CHECK((meta_bracket(f, g) * meta_bracket(g, h)).is_zero());
      CHECK(meta_derive(f * g) == meta_derive(f) * g + f * meta_derive(g));
    }
  }

  TEST_CASE("basis counts in degree two") {
    // 10 ordered monomials and 6 commutators [x_i, x_j], i > j.
    std::size_t pure = 0, comm = 0;
    for (const auto& key : keys_of_degree(2, 2)) {
      pure += meta_component_basis(2, key, false).size() - meta_component_basis(2, key, true).size();
      comm += meta_component_basis(2, key, true).size();
    }
    CHECK(pure == 10);
    CHECK(comm == 6);
  }
}
