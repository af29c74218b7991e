#include "doctest.h"

#include <random>

#include "nowicki/constants.hpp"
#include "nowicki/wreath.hpp"
#include "oracle.hpp"

using namespace nowicki;

namespace {

CommPoly u(int d, int k) { return uvar(d, k); }
CommPoly v(int d, int k) { return vvar(d, k); }
ModuleElement A(int d, int k, const CommPoly& c) { return ModuleElement::generator(d, k, c); }

std::vector<ConstGen> all_gens(int d) {
  std::vector<ConstGen> out;
  for (int p = 1; p <= d; ++p) {
    out.push_back(ConstGen::u(p));
    out.push_back(ConstGen::v(p));
    for (int q = 1; q <= d; ++q) {
      if (p < q) out.push_back(ConstGen::alpha(p, q));
      if (p < q) out.push_back(ConstGen::beta(p, q));
      out.push_back(ConstGen::gamma(p, q));
    }
  }
  return out;
}

CommPoly expand_combination(const Combination<CanonicalMonomial>& c, int d) {
  CommPoly out(Alphabet::uv(d));
  for (const auto& [m, coeff] : c) out += expand(m.gens, d) * coeff;
  return out;
}

}  // namespace

TEST_SUITE("constants") {
  TEST_CASE("generator polynomials") {
    CHECK(expand(ConstGen::alpha(1, 2), 2) == u(2, 1) * u(2, 4) - u(2, 2) * u(2, 3));
    CHECK(expand(ConstGen::beta(1, 2), 2) == v(2, 1) * v(2, 4) - v(2, 2) * v(2, 3));
    CHECK(expand(ConstGen::gamma(1, 1), 1) == u(1, 1) * v(1, 2) - u(1, 2) * v(1, 1));
    CHECK(expand(ConstGen::u(2), 2) == u(2, 3));
    CHECK(expand(ConstGen::v(1), 2) == v(2, 1));
    CHECK(w_element(1, 1, 1) == A(1, 1, v(1, 2)) - A(1, 2, v(1, 1)));
    for (const auto& g : all_gens(3)) CHECK(weitz_derive(expand(g, 3)).is_zero());
  }

  TEST_CASE("relation examples") {
    CHECK(verify_relation(RelationId::R1, {1, 2, 3, 4}, 4).is_zero());
    CHECK(verify_relation(RelationId::S1, {1, 2, 3}, 3).is_zero());
    CHECK(verify_relation(RelationId::R, {1, 1, 2, 3}, 3).is_zero());
  }

  TEST_CASE("every admissible relation vanishes for d <= 3") {
    for (int d = 1; d <= 3; ++d)
      for (RelationId id : all_relations()) {
        if (id == RelationId::SLiteral) continue;
        for (const auto& idx : admissible_indices(id, d)) CHECK(verify_relation(id, idx, d).is_zero());
      }
  }

  TEST_CASE("literal reading of S does not vanish") {
    const auto idx = admissible_indices(RelationId::SLiteral, 2);
    REQUIRE_FALSE(idx.empty());
    std::size_t nonzero = 0;
    for (const auto& i : idx) nonzero += !verify_relation(RelationId::SLiteral, i, 2).is_zero();
    CHECK(nonzero > 0);
  }

  TEST_CASE("intersection and covering") {
    CHECK(intersects(ConstGen::alpha(1, 3), ConstGen::alpha(2, 4), 4));
    CHECK_FALSE(intersects(ConstGen::alpha(1, 4), ConstGen::alpha(2, 3), 4));
    CHECK_FALSE(intersects(ConstGen::alpha(1, 2), ConstGen::alpha(3, 4), 4));
    CHECK(covers(ConstGen::alpha(1, 3), ConstGen::u(2), 3));
    CHECK_FALSE(covers(ConstGen::alpha(1, 3), ConstGen::u(3), 3));
    // gamma(p,q) spans (p, q+d) and covers v(i) at i + d.
    CHECK(covers(ConstGen::gamma(1, 2), ConstGen::v(1), 2));
    CHECK(interval_of(ConstGen::beta(1, 2), 2) == std::pair{3, 4});
  }

  TEST_CASE("canonical basis examples") {
    const auto b1 = canonical_basis(1, {{1, 0}, 0});
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].gens == std::vector{ConstGen::u(1)});

    const auto with_even = canonical_basis(2, {{1, 1, 0, 0}, 1});
    REQUIRE(with_even.size() == 1);
    CHECK(with_even[0].gens == std::vector{ConstGen::alpha(1, 2)});

    const auto odd_only = canonical_basis(2, {{1, 1, 0, 0}, 0});
    REQUIRE(odd_only.size() == 1);
    CHECK(odd_only[0].gens == (std::vector{ConstGen::u(1), ConstGen::u(2)}));
  }

  TEST_CASE("canonical counts match the kernel dimension on U, V for d = 2, degree <= 3") {
    const int d = 2;
    for (int n = 0; n <= 3; ++n)
      for (const auto& [g, dim] : oracle::kernel_dims(4 * d, n)) {
        const ComponentKey key{g.pairs, g.even};
        const auto basis = canonical_basis(d, key);
        CHECK_MESSAGE(basis.size() == dim, to_string(key));
        std::vector<std::map<CommMonomial, Rational>> family;
        for (const auto& m : basis) {
          CHECK(is_canonical(m.gens, d));
          family.push_back(expand(m.gens, d).terms().terms());
        }
        CHECK(oracle::dense_rank(oracle::to_rows(family)) == basis.size());
      }
  }

  TEST_CASE("straightening") {
    const auto r1 = straighten({ConstGen::alpha(1, 3), ConstGen::alpha(2, 4)}, 4);
    Combination<CanonicalMonomial> expected;
    expected.add(CanonicalMonomial{{ConstGen::alpha(1, 2), ConstGen::alpha(3, 4)}}, 1);
    expected.add(CanonicalMonomial{{ConstGen::alpha(1, 4), ConstGen::alpha(2, 3)}}, 1);
    CHECK(r1 == expected);

    const std::vector<ConstGen> canonical{ConstGen::alpha(1, 2), ConstGen::u(3)};
    REQUIRE(is_canonical(canonical, 3));
    const auto echo = straighten(canonical, 3);
    REQUIRE(echo.size() == 1);
    CHECK(echo.coefficient(CanonicalMonomial{canonical}) == 1);

    const std::vector<ConstGen> covered{ConstGen::u(2), ConstGen::alpha(1, 3)};
    CHECK_FALSE(is_canonical(covered, 3));
    CHECK(expand_combination(straighten(covered, 3), 3) == expand(covered, 3));

    std::mt19937_64 rng(13);
    const auto gens = all_gens(3);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> length(1, 3);
    for (int t = 0; t < 100; ++t) {
      std::vector<ConstGen> product;
      for (int k = length(rng); k > 0; --k) product.push_back(gens[pick(rng)]);
      const auto c = straighten(product, 3);
      for (const auto& [m, coeff] : c) CHECK(is_canonical(m.gens, 3));
      CHECK(expand_combination(c, 3) == expand(product, 3));
    }
  }

  TEST_CASE("module generators and their preimages") {
    const auto gens = module_generators(2);
    auto find = [&](ModuleGenKind k, std::vector<int> idx) {
      for (const auto& g : gens)
        if (g.tag == ModuleGen{k, idx}) return g;
      FAIL("generator missing");
      return gens.front();
    };
    const auto g1 = find(ModuleGenKind::G1, {1});
    CHECK(g1.preimage == MetaElement::commutator(2, {1, 2}));
    CHECK(g1.expansion == w_element(1, 1, 2));
    CHECK(find(ModuleGenKind::G2, {1, 2}).preimage == MetaElement::commutator(2, {1, 3}));
    CHECK(meta_derive(find(ModuleGenKind::G3, {1, 2}).preimage).is_zero());
    for (const auto& g : gens) {
      CHECK(is_commutator_image(g.expansion));
      CHECK(module_derive(g.expansion).is_zero());
      CHECK(meta_derive(g.preimage).is_zero());
    }
  }

  TEST_CASE("algebra generators are constants") {
    const auto d1 = algebra_generators(1);
    REQUIRE(d1.size() >= 2);
    CHECK(d1[0].element == MetaElement::letter(1, 1));
    bool has_g1 = false;
    for (const auto& g : d1) has_g1 |= g.element == MetaElement::commutator(1, {1, 2});
    CHECK(has_g1);

    const auto L = [](int k) { return MetaElement::letter(2, k); };
    bool has_det = false;
    for (const auto& g : algebra_generators(2)) {
      has_det |= g.element == L(1) * L(4) - L(2) * L(3);
      CHECK(meta_derive(g.element).is_zero());
    }
    CHECK(has_det);
  }
}
