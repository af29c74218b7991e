#include "doctest.h"

#include "nowicki/exprio.hpp"
#include "nowicki/kernel.hpp"
#include "oracle.hpp"

using namespace nowicki;

namespace {

std::size_t total(Algebra a, int d, int degree, std::size_t (*f)(Algebra, int, const ComponentKey&)) {
  std::size_t n = 0;
  for (const auto& key : component_keys(a, d, degree)) n += f(a, d, key);
  return n;
}

const SpanReport* find_report(const std::vector<SpanReport>& reports, const ComponentKey& key) {
  for (const auto& r : reports)
    if (r.key == key) return &r;
  return nullptr;
}

}  // namespace

TEST_SUITE("kernel") {
  TEST_CASE("component sizes") {
    CHECK(total(Algebra::Commutative, 2, 1, component_dimension) == 4);
    CHECK(total(Algebra::Commutative, 2, 2, component_dimension) == 10);
    CHECK(total(Algebra::Metabelian, 2, 2, component_dimension) == 16);
    CHECK(total(Algebra::MetabelianIdeal, 2, 2, component_dimension) == 6);
    // F(G) at d = 1: x^a y^b and x^a y^b [x,y].
    for (int n = 2; n <= 6; ++n)
      CHECK(total(Algebra::GrassmannVariety, 1, n, component_dimension) == static_cast<std::size_t>(2 * n));
  }

  TEST_CASE("derivation matrices") {
    const QMatrix m = derivation_matrix(Algebra::Commutative, 1, {{1}, 1});
    CHECK(m == QMatrix::from_rows({{Rational(1)}}, 1));
    CHECK(derivation_matrix(Algebra::Commutative, 1, {{1}, 0}).rows() == 0);

    const int d = 2;
    const AnyElement c = MetaElement::commutator(d, {4, 2});
    const ComponentKey key{{1, 1}, 2};
    const QVector coords = coordinates(Algebra::Metabelian, d, key, c);
    const QVector column = derivation_matrix(Algebra::Metabelian, d, key).apply(coords);
    std::size_t nonzero = 0;
    for (const auto& x : column) nonzero += !is_zero(x);
    CHECK(nonzero == 2);
  }

  TEST_CASE("columns of constants are zero and delta squared composes") {
    for (Algebra a : {Algebra::Commutative, Algebra::Metabelian, Algebra::GrassmannVariety, Algebra::UVPolynomial,
                      Algebra::WreathModule}) {
      const int d = 2;
      for (const auto& key : component_keys(a, d, 3)) {
        if (key.even < 2) continue;
        const QMatrix m1 = derivation_matrix(a, d, key);
        const QMatrix m2 = derivation_matrix(a, d, key.lowered());
        const auto basis = component_basis(a, d, key);
        const ComponentKey low2 = key.lowered().lowered();
        std::vector<QVector> cols;
        for (const auto& b : basis) cols.push_back(coordinates(a, d, low2, derive(derive(b))));
        CHECK_MESSAGE(m2 * m1 == QMatrix::from_columns(cols, component_dimension(a, d, low2)), to_string(key));
        for (const auto& k : kernel_basis(a, d, key)) CHECK(is_zero_vector(m1.apply(coordinates(a, d, key, k))));
      }
    }
  }

  TEST_CASE("kernel examples") {
    std::vector<std::string> deg1;
    for (const auto& key : component_keys(Algebra::Commutative, 2, 1))
      for (const auto& e : kernel_basis(Algebra::Commutative, 2, key)) deg1.push_back(render(e));
    std::sort(deg1.begin(), deg1.end());
    CHECK(deg1 == std::vector<std::string>{"x1", "x3"});
    CHECK(total(Algebra::Commutative, 2, 2, kernel_dimension) == 4);
    CHECK(total(Algebra::Metabelian, 2, 2, kernel_dimension) == 8);
    for (int n = 2; n <= 6; ++n) CHECK(total(Algebra::GrassmannVariety, 1, n, kernel_dimension) == 2);
  }

  TEST_CASE("commutative and U, V kernel dimensions match the dense oracle") {
    for (int n = 0; n <= 5; ++n)
      for (const auto& [g, dim] : oracle::kernel_dims(4, n))
        CHECK(kernel_dimension(Algebra::Commutative, 2, {g.pairs, g.even}) == dim);
    for (int n = 0; n <= 3; ++n)
      for (const auto& [g, dim] : oracle::kernel_dims(8, n))
        CHECK(kernel_dimension(Algebra::UVPolynomial, 2, {g.pairs, g.even}) == dim);
  }

  TEST_CASE("span certificates at small degree") {
    const auto comm = span_check(Algebra::Commutative, 2, default_candidates(Algebra::Commutative, 2, 4), 4);
    for (const auto& r : comm) CHECK_MESSAGE(r.ok(), to_string(r.key));

    const auto grass =
        span_check(Algebra::GrassmannVariety, 2, default_candidates(Algebra::GrassmannVariety, 2, 3), 3);
    for (const auto& r : grass) CHECK_MESSAGE(r.ok(), to_string(r.key));

    const auto ideal = span_check(Algebra::MetabelianIdeal, 2, default_candidates(Algebra::MetabelianIdeal, 2, 3), 3,
                                  SpanMode::Module);
    for (const auto& r : ideal) CHECK_MESSAGE(r.ok(), to_string(r.key));
  }

  TEST_CASE("degree four constant outside the module span of the g-list") {
    const int d = 2;
    const auto E = std::get<MetaElement>(
        parse("x1^2*[x4,x2] - x1*x2*[x3,x2] - x1*x2*[x4,x1] + x2^2*[x3,x1]", Algebra::MetabelianIdeal, d));
    CHECK(meta_derive(E).is_zero());
    const auto reports = span_check(Algebra::MetabelianIdeal, d, default_candidates(Algebra::MetabelianIdeal, d, 4),
                                    4, SpanMode::Module);
    const SpanReport* r = find_report(reports, {{3, 1}, 2});
    REQUIRE(r != nullptr);
    CHECK(r->kernel_dim == r->span_dim + 1);
    CHECK_FALSE(r->ok());
  }

  TEST_CASE("non-constant candidates are rejected") {
    const std::vector<Candidate> bad{{"x2", CommPoly::variable(Alphabet::x(2), 1)}};
    CHECK_THROWS_AS(span_check(Algebra::Commutative, 2, bad, 2), NonConstantCandidate);
  }

  TEST_CASE("homogeneous parts reassemble the element") {
    const int d = 2;
    const AnyElement e = parse("x1*x2 + [x2,x1] + x3 - 2*x4^2", Algebra::Metabelian, d);
    MetaElement sum(d);
    for (const auto& [key, part] : homogeneous_parts(Algebra::Metabelian, d, e)) sum += std::get<MetaElement>(part);
    CHECK(AnyElement(sum) == e);
  }
}
