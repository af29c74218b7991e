#include "doctest.h"

#include <random>

#include "nowicki/linalg.hpp"
#include "oracle.hpp"

using namespace nowicki;

namespace {

QVector vec(std::initializer_list<int> xs) {
  QVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rref of the identity keeps both pivots") {
    const QMatrix id = QMatrix::from_rows({vec({1, 0}), vec({0, 1})}, 2);
    const RowEchelon e = rref(id);
    CHECK(e.reduced == id);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("rref of a rank one matrix") {
    const RowEchelon e = rref(QMatrix::from_rows({vec({2, 4}), vec({1, 2})}, 2));
    CHECK(e.reduced == QMatrix::from_rows({vec({1, 2}), vec({0, 0})}, 2));
    CHECK(e.pivots == std::vector<std::size_t>{0});
  }

  TEST_CASE("rref of zero") {
    const QMatrix z(2, 3);
    const RowEchelon e = rref(z);
    CHECK(e.reduced == z);
    CHECK(e.pivots.empty());
  }

  TEST_CASE("nullspace examples") {
    CHECK(nullspace(QMatrix::from_rows({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}, 3)).empty());

    const auto ns = nullspace(QMatrix::from_rows({vec({1, -1})}, 2));
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == vec({1, 1}));

    const auto zero = nullspace(QMatrix(1, 3));
    REQUIRE(zero.size() == 3);
    CHECK(rank(QMatrix::from_rows(zero, 3)) == 3);
  }

  TEST_CASE("span membership examples") {
    CHECK(span_membership({vec({1, 0}), vec({0, 1})}, vec({1, 1})) == vec({1, 1}));
    CHECK_FALSE(span_membership({vec({1, 0})}, vec({0, 1})).has_value());
    CHECK(span_membership({vec({1, 2}), vec({0, 1})}, vec({2, 5})) == vec({2, 1}));
  }

  TEST_CASE("random matrices: nullspace is annihilated and rank matches a dense oracle") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3), size(1, 6), sparse(0, 2);
    for (int t = 0; t < 200; ++t) {
      const int r = size(rng), c = size(rng);
      std::vector<QVector> rows(r, QVector(c));
      for (auto& row : rows)
        for (auto& x : row)
          if (sparse(rng)) x = entry(rng);
      const QMatrix m = QMatrix::from_rows(rows, c);
      const auto ns = nullspace(m);
      for (const auto& v : ns) CHECK(is_zero_vector(m.apply(v)));
      const std::size_t expected = oracle::dense_rank(rows);
      CHECK(rank(m) == expected);
      CHECK(ns.size() == static_cast<std::size_t>(c) - expected);

      EchelonSpan span(c);
      for (const auto& row : rows) span.insert(row);
      CHECK(span.rank() == expected);
      for (const auto& row : rows) CHECK(span.contains(row));
    }
  }

  TEST_CASE("out of range access throws") {
    QMatrix m(2, 2);
    CHECK_THROWS_AS(m.set(2, 0, 1), std::out_of_range);
  }
}
