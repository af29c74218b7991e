#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library's linear algebra or component machinery: monomials are enumerated
// directly, the derivation acts on exponent vectors, and ranks come from a
// plain dense Gauss-Jordan pass.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Row = std::vector<Q>;
using Exps = std::vector<int>;

inline std::size_t dense_rank(std::vector<Row> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Q f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

// All exponent vectors of n variables with the given total degree.
inline std::vector<Exps> monomials(int n, int degree) {
  std::vector<Exps> out;
  Exps e(n, 0);
  auto rec = [&](auto&& self, int slot, int left) -> void {
    if (slot == n - 1) {
      e[slot] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[slot] = k;
      self(self, slot + 1, left - k);
    }
  };
  if (n > 0) rec(rec, 0, degree);
  return out;
}

// Grading preserved by the Jordan-block derivation on a paired alphabet:
// the degree in each pair (x_{2i-1}, x_{2i}) and the total even degree.
struct Grade {
  std::vector<int> pairs;
  int even = 0;
  friend auto operator<=>(const Grade&, const Grade&) = default;
};

inline Grade grade_of(const Exps& e) {
  Grade g;
  for (std::size_t i = 0; i + 1 < e.size(); i += 2) {
    g.pairs.push_back(e[i] + e[i + 1]);
    g.even += e[i + 1];
  }
  return g;
}

// delta(x_{2i}) = x_{2i-1}, delta(x_{2i-1}) = 0 on a monomial; 0-based slots.
inline std::vector<std::pair<Exps, Q>> derive(const Exps& e) {
  std::vector<std::pair<Exps, Q>> out;
  for (std::size_t i = 1; i < e.size(); i += 2) {
    if (e[i] == 0) continue;
    Exps t = e;
    --t[i];
    ++t[i - 1];
    out.emplace_back(std::move(t), Q(e[i]));
  }
  return out;
}

// dim ker delta on every grade of the given total degree.
inline std::map<Grade, std::size_t> kernel_dims(int nvars, int degree) {
  std::map<Grade, std::vector<Exps>> groups;
  for (auto& m : monomials(nvars, degree)) groups[grade_of(m)].push_back(m);
  std::map<Grade, std::size_t> out;
  for (const auto& [g, src] : groups) {
    if (g.even == 0) {
      out[g] = src.size();
      continue;
    }
    std::map<Exps, std::size_t> target;
    for (const auto& m : src)
      for (const auto& [t, c] : derive(m)) target.try_emplace(t, target.size());
    // Rows are source monomials; rank of the transpose equals rank.
    std::vector<Row> rows;
    for (const auto& m : src) {
      Row r(target.size());
      for (const auto& [t, c] : derive(m)) r[target.at(t)] += c;
      rows.push_back(std::move(r));
    }
    out[g] = src.size() - dense_rank(std::move(rows));
  }
  return out;
}

// Coordinates of a sparse family over the union of its supports.
template <class Key>
std::vector<Row> to_rows(const std::vector<std::map<Key, Q>>& family) {
  std::map<Key, std::size_t> index;
  for (const auto& f : family)
    for (const auto& [k, c] : f) index.try_emplace(k, index.size());
  std::vector<Row> rows;
  for (const auto& f : family) {
    Row r(index.size());
    for (const auto& [k, c] : f) r[index.at(k)] = c;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace oracle
