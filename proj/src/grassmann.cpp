#include "nowicki/grassmann.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace nowicki {

std::string grass_letter_name(int pos) {
  return (pos % 2 ? "x" : "y") + std::to_string((pos + 1) / 2);
}

int GrassMonomial::degree() const {
  return std::accumulate(exps.begin(), exps.end(), 0) + static_cast<int>(block.size());
}

bool operator<(const GrassMonomial& a, const GrassMonomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.exps != b.exps)
    return std::lexicographical_compare(a.exps.begin(), a.exps.end(), b.exps.begin(), b.exps.end(),
                                        [](int x, int y) { return x > y; });
  if (a.block.size() != b.block.size()) return a.block.size() < b.block.size();
  return a.block < b.block;
}

int sort_block(std::vector<int>& positions) {
  int sign = 1;
  for (std::size_t i = 1; i < positions.size(); ++i)
    for (std::size_t j = i; j > 0 && positions[j - 1] >= positions[j]; --j) {
      if (positions[j - 1] == positions[j]) return 0;
      std::swap(positions[j - 1], positions[j]);
      sign = -sign;
    }
  return sign;
}

namespace {

void check_pos(int pos, int d) {
  if (pos < 1 || pos > 2 * d) throw std::out_of_range("letter position " + std::to_string(pos) + " out of range");
}

// Wedge of two blocks; sign 0 on a repeated entry.
int merge_blocks(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out) {
  out = a;
  out.insert(out.end(), b.begin(), b.end());
  return sort_block(out);
}

// c * m * x_l, using x_g x_l = x_l x_g + [x_g, x_l] with central commutators.
void add_times_letter(Combination<GrassMonomial>& out, const GrassMonomial& m, const Rational& c, int l) {
  GrassMonomial main = m;
  main.exps[l - 1] += 1;
  out.add(main, c);
  for (int g = l + 1; g <= static_cast<int>(m.exps.size()); ++g) {
    if (m.exps[g - 1] == 0) continue;
    GrassMonomial n = m;
    n.exps[g - 1] -= 1;
    n.block.push_back(g);
    n.block.push_back(l);
    const int sign = sort_block(n.block);
    if (sign != 0) out.add(n, c * m.exps[g - 1] * sign);
  }
}

GrassElement times_block(const GrassElement& f, const std::vector<int>& block, const Rational& c) {
  GrassElement out(f.d());
  for (const auto& [m, coeff] : f.terms()) {
    GrassMonomial n = m;
    const int sign = merge_blocks(m.block, block, n.block);
    if (sign != 0) out.add_term(n, coeff * c * sign);
  }
  return out;
}

GrassElement word_of(int d, const std::vector<int>& exps) {
  return GrassElement::from_monomial(d, GrassMonomial{exps, {}});
}

}  // namespace

GrassElement GrassElement::one(int d) { return from_monomial(d, GrassMonomial{std::vector<int>(2 * d, 0), {}}); }

GrassElement GrassElement::letter(int d, int pos) {
  check_pos(pos, d);
  GrassMonomial m{std::vector<int>(2 * d, 0), {}};
  m.exps[pos - 1] = 1;
  return from_monomial(d, m);
}

GrassElement GrassElement::block(int d, const std::vector<int>& positions) {
  if (positions.size() % 2) throw std::invalid_argument("commutator block needs an even number of entries");
  for (int p : positions) check_pos(p, d);
  GrassMonomial m{std::vector<int>(2 * d, 0), positions};
  const int sign = sort_block(m.block);
  GrassElement out(d);
  if (sign != 0) out.add_term(m, sign);
  return out;
}

GrassElement GrassElement::from_monomial(int d, const GrassMonomial& m, const Rational& c) {
  GrassElement e(d);
  e.add_term(m, c);
  return e;
}

void GrassElement::add_term(const GrassMonomial& m, const Rational& c) {
  if (static_cast<int>(m.exps.size()) != 2 * d_) throw std::invalid_argument("GrassElement: monomial has wrong rank");
  terms_.add(m, c);
}

GrassElement& GrassElement::operator+=(const GrassElement& o) {
  if (d_ != o.d_) throw std::invalid_argument("GrassElement: rank mismatch");
  terms_.add(o.terms_);
  return *this;
}

GrassElement& GrassElement::operator-=(const GrassElement& o) {
  if (d_ != o.d_) throw std::invalid_argument("GrassElement: rank mismatch");
  terms_.add(o.terms_, Rational(-1));
  return *this;
}

GrassElement& GrassElement::operator*=(const Rational& s) {
  terms_.scale(s);
  return *this;
}

GrassElement grass_mul_letter(const GrassElement& f, int pos) {
  check_pos(pos, f.d());
  GrassElement out(f.d());
  Combination<GrassMonomial> acc;
  for (const auto& [m, c] : f.terms()) add_times_letter(acc, m, c, pos);
  for (const auto& [m, c] : acc) out.add_term(m, c);
  return out;
}

GrassElement operator*(const GrassElement& a, const GrassElement& b) {
  if (a.d_ != b.d_) throw std::invalid_argument("grass_mul: rank mismatch");
  GrassElement out(a.d_);
  for (const auto& [mb, cb] : b.terms_) {
    GrassElement t = times_block(a, mb.block, cb);
    for (int l = 1; l <= 2 * a.d_; ++l)
      for (int r = 0; r < mb.exps[l - 1]; ++r) t = grass_mul_letter(t, l);
    out += t;
  }
  return out;
}

GrassElement grass_mul(const GrassElement& f, const GrassElement& g) { return f * g; }

GrassElement grass_bracket(const GrassElement& f, const GrassElement& g) { return f * g - g * f; }

GrassElement grass_bracket(const std::vector<GrassElement>& fs) {
  if (fs.size() < 2) throw std::invalid_argument("commutator needs at least two entries");
  GrassElement out = grass_bracket(fs[0], fs[1]);
  for (std::size_t k = 2; k < fs.size(); ++k) out = grass_bracket(out, fs[k]);
  return out;
}

GrassElement grass_derive(const GrassElement& f) {
  const int d = f.d();
  GrassElement out(d);
  for (const auto& [m, c] : f.terms()) {
    GrassElement prefix = GrassElement::one(d) * c;
    GrassElement deriv(d);
    for (int l = 1; l <= 2 * d; ++l)
      for (int r = 0; r < m.exps[l - 1]; ++r) {
        deriv = grass_mul_letter(deriv, l);
        if (l % 2 == 0) deriv += grass_mul_letter(prefix, l - 1);
        prefix = grass_mul_letter(prefix, l);
      }
    out += times_block(deriv, m.block, 1);
    for (std::size_t t = 0; t < m.block.size(); ++t) {
      if (m.block[t] % 2) continue;
      std::vector<int> b = m.block;
      b[t] -= 1;
      out += times_block(word_of(d, m.exps), b, c);
    }
  }
  return out;
}

GrassElement phi_alpha(const GrassElement& f, const std::vector<Rational>& alpha) {
  const int d = f.d();
  if (d < 2) throw std::invalid_argument("phi_alpha: rank must be at least 2");
  if (static_cast<int>(alpha.size()) != d - 1) throw std::invalid_argument("phi_alpha: alpha must have d-1 entries");
  const int e = d - 1;
  // image of a letter as (position, coefficient) pairs in rank d-1
  auto image = [&](int pos) {
    std::vector<std::pair<int, Rational>> out;
    if (pos <= 2 * e) {
      out.emplace_back(pos, 1);
    } else {
      const bool is_y = pos % 2 == 0;
      for (int i = 1; i <= e; ++i)
        if (!is_zero(alpha[i - 1])) out.emplace_back(is_y ? ypos(i) : xpos(i), alpha[i - 1]);
    }
    return out;
  };
  GrassElement out(e);
  for (const auto& [m, c] : f.terms()) {
    GrassElement t = GrassElement::one(e) * c;
    for (int l = 1; l <= 2 * d; ++l)
      for (int r = 0; r < m.exps[l - 1]; ++r) {
        GrassElement next(e);
        for (const auto& [p, a] : image(l)) next += grass_mul_letter(t, p) * a;
        t = std::move(next);
      }
    // multilinear expansion of the block
    std::vector<std::pair<std::vector<int>, Rational>> blocks{{{}, Rational(1)}};
    for (int pos : m.block) {
      std::vector<std::pair<std::vector<int>, Rational>> next;
      for (const auto& [b, bc] : blocks)
        for (const auto& [p, a] : image(pos)) {
          std::vector<int> nb = b;
          nb.push_back(p);
          next.emplace_back(std::move(nb), bc * a);
        }
      blocks = std::move(next);
    }
    for (auto& [b, bc] : blocks) {
      std::vector<int> sorted = b;
      const int sign = sort_block(sorted);
      if (sign != 0) out += times_block(t, sorted, bc * sign);
    }
  }
  return out;
}

LemmaElements lemma_elements(int d, const std::vector<Rational>& alpha) {
  if (d < 2) throw std::invalid_argument("lemma_elements: rank must be at least 2");
  if (static_cast<int>(alpha.size()) != d - 1) throw std::invalid_argument("lemma_elements: alpha must have d-1 entries");
  if (std::all_of(alpha.begin(), alpha.end(), [](const Rational& a) { return is_zero(a); }))
    throw std::invalid_argument("lemma_elements: alpha must be nonzero");
  GrassElement sx(d), sy(d);
  for (int i = 1; i < d; ++i) {
    sx += GrassElement::x(d, i) * alpha[i - 1];
    sy += GrassElement::y(d, i) * alpha[i - 1];
  }
  const GrassElement xd = GrassElement::x(d, d), yd = GrassElement::y(d, d);
  return {sx * yd - sy * xd, grass_bracket(xd, sx), grass_bracket(yd, sy)};
}

std::string to_string(const GrassGen& g) {
  auto join = [](const std::vector<int>& v, std::size_t from, std::size_t to) {
    std::string s;
    for (std::size_t i = from; i < to; ++i) s += (i > from ? "," : "") + std::to_string(v[i]);
    return s;
  };
  switch (g.kind) {
    case GrassGenKind::X: return "x" + std::to_string(g.idx.at(0));
    case GrassGenKind::V: return "v(" + join(g.idx, 0, 2) + ")";
    case GrassGenKind::W:
    case GrassGenKind::Z: {
      const std::size_t base = g.kind == GrassGenKind::W ? 3 : 4;
      std::string s = std::string(g.kind == GrassGenKind::W ? "w" : "z") + std::to_string(g.level) + "(" +
                      join(g.idx, 0, base);
      for (std::size_t k = base; k + 1 < g.idx.size(); k += 2) s += ";" + join(g.idx, k, k + 2);
      return s + ")";
    }
  }
  return "?";
}

GrassElement grass_v(int d, int i, int j) {
  using E = GrassElement;
  return E::x(d, i) * E::y(d, j) - E::y(d, i) * E::x(d, j);
}

GrassElement grass_w(int d, int i, int j, int k) {
  using E = GrassElement;
  return E::y(d, i) * grass_bracket(E::x(d, j), E::x(d, k)) - E::x(d, i) * grass_bracket(E::y(d, j), E::x(d, k));
}

GrassElement grass_z(int d, int i, int j, int k, int l) {
  using E = GrassElement;
  const GrassElement v = grass_v(d, k, l);
  return E::y(d, i) * grass_bracket(E::x(d, j), v) - E::x(d, i) * grass_bracket(E::y(d, j), v);
}

GrassElement grass_lift(const GrassElement& f, int xi, int yj) {
  using E = GrassElement;
  const int d = f.d();
  return E::y(d, yj) * grass_bracket(E::x(d, xi), f) - E::x(d, xi) * grass_bracket(E::y(d, yj), f);
}

namespace {

void push_unique(std::vector<GrassGenerator>& into, GrassGenerator g) {
  if (g.element.is_zero()) return;
  for (const auto& h : into)
    if (h.element == g.element) return;
  into.push_back(std::move(g));
}

// Literal ranges: W_0 over i, j <= k (i unrestricted), Z_0 over i <= j <= k <= l.
std::vector<GrassGenerator> base_w(int d, GrassRanges ranges) {
  const bool all = ranges == GrassRanges::Full;
  std::vector<GrassGenerator> out;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = all ? 1 : j; k <= d; ++k) push_unique(out, {{GrassGenKind::W, 0, {i, j, k}}, grass_w(d, i, j, k)});
  return out;
}

std::vector<GrassGenerator> base_z(int d, GrassRanges ranges) {
  const bool all = ranges == GrassRanges::Full;
  std::vector<GrassGenerator> out;
  for (int i = 1; i <= d; ++i)
    for (int j = all ? 1 : i; j <= d; ++j)
      for (int k = all ? 1 : j; k <= d; ++k)
        for (int l = all ? 1 : k; l <= d; ++l)
          push_unique(out, {{GrassGenKind::Z, 0, {i, j, k, l}}, grass_z(d, i, j, k, l)});
  return out;
}

// Lifts over every (x_i, y_j); results that are not constants are dropped.
std::vector<GrassGenerator> next_level(const std::vector<GrassGenerator>& prev, int d, std::size_t* dropped = nullptr) {
  std::vector<GrassGenerator> out;
  for (const auto& g : prev)
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) {
        GrassGen tag = g.tag;
        tag.level += 1;
        tag.idx.push_back(i);
        tag.idx.push_back(j);
        GrassElement lifted = grass_lift(g.element, i, j);
        if (!grass_derive(lifted).is_zero()) {
          if (dropped) ++*dropped;
          continue;
        }
        push_unique(out, {tag, std::move(lifted)});
      }
  return out;
}

}  // namespace

std::vector<GrassGenerator> grassmann_generators(int d, GrassRanges ranges) {
  if (d < 1) throw std::invalid_argument("grassmann_generators: d must be positive");
  std::vector<GrassGenerator> out;
  for (int i = 1; i <= d; ++i) push_unique(out, {{GrassGenKind::X, 0, {i}}, GrassElement::x(d, i)});
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) push_unique(out, {{GrassGenKind::V, 0, {i, j}}, grass_v(d, i, j)});
  std::vector<std::vector<GrassGenerator>> levels{base_w(d, ranges)};
  for (int s = 1; s < d; ++s) levels.push_back(next_level(levels.back(), d));
  std::vector<std::vector<GrassGenerator>> zlevels{base_z(d, ranges)};
  for (int s = 1; s < d; ++s) zlevels.push_back(next_level(zlevels.back(), d));
  for (auto& lv : levels)
    for (auto& g : lv) push_unique(out, std::move(g));
  for (auto& lv : zlevels)
    for (auto& g : lv) push_unique(out, std::move(g));
  return out;
}

LevelCounts grassmann_level_counts(int d, int max_level, GrassRanges ranges) {
  LevelCounts counts;
  std::vector<GrassGenerator> w = base_w(d, ranges), z = base_z(d, ranges);
  for (int s = 0; s <= max_level; ++s) {
    std::size_t dropped = 0;
    if (s > 0) {
      w = next_level(w, d, &dropped);
      z = next_level(z, d, &dropped);
    }
    counts.dropped.push_back(dropped);
    counts.w.push_back(w.size());
    counts.z.push_back(z.size());
  }
  return counts;
}

ComponentKey component_of(const GrassMonomial& m) {
  const int d = static_cast<int>(m.exps.size()) / 2;
  std::vector<int> counts = m.exps;
  for (int p : m.block) counts[p - 1] += 1;
  ComponentKey key{std::vector<int>(d, 0), 0};
  for (int i = 0; i < d; ++i) {
    key.pairs[i] = counts[2 * i] + counts[2 * i + 1];
    key.even += counts[2 * i + 1];
  }
  return key;
}

std::vector<GrassMonomial> grass_component_basis(int d, const ComponentKey& key) {
  if (static_cast<int>(key.pairs.size()) != d) throw std::invalid_argument("component key has wrong rank");
  std::vector<GrassMonomial> out;
  if (!key.valid()) return out;
  for (const auto& counts : exponent_splits(key)) {
    std::vector<int> support;
    for (int p = 1; p <= 2 * d; ++p)
      if (counts[p - 1] > 0) support.push_back(p);
    const std::size_t n = support.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      if (__builtin_popcountll(mask) % 2) continue;
      GrassMonomial m{counts, {}};
      for (std::size_t b = 0; b < n; ++b)
        if (mask >> b & 1) {
          m.block.push_back(support[b]);
          m.exps[support[b] - 1] -= 1;
        }
      out.push_back(std::move(m));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nowicki
