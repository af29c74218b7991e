#include "nowicki/metabelian.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nowicki {

namespace {

using Terms = Combination<MetaMonomial>;

void check_letter(int d, int k) {
  if (k < 1 || k > 2 * d)
    throw std::invalid_argument("letter x" + std::to_string(k) + " out of range for d=" + std::to_string(d));
}

// Adds c * prefix * [x_i, x_j, tail...] in normal form. Antisymmetry fixes the
// head order; when the smallest tail letter k is below j the Jacobi identity
// [x_i,x_j,x_k,...] = [x_i,x_k,x_j,...] - [x_j,x_k,x_i,...] moves it into the
// head. Tail order is free because [c, x_a, x_b] = [c, x_b, x_a] for c in F'.
void add_commutator(Terms& out, const std::vector<int>& prefix, int i, int j, std::vector<int> tail,
                    Rational c) {
  if (i == j || is_zero(c)) return;
  if (i < j) {
    std::swap(i, j);
    c = -c;
  }
  std::sort(tail.begin(), tail.end());
  if (!tail.empty() && tail.front() < j) {
    const int k = tail.front();
    std::vector<int> rest(tail.begin() + 1, tail.end());
    std::vector<int> with_j = rest;
    with_j.push_back(j);
    std::vector<int> with_i = std::move(rest);
    with_i.push_back(i);
    add_commutator(out, prefix, i, k, std::move(with_j), c);
    add_commutator(out, prefix, j, k, std::move(with_i), -c);
    return;
  }
  out.add(MetaMonomial{prefix, true, i, j, std::move(tail)}, c);
}

// c * m * x_a, accumulated into out.
void term_times_letter(Terms& out, const MetaMonomial& m, int a, const Rational& c) {
  if (m.commutator) {
    // m x_a = x_a m + [m, x_a]
    MetaMonomial moved = m;
    moved.prefix[a - 1] += 1;
    out.add(moved, c);
    std::vector<int> tail = m.tail;
    tail.push_back(a);
    add_commutator(out, m.prefix, m.head_i, m.head_j, std::move(tail), c);
    return;
  }
  int top = 0;
  for (int k = static_cast<int>(m.prefix.size()); k >= 1; --k) {
    if (m.prefix[k - 1] > 0) {
      top = k;
      break;
    }
  }
  if (top <= a) {
    MetaMonomial n = m;
    n.prefix[a - 1] += 1;
    out.add(n, c);
    return;
  }
  // w x_top x_a = (w x_a) x_top + w [x_top, x_a]
  MetaMonomial rest = m;
  rest.prefix[top - 1] -= 1;
  Terms inner;
  term_times_letter(inner, rest, a, Rational(1));
  for (const auto& [t, ct] : inner) term_times_letter(out, t, top, ct * c);
  add_commutator(out, rest.prefix, top, a, {}, c);
}

Terms times_letter(const Terms& f, int a) {
  Terms out;
  for (const auto& [m, c] : f) term_times_letter(out, m, a, c);
  return out;
}

Terms times_pure(Terms f, const std::vector<int>& exps) {
  for (std::size_t k = 0; k < exps.size(); ++k)
    for (int r = 0; r < exps[k]; ++r) f = times_letter(f, static_cast<int>(k) + 1);
  return f;
}

MetaElement wrap(int d, Terms t) {
  MetaElement e(d);
  for (const auto& [m, c] : t) e.add_term(m, c);
  return e;
}

}  // namespace

int MetaMonomial::degree() const {
  int n = std::accumulate(prefix.begin(), prefix.end(), 0);
  if (commutator) n += 2 + static_cast<int>(tail.size());
  return n;
}

std::vector<int> MetaMonomial::letter_counts() const {
  std::vector<int> counts = prefix;
  if (commutator) {
    counts[head_i - 1] += 1;
    counts[head_j - 1] += 1;
    for (int t : tail) counts[t - 1] += 1;
  }
  return counts;
}

bool operator<(const MetaMonomial& a, const MetaMonomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  if (a.commutator != b.commutator) return !a.commutator;
  if (a.prefix != b.prefix) {
    const int pa = std::accumulate(a.prefix.begin(), a.prefix.end(), 0);
    const int pb = std::accumulate(b.prefix.begin(), b.prefix.end(), 0);
    if (pa != pb) return pa < pb;
    return std::lexicographical_compare(a.prefix.begin(), a.prefix.end(), b.prefix.begin(), b.prefix.end(),
                                        [](int x, int y) { return x > y; });
  }
  if (a.head_i != b.head_i) return a.head_i < b.head_i;
  if (a.head_j != b.head_j) return a.head_j < b.head_j;
  return a.tail < b.tail;
}

MetaElement MetaElement::one(int d) {
  MetaElement e(d);
  e.add_term(MetaMonomial::pure(std::vector<int>(2 * d, 0)), 1);
  return e;
}

MetaElement MetaElement::letter(int d, int k) {
  check_letter(d, k);
  std::vector<int> exps(2 * d, 0);
  exps[k - 1] = 1;
  MetaElement e(d);
  e.add_term(MetaMonomial::pure(std::move(exps)), 1);
  return e;
}

MetaElement MetaElement::commutator(int d, const std::vector<int>& letters) {
  if (letters.size() < 2) throw std::invalid_argument("commutator needs at least two entries");
  for (int k : letters) check_letter(d, k);
  Terms t;
  add_commutator(t, std::vector<int>(2 * d, 0), letters[0], letters[1],
                 std::vector<int>(letters.begin() + 2, letters.end()), Rational(1));
  return wrap(d, std::move(t));
}

MetaElement MetaElement::from_monomial(int d, const MetaMonomial& m, const Rational& c) {
  MetaElement e(d);
  e.add_term(m, c);
  return e;
}

bool MetaElement::in_commutator_ideal() const {
  for (const auto& [m, c] : terms_)
    if (!m.commutator) return false;
  return true;
}

void MetaElement::add_term(const MetaMonomial& m, const Rational& c) {
  if (static_cast<int>(m.prefix.size()) != 2 * d_)
    throw std::invalid_argument("MetaElement: monomial rank mismatch");
  terms_.add(m, c);
}

MetaElement& MetaElement::operator+=(const MetaElement& o) {
  if (d_ != o.d_) throw std::invalid_argument("MetaElement: rank mismatch");
  terms_.add(o.terms_);
  return *this;
}

MetaElement& MetaElement::operator-=(const MetaElement& o) {
  if (d_ != o.d_) throw std::invalid_argument("MetaElement: rank mismatch");
  terms_.add(o.terms_, Rational(-1));
  return *this;
}

MetaElement& MetaElement::operator*=(const Rational& s) {
  terms_.scale(s);
  return *this;
}

MetaElement operator*(const MetaElement& f, const MetaElement& g) {
  if (f.d_ != g.d_) throw std::invalid_argument("meta_mul: rank mismatch");
  Terms out;
  for (const auto& [m, c] : g.terms_) {
    Terms h = times_pure(f.terms_, m.prefix);
    if (!m.commutator) {
      out.add(h, c);
      continue;
    }
    // (h) * [x_i, x_j, tail]: products of two commutator-ideal elements vanish.
    for (const auto& [t, ct] : h) {
      if (t.commutator) continue;
      out.add(MetaMonomial{t.prefix, true, m.head_i, m.head_j, m.tail}, ct * c);
    }
  }
  return wrap(f.d_, std::move(out));
}

MetaElement meta_mul(const MetaElement& f, const MetaElement& g) { return f * g; }

MetaElement meta_bracket(const MetaElement& f, const MetaElement& g) { return f * g - g * f; }

MetaElement meta_mul_letter(const MetaElement& f, int a) {
  check_letter(f.d(), a);
  return wrap(f.d(), times_letter(f.terms(), a));
}

MetaElement meta_normalize(int d, const RawExpression& expr) {
  MetaElement out(d);
  for (const auto& [coeff, word] : expr) {
    MetaElement acc = MetaElement::one(d);
    for (const RawFactor& f : word) {
      if (f.commutator) {
        acc = acc * MetaElement::commutator(d, f.letters);
      } else {
        if (f.letters.size() != 1) throw std::invalid_argument("letter factor must hold exactly one letter");
        acc = meta_mul_letter(acc, f.letters.front());
      }
      if (acc.is_zero()) break;
    }
    out += acc * coeff;
  }
  return out;
}

MetaElement meta_derive(const MetaElement& f) {
  const int d = f.d();
  Terms out;
  for (const auto& [m, c] : f.terms()) {
    if (!m.commutator) {
      // Leibniz over the ordered word x_1^{e_1} ... x_{2d}^{e_{2d}}.
      for (int k = 2; k <= 2 * d; k += 2) {
        const int e = m.prefix[k - 1];
        for (int t = 0; t < e; ++t) {
          std::vector<int> head(2 * d, 0);
          for (int l = 1; l < k; ++l) head[l - 1] = m.prefix[l - 1];
          head[k - 1] = t;
          Terms w;
          w.add(MetaMonomial::pure(head), c);
          w = times_letter(w, k - 1);
          std::vector<int> rest(2 * d, 0);
          rest[k - 1] = e - t - 1;
          for (int l = k + 1; l <= 2 * d; ++l) rest[l - 1] = m.prefix[l - 1];
          out.add(times_pure(std::move(w), rest));
        }
      }
      continue;
    }
    // The prefix letters commute modulo (F')^2, so each copy contributes alike.
    for (int k = 2; k <= 2 * d; k += 2) {
      const int e = m.prefix[k - 1];
      if (e == 0) continue;
      MetaMonomial n = m;
      n.prefix[k - 1] -= 1;
      n.prefix[k - 2] += 1;
      out.add(n, c * e);
    }
    std::vector<int> slots{m.head_i, m.head_j};
    slots.insert(slots.end(), m.tail.begin(), m.tail.end());
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (slots[s] % 2 != 0) continue;
      std::vector<int> changed = slots;
      changed[s] -= 1;
      add_commutator(out, m.prefix, changed[0], changed[1], std::vector<int>(changed.begin() + 2, changed.end()),
                     c);
    }
  }
  return wrap(d, std::move(out));
}

MetaElement act_uv(const MetaElement& c, const CommMonomial& uv) {
  const int d = c.d();
  if (static_cast<int>(uv.exps.size()) != 4 * d)
    throw std::invalid_argument("act_uv: monomial must be over u_1..u_2d, v_1..v_2d");
  if (!c.in_commutator_ideal()) throw std::invalid_argument("act_uv: element has a nonzero Pure part");
  Terms out;
  for (const auto& [m, coeff] : c.terms()) {
    std::vector<int> prefix = m.prefix;
    std::vector<int> tail = m.tail;
    for (int k = 0; k < 2 * d; ++k) {
      prefix[k] += uv.exps[k];
      for (int r = 0; r < uv.exps[2 * d + k]; ++r) tail.push_back(k + 1);
    }
    add_commutator(out, prefix, m.head_i, m.head_j, std::move(tail), coeff);
  }
  return wrap(d, std::move(out));
}

MetaElement act_uv(const MetaElement& c, const CommPoly& uv) {
  MetaElement out(c.d());
  for (const auto& [m, coeff] : uv.terms()) out += act_uv(c, m) * coeff;
  return out;
}

MetaElement lift_ordered(const CommPoly& p) {
  const int d = p.alphabet().size / 2;
  MetaElement out(d);
  for (const auto& [m, c] : p.terms()) out.add_term(MetaMonomial::pure(m.exps), c);
  return out;
}

ComponentKey component_of(const MetaMonomial& m) { return component_of(CommMonomial{m.letter_counts()}); }

std::vector<MetaMonomial> meta_component_basis(int d, const ComponentKey& key, bool commutator_only) {
  if (static_cast<int>(key.pairs.size()) != d) throw std::invalid_argument("component key has wrong rank");
  std::vector<MetaMonomial> out;
  for (const auto& counts : exponent_splits(key)) {
    if (!commutator_only) out.push_back(MetaMonomial::pure(counts));
    // Choose the multiset of letters inside the commutator.
    std::vector<int> inside(2 * d, 0);
    std::function<void(int)> rec = [&](int k) {
      if (k == 2 * d) {
        const int size = std::accumulate(inside.begin(), inside.end(), 0);
        if (size < 2) return;
        int j = 0;
        while (inside[j] == 0) ++j;
        for (int i = j + 1; i < 2 * d; ++i) {
          if (inside[i] == 0) continue;
          std::vector<int> rest = inside;
          rest[i] -= 1;
          rest[j] -= 1;
          std::vector<int> tail;
          for (int l = 0; l < 2 * d; ++l)
            for (int r = 0; r < rest[l]; ++r) tail.push_back(l + 1);
          std::vector<int> prefix(2 * d);
          for (int l = 0; l < 2 * d; ++l) prefix[l] = counts[l] - inside[l];
          out.push_back(MetaMonomial{std::move(prefix), true, i + 1, j + 1, std::move(tail)});
        }
        return;
      }
      for (int v = 0; v <= counts[k]; ++v) {
        inside[k] = v;
        rec(k + 1);
      }
      inside[k] = 0;
    };
    rec(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nowicki
