#include "nowicki/commpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nowicki {

std::string Alphabet::variable_name(int slot) const {
  if (slot < 0 || slot >= size) throw std::out_of_range("variable slot out of range");
  switch (name) {
    case AlphabetName::X: return "x" + std::to_string(slot + 1);
    case AlphabetName::Y: return "y" + std::to_string(slot + 1);
    case AlphabetName::U: return "u" + std::to_string(slot + 1);
    case AlphabetName::V: return "v" + std::to_string(slot + 1);
    case AlphabetName::UV: {
      const int half = size / 2;
      return slot < half ? "u" + std::to_string(slot + 1) : "v" + std::to_string(slot - half + 1);
    }
  }
  return "?";
}

int CommMonomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

bool operator<(const CommMonomial& a, const CommMonomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(a.exps.begin(), a.exps.end(), b.exps.begin(), b.exps.end(),
                                      [](int x, int y) { return x > y; });
}

CommPoly CommPoly::constant(Alphabet alphabet, const Rational& c) {
  CommPoly p(alphabet);
  p.add_term(CommMonomial{std::vector<int>(alphabet.size, 0)}, c);
  return p;
}

CommPoly CommPoly::variable(Alphabet alphabet, int slot) {
  if (slot < 0 || slot >= alphabet.size) throw std::out_of_range("CommPoly::variable: slot out of range");
  CommMonomial m{std::vector<int>(alphabet.size, 0)};
  m.exps[slot] = 1;
  return monomial(alphabet, std::move(m));
}

CommPoly CommPoly::monomial(Alphabet alphabet, CommMonomial m, const Rational& c) {
  if (static_cast<int>(m.exps.size()) != alphabet.size)
    throw std::invalid_argument("CommPoly::monomial: exponent length does not match alphabet");
  CommPoly p(alphabet);
  p.add_term(m, c);
  return p;
}

void CommPoly::add_term(const CommMonomial& m, const Rational& c) {
  if (static_cast<int>(m.exps.size()) != alphabet_.size)
    throw std::invalid_argument("CommPoly: exponent length does not match alphabet");
  terms_.add(m, c);
}

void CommPoly::require_same(const CommPoly& o) const {
  if (!(alphabet_ == o.alphabet_)) throw std::invalid_argument("CommPoly: alphabet mismatch");
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  require_same(o);
  terms_.add(o.terms_);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  require_same(o);
  terms_.add(o.terms_, Rational(-1));
  return *this;
}

CommPoly& CommPoly::operator*=(const Rational& s) {
  terms_.scale(s);
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  a.require_same(b);
  CommPoly out(a.alphabet_);
  CommMonomial m{std::vector<int>(a.alphabet_.size, 0)};
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t k = 0; k < m.exps.size(); ++k) m.exps[k] = ma.exps[k] + mb.exps[k];
      out.terms_.add(m, ca * cb);
    }
  }
  return out;
}

CommPoly CommPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("CommPoly::pow: negative exponent");
  CommPoly out = constant(alphabet_, 1);
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

CommPoly poly_mul(const CommPoly& p, const CommPoly& q) { return p * q; }

CommPoly weitz_derive(const CommPoly& p) {
  if (!p.alphabet().paired()) throw std::invalid_argument("weitz_derive: alphabet size must be even");
  CommPoly out(p.alphabet());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t k = 1; k < m.exps.size(); k += 2) {
      if (m.exps[k] == 0) continue;
      CommMonomial n = m;
      n.exps[k] -= 1;
      n.exps[k - 1] += 1;
      out.add_term(n, c * m.exps[k]);
    }
  }
  return out;
}

CommPoly exp_delta(const CommPoly& p) {
  CommPoly out = p;
  CommPoly power = p;
  Rational factorial = 1;
  for (int k = 1; !power.is_zero(); ++k) {
    power = weitz_derive(power);
    factorial *= k;
    out += power * Rational(1 / factorial);
  }
  return out;
}

std::vector<CommPoly> nowicki_generators(int d) {
  if (d < 1) throw std::invalid_argument("nowicki_generators: d must be positive");
  const Alphabet x = Alphabet::x(d);
  auto var = [&](int index1) { return CommPoly::variable(x, index1 - 1); };
  std::vector<CommPoly> out;
  for (int i = 1; i <= d; ++i) out.push_back(var(2 * i - 1));
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      out.push_back(var(2 * i - 1) * var(2 * j) - var(2 * i) * var(2 * j - 1));
  return out;
}

CommPoly substitute(const CommPoly& p, const std::vector<CommPoly>& images, Alphabet target) {
  if (static_cast<int>(images.size()) != p.alphabet().size)
    throw std::invalid_argument("substitute: one image per variable required");
  CommPoly out(target);
  for (const auto& [m, c] : p.terms()) {
    CommPoly t = CommPoly::constant(target, c);
    for (std::size_t k = 0; k < m.exps.size(); ++k)
      if (m.exps[k] > 0) t = t * images[k].pow(m.exps[k]);
    out += t;
  }
  return out;
}

ComponentKey component_of(const CommMonomial& m) {
  ComponentKey key;
  key.pairs.resize(m.exps.size() / 2);
  for (std::size_t i = 0; i < key.pairs.size(); ++i) {
    key.pairs[i] = m.exps[2 * i] + m.exps[2 * i + 1];
    key.even += m.exps[2 * i + 1];
  }
  return key;
}

std::vector<CommMonomial> comm_component_basis(const ComponentKey& key) {
  std::vector<CommMonomial> out;
  for (auto& exps : exponent_splits(key)) out.push_back(CommMonomial{std::move(exps)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nowicki
