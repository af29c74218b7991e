#include "nowicki/wreath.hpp"

#include <functional>
#include <string>

namespace nowicki {

CommPoly uvar(int d, int k) { return CommPoly::variable(Alphabet::uv(d), k - 1); }
CommPoly vvar(int d, int k) { return CommPoly::variable(Alphabet::uv(d), 2 * d + k - 1); }

ModuleElement ModuleElement::generator(int d, int k, const CommPoly& coeff) {
  ModuleElement m(d);
  m.add(k, coeff);
  return m;
}

ModuleElement ModuleElement::generator(int d, int k) {
  return generator(d, k, CommPoly::constant(Alphabet::uv(d), 1));
}

CommPoly ModuleElement::coefficient(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? CommPoly(Alphabet::uv(d_)) : it->second;
}

void ModuleElement::add(int k, const CommPoly& coeff) {
  if (k < 1 || k > 2 * d_) throw std::invalid_argument("module generator a" + std::to_string(k) + " out of range");
  if (!(coeff.alphabet() == Alphabet::uv(d_)))
    throw std::invalid_argument("module coefficients must be polynomials in U and V");
  if (coeff.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(k, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

ModuleElement ModuleElement::times(const CommPoly& p) const {
  ModuleElement out(d_);
  for (const auto& [k, f] : coeffs_) out.add(k, f * p);
  return out;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  if (d_ != o.d_) throw std::invalid_argument("ModuleElement: rank mismatch");
  for (const auto& [k, f] : o.coeffs_) add(k, f);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  if (d_ != o.d_) throw std::invalid_argument("ModuleElement: rank mismatch");
  for (const auto& [k, f] : o.coeffs_) add(k, -f);
  return *this;
}

ModuleElement& ModuleElement::operator*=(const Rational& s) {
  if (nowicki::is_zero(s)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, f] : coeffs_) f *= s;
  return *this;
}

WreathElement::WreathElement(CommPoly poly, ModuleElement module)
    : d_(module.d()), poly_(std::move(poly)), module_(std::move(module)) {
  if (!(poly_.alphabet() == Alphabet::y(d_))) throw std::invalid_argument("WreathElement: polynomial part must be over Y");
}

WreathElement WreathElement::one(int d) {
  return WreathElement(CommPoly::constant(Alphabet::y(d), 1), ModuleElement(d));
}

WreathElement WreathElement::y(int d, int k) {
  return WreathElement(CommPoly::variable(Alphabet::y(d), k - 1), ModuleElement(d));
}

WreathElement WreathElement::a(int d, int k) {
  return WreathElement(CommPoly(Alphabet::y(d)), ModuleElement::generator(d, k));
}

WreathElement& WreathElement::operator+=(const WreathElement& o) {
  poly_ += o.poly_;
  module_ += o.module_;
  return *this;
}

WreathElement& WreathElement::operator-=(const WreathElement& o) {
  poly_ -= o.poly_;
  module_ -= o.module_;
  return *this;
}

WreathElement& WreathElement::operator*=(const Rational& s) {
  poly_ *= s;
  module_ *= s;
  return *this;
}

WreathElement wreath_mul(const WreathElement& w1, const WreathElement& w2) {
  if (w1.d() != w2.d()) throw std::invalid_argument("wreath_mul: rank mismatch");
  const int d = w1.d();
  std::vector<CommPoly> left(2 * d), right(2 * d);
  for (int k = 1; k <= 2 * d; ++k) {
    left[k - 1] = uvar(d, k);
    right[k - 1] = vvar(d, k) + uvar(d, k);
  }
  ModuleElement m = w2.module().times(substitute(w1.poly(), left, Alphabet::uv(d)));
  m += w1.module().times(substitute(w2.poly(), right, Alphabet::uv(d)));
  return WreathElement(w1.poly() * w2.poly(), std::move(m));
}

WreathElement embed(const MetaElement& f) {
  const int d = f.d();
  auto image = [d](int k) { return WreathElement::y(d, k) + WreathElement::a(d, k); };
  auto bracket = [](const WreathElement& p, const WreathElement& q) {
    return wreath_mul(p, q) - wreath_mul(q, p);
  };
  WreathElement out(d);
  for (const auto& [m, c] : f.terms()) {
    WreathElement t = WreathElement::one(d);
    if (m.commutator) {
      t = bracket(image(m.head_i), image(m.head_j));
      for (int l : m.tail) t = bracket(t, image(l));
      for (int k = 1; k <= 2 * d; ++k)
        for (int r = 0; r < m.prefix[k - 1]; ++r) t = wreath_mul(image(k), t);
    } else {
      for (int k = 1; k <= 2 * d; ++k)
        for (int r = 0; r < m.prefix[k - 1]; ++r) t = wreath_mul(t, image(k));
    }
    out += t * c;
  }
  return out;
}

ModuleElement commutator_image(const MetaMonomial& b, int d) {
  if (!b.commutator) throw std::invalid_argument("commutator_image: Pure monomial has no module image");
  CommMonomial rest{std::vector<int>(4 * d, 0)};
  for (int k = 0; k < 2 * d; ++k) rest.exps[k] = b.prefix[k];
  for (int t : b.tail) rest.exps[2 * d + t - 1] += 1;
  CommPoly factor = CommPoly::monomial(Alphabet::uv(d), rest);
  ModuleElement m(d);
  m.add(b.head_i, vvar(d, b.head_j) * factor);
  m.add(b.head_j, -(vvar(d, b.head_i) * factor));
  return m;
}

CommPoly image_residual(const ModuleElement& m) {
  CommPoly r(Alphabet::uv(m.d()));
  for (const auto& [k, f] : m.coefficients()) r += vvar(m.d(), k) * f;
  return r;
}

bool is_commutator_image(const ModuleElement& m) { return image_residual(m).is_zero(); }

NotAnImage::NotAnImage(CommPoly residual)
    : std::invalid_argument("module element is not the image of a commutator ideal element"),
      residual_(std::move(residual)) {}

MetaElement pullback(const ModuleElement& m) {
  const int d = m.d();
  if (CommPoly residual = image_residual(m); !residual.is_zero()) throw NotAnImage(std::move(residual));

  // Peel off the largest a-index: each of its monomials contains some v_j with
  // j < i, and (a_i v_j - a_j v_i) v^T u^S with j = min is a basis image.
  MetaElement out(d);
  ModuleElement rest = m;
  std::size_t guard = 0;
  for (const auto& [k, f] : m.coefficients()) guard += f.size();
  guard = 4 * (guard + 1) * static_cast<std::size_t>(2 * d + 1);
  while (!rest.is_zero()) {
    if (guard-- == 0) throw std::logic_error("pullback: reduction did not terminate");
    const auto& [i, f] = *rest.coefficients().rbegin();
    const auto& [mono, c] = *f.terms().begin();
    int j = 0;
    for (int k = 1; k <= 2 * d; ++k) {
      if (mono.exps[2 * d + k - 1] > 0) {
        j = k;
        break;
      }
    }
    if (j == 0 || j >= i) throw std::logic_error("pullback: leading coefficient outside the syzygy module");
    MetaMonomial b{std::vector<int>(mono.exps.begin(), mono.exps.begin() + 2 * d), true, i, j, {}};
    for (int k = 1; k <= 2 * d; ++k) {
      int e = mono.exps[2 * d + k - 1] - (k == j ? 1 : 0);
      for (int r = 0; r < e; ++r) b.tail.push_back(k);
    }
    const Rational coeff = c;
    out.add_term(b, coeff);
    rest -= commutator_image(b, d) * coeff;
  }
  return out;
}

ModuleElement module_derive(const ModuleElement& m) {
  const int d = m.d();
  ModuleElement out(d);
  for (const auto& [k, f] : m.coefficients()) {
    if (k % 2 == 0) out.add(k - 1, f);
    out.add(k, weitz_derive(f));
  }
  return out;
}

WreathElement wreath_derive(const WreathElement& w) {
  return WreathElement(weitz_derive(w.poly()), module_derive(w.module()));
}

ComponentKey module_component_of(int d, int a, const CommMonomial& uv) {
  ComponentKey key{std::vector<int>(d, 0), 0};
  auto count = [&](int k, int e) {
    key.pairs[(k - 1) / 2] += e;
    if (k % 2 == 0) key.even += e;
  };
  count(a, 1);
  for (int k = 1; k <= 2 * d; ++k) {
    count(k, uv.exps[k - 1]);
    count(k, uv.exps[2 * d + k - 1]);
  }
  return key;
}

std::vector<std::pair<int, CommMonomial>> module_component_basis(int d, const ComponentKey& key) {
  std::vector<std::pair<int, CommMonomial>> out;
  if (static_cast<int>(key.pairs.size()) != d) throw std::invalid_argument("component key has wrong rank");
  for (int a = 1; a <= 2 * d; ++a) {
    ComponentKey rest = key;
    rest.pairs[(a - 1) / 2] -= 1;
    if (a % 2 == 0) rest.even -= 1;
    if (!rest.valid()) continue;
    CommMonomial m{std::vector<int>(4 * d, 0)};
    // Per pair p: exponents of u_{2p-1}, u_{2p}, v_{2p-1}, v_{2p}.
    std::function<void(int, int)> rec = [&](int p, int even_left) {
      if (p == d) {
        if (even_left == 0) out.emplace_back(a, m);
        return;
      }
      const int total = rest.pairs[p];
      for (int uo = 0; uo <= total; ++uo)
        for (int ue = 0; uo + ue <= total; ++ue)
          for (int vo = 0; uo + ue + vo <= total; ++vo) {
            const int ve = total - uo - ue - vo;
            if (ue + ve > even_left) continue;
            m.exps[2 * p] = uo;
            m.exps[2 * p + 1] = ue;
            m.exps[2 * d + 2 * p] = vo;
            m.exps[2 * d + 2 * p + 1] = ve;
            rec(p + 1, even_left - ue - ve);
          }
      m.exps[2 * p] = m.exps[2 * p + 1] = m.exps[2 * d + 2 * p] = m.exps[2 * d + 2 * p + 1] = 0;
    };
    rec(0, rest.even);
  }
  return out;
}

}  // namespace nowicki
