#include "nowicki/constants.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "nowicki/linalg.hpp"

namespace nowicki {

namespace {

void check_index(int k, int d) {
  if (k < 1 || k > d) throw std::out_of_range("generator index " + std::to_string(k) + " outside 1.." + std::to_string(d));
}

CommPoly u_(int d, int k) { return uvar(d, k); }
CommPoly v_(int d, int k) { return vvar(d, k); }

CommPoly det(const CommPoly& a, const CommPoly& b, const CommPoly& c, const CommPoly& e) { return a * e - b * c; }

ConstGen arc_gen(int a, int b, int d) {
  if (b <= d) return ConstGen::alpha(a, b);
  if (a > d) return ConstGen::beta(a - d, b - d);
  return ConstGen::gamma(a, b - d);
}

ConstGen point_gen(int col, int d) { return col <= d ? ConstGen::u(col) : ConstGen::v(col - d); }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Coordinates of a polynomial in a fixed monomial list.
QVector coordinates(const CommPoly& p, const std::map<CommMonomial, std::size_t>& index) {
  QVector out(index.size());
  for (const auto& [m, c] : p.terms()) out.at(index.at(m)) = c;
  return out;
}

}  // namespace

std::string to_string(const ConstGen& g) {
  switch (g.kind) {
    case ConstKind::Uodd: return "u(" + std::to_string(g.p) + ")";
    case ConstKind::Vodd: return "v(" + std::to_string(g.p) + ")";
    case ConstKind::Alpha: return "alpha(" + std::to_string(g.p) + "," + std::to_string(g.q) + ")";
    case ConstKind::Beta: return "beta(" + std::to_string(g.p) + "," + std::to_string(g.q) + ")";
    case ConstKind::Gamma: return "gamma(" + std::to_string(g.p) + "," + std::to_string(g.q) + ")";
  }
  return "?";
}

int point_of(const ConstGen& g, int d) {
  check_index(g.p, d);
  if (g.kind == ConstKind::Uodd) return g.p;
  if (g.kind == ConstKind::Vodd) return g.p + d;
  throw std::invalid_argument(to_string(g) + " is not a point generator");
}

std::pair<int, int> interval_of(const ConstGen& g, int d) {
  if (g.is_point()) throw std::invalid_argument(to_string(g) + " is not an interval generator");
  check_index(g.p, d);
  check_index(g.q, d);
  switch (g.kind) {
    case ConstKind::Alpha: return {g.p, g.q};
    case ConstKind::Beta: return {g.p + d, g.q + d};
    default: return {g.p, g.q + d};
  }
}

bool intersects(const ConstGen& g1, const ConstGen& g2, int d) {
  auto [a, b] = interval_of(g1, d);
  auto [c, e] = interval_of(g2, d);
  return (a < c && c < b && b < e) || (c < a && a < e && e < b);
}

bool covers(const ConstGen& arc, const ConstGen& pt, int d) {
  auto [a, b] = interval_of(arc, d);
  const int x = point_of(pt, d);
  return a < x && x < b;
}

CommPoly expand(const ConstGen& g, int d) {
  check_index(g.p, d);
  if (!g.is_point()) check_index(g.q, d);
  const int p = g.p, q = g.q;
  switch (g.kind) {
    case ConstKind::Uodd: return u_(d, 2 * p - 1);
    case ConstKind::Vodd: return v_(d, 2 * p - 1);
    case ConstKind::Alpha: return det(u_(d, 2 * p - 1), u_(d, 2 * p), u_(d, 2 * q - 1), u_(d, 2 * q));
    case ConstKind::Beta: return det(v_(d, 2 * p - 1), v_(d, 2 * p), v_(d, 2 * q - 1), v_(d, 2 * q));
    case ConstKind::Gamma: return det(u_(d, 2 * p - 1), u_(d, 2 * p), v_(d, 2 * q - 1), v_(d, 2 * q));
  }
  return CommPoly(Alphabet::uv(d));
}

CommPoly expand(const std::vector<ConstGen>& product, int d) {
  CommPoly out = CommPoly::constant(Alphabet::uv(d), 1);
  for (const auto& g : product) out = out * expand(g, d);
  return out;
}

ComponentKey component_of(const ConstGen& g, int d) {
  ComponentKey key{std::vector<int>(2 * d, 0), 0};
  if (g.is_point()) {
    key.pairs[point_of(g, d) - 1] = 1;
  } else {
    auto [a, b] = interval_of(g, d);
    key.pairs[a - 1] += 1;
    key.pairs[b - 1] += 1;
    key.even = 1;
  }
  return key;
}

ComponentKey component_of(const std::vector<ConstGen>& product, int d) {
  ComponentKey key{std::vector<int>(2 * d, 0), 0};
  for (const auto& g : product) key = key + component_of(g, d);
  return key;
}

std::string to_string(const CanonicalMonomial& m) {
  if (m.gens.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.gens.size(); ++i) s += (i ? "*" : "") + to_string(m.gens[i]);
  return s;
}

bool is_canonical(const std::vector<ConstGen>& product, int d) {
  for (std::size_t i = 0; i < product.size(); ++i) {
    if (product[i].is_point()) continue;
    auto [a, b] = interval_of(product[i], d);
    if (a == b) return false;
    for (std::size_t j = 0; j < product.size(); ++j) {
      if (j == i) continue;
      if (product[j].is_point() ? covers(product[i], product[j], d)
                                : (j > i && intersects(product[i], product[j], d)))
        return false;
    }
  }
  return true;
}

std::vector<CanonicalMonomial> canonical_basis(int d, const ComponentKey& key) {
  if (d < 1) throw std::invalid_argument("canonical_basis: d must be positive");
  if (static_cast<int>(key.pairs.size()) != 2 * d) throw std::invalid_argument("canonical_basis: key must have 2d columns");
  std::vector<CanonicalMonomial> out;
  if (!key.valid() || 2 * key.even > key.total_degree()) return out;

  std::vector<std::pair<int, int>> arcs;
  for (int a = 1; a <= 2 * d; ++a)
    for (int b = a + 1; b <= 2 * d; ++b) arcs.emplace_back(a, b);

  std::vector<int> budget = key.pairs;
  std::vector<std::pair<int, int>> chosen;
  auto crossing = [](std::pair<int, int> x, std::pair<int, int> y) {
    return (x.first < y.first && y.first < x.second && x.second < y.second) ||
           (y.first < x.first && x.first < y.second && y.second < x.second);
  };
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (left == 0) {
      std::vector<ConstGen> gens;
      for (auto [a, b] : chosen) gens.push_back(arc_gen(a, b, d));
      for (int col = 1; col <= 2 * d; ++col) {
        if (budget[col - 1] == 0) continue;
        for (auto [a, b] : chosen)
          if (a < col && col < b) return;
        for (int r = 0; r < budget[col - 1]; ++r) gens.push_back(point_gen(col, d));
      }
      std::sort(gens.begin(), gens.end());
      out.push_back(CanonicalMonomial{std::move(gens)});
      return;
    }
    for (std::size_t k = start; k < arcs.size(); ++k) {
      auto [a, b] = arcs[k];
      if (budget[a - 1] == 0 || budget[b - 1] == 0) continue;
      bool ok = true;
      for (const auto& c : chosen)
        if (crossing(c, arcs[k])) ok = false;
      if (!ok) continue;
      --budget[a - 1];
      --budget[b - 1];
      chosen.push_back(arcs[k]);
      rec(k, left - 1);
      chosen.pop_back();
      ++budget[a - 1];
      ++budget[b - 1];
    }
  };
  rec(0, key.even);
  std::sort(out.begin(), out.end());
  return out;
}

Combination<CanonicalMonomial> straighten(const std::vector<ConstGen>& product, int d) {
  const ComponentKey key = component_of(product, d);
  const CommPoly target = expand(product, d);
  Combination<CanonicalMonomial> out;
  if (target.is_zero()) return out;
  const auto basis = canonical_basis(d, key);
  std::vector<CommPoly> expansions;
  std::map<CommMonomial, std::size_t> index;
  for (const auto& m : basis) {
    expansions.push_back(expand(m.gens, d));
    for (const auto& [mono, c] : expansions.back().terms()) index.try_emplace(mono, 0);
  }
  for (const auto& [mono, c] : target.terms())
    if (!index.contains(mono)) throw std::logic_error("straighten: expansion leaves the canonical span");
  std::size_t pos = 0;
  for (auto& [mono, slot] : index) slot = pos++;
  std::vector<QVector> columns;
  for (const auto& e : expansions) columns.push_back(coordinates(e, index));
  auto coeffs = span_membership(columns, coordinates(target, index));
  if (!coeffs) throw std::logic_error("straighten: expansion leaves the canonical span");
  for (std::size_t k = 0; k < basis.size(); ++k) out.add(basis[k], (*coeffs)[k]);
  return out;
}

std::string to_string(RelationId id) {
  switch (id) {
    case RelationId::S1: return "S1";
    case RelationId::S2: return "S2";
    case RelationId::S3: return "S3";
    case RelationId::S4: return "S4";
    case RelationId::R1: return "R1";
    case RelationId::R2: return "R2";
    case RelationId::R3: return "R3";
    case RelationId::R4: return "R4";
    case RelationId::R5: return "R5";
    case RelationId::S: return "S";
    case RelationId::SLiteral: return "S-literal";
    case RelationId::R: return "R";
  }
  return "?";
}

std::vector<RelationId> all_relations() {
  return {RelationId::S1, RelationId::S2, RelationId::S3, RelationId::S4, RelationId::R1, RelationId::R2,
          RelationId::R3, RelationId::R4, RelationId::R5, RelationId::S, RelationId::SLiteral, RelationId::R};
}

std::optional<RelationId> relation_from_string(const std::string& name) {
  for (auto id : all_relations())
    if (to_string(id) == name) return id;
  return std::nullopt;
}

namespace {

// Side conditions as a predicate on (i, j, k[, l]); arity from the relation.
int relation_arity(RelationId id) {
  switch (id) {
    case RelationId::R1:
    case RelationId::R2:
    case RelationId::R3:
    case RelationId::R4:
    case RelationId::R5:
    case RelationId::R: return 4;
    default: return 3;
  }
}

bool admissible(RelationId id, const std::vector<int>& x) {
  const int i = x[0], j = x[1], k = x[2];
  const int l = x.size() > 3 ? x[3] : 0;
  switch (id) {
    case RelationId::S1:
    case RelationId::S4: return i < j && j < k;
    case RelationId::S2: return i < j;
    case RelationId::S3:
    case RelationId::S:
    case RelationId::SLiteral: return j < k;
    case RelationId::R1:
    case RelationId::R5: return i < j && j < k && k < l;
    case RelationId::R2: return i < j && j < k;
    case RelationId::R3: return i < j && k < l;
    case RelationId::R4:
    case RelationId::R: return j < k && k < l;
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> admissible_indices(RelationId id, int d) {
  const int n = relation_arity(id);
  std::vector<std::vector<int>> out;
  std::vector<int> x(n, 1);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      if (admissible(id, x)) out.push_back(x);
      return;
    }
    for (int v = 1; v <= d; ++v) {
      x[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

ModuleElement w_element(int p, int q, int d) {
  check_index(p, d);
  check_index(q, d);
  return ModuleElement::generator(d, 2 * p - 1, v_(d, 2 * q)) - ModuleElement::generator(d, 2 * p, v_(d, 2 * q - 1));
}

ModuleElement w_element_as_printed(int p, int q, int d) {
  check_index(p, d);
  check_index(q, d);
  return ModuleElement::generator(d, 2 * p - 1, v_(d, 2 * q)) - ModuleElement::generator(d, 2 * q, v_(d, 2 * p - 1));
}

RelationResidual verify_relation(RelationId id, const std::vector<int>& indices, int d) {
  if (static_cast<int>(indices.size()) != relation_arity(id))
    throw std::invalid_argument(to_string(id) + " takes " + std::to_string(relation_arity(id)) + " indices");
  for (int x : indices) check_index(x, d);
  if (!admissible(id, indices))
    throw std::invalid_argument("indices (" + join(indices) + ") violate the side conditions of " + to_string(id));

  const int i = indices[0], j = indices[1], k = indices[2];
  const int l = indices.size() > 3 ? indices[3] : 0;
  auto E = [d](const ConstGen& g) { return expand(g, d); };
  auto al = [&](int p, int q) { return E(ConstGen::alpha(p, q)); };
  auto be = [&](int p, int q) { return E(ConstGen::beta(p, q)); };
  auto ga = [&](int p, int q) { return E(ConstGen::gamma(p, q)); };
  auto uo = [&](int p) { return E(ConstGen::u(p)); };
  auto vo = [&](int p) { return E(ConstGen::v(p)); };
  auto a_ = [d](int p, const CommPoly& f) { return ModuleElement::generator(d, 2 * p - 1, f); };
  auto w = [d](int p, int q) { return w_element(p, q, d); };

  RelationResidual r;
  switch (id) {
    case RelationId::S1: r.poly = uo(i) * al(j, k) - uo(j) * al(i, k) + uo(k) * al(i, j); break;
    case RelationId::S2: r.poly = uo(i) * ga(j, k) - uo(j) * ga(i, k) + vo(k) * al(i, j); break;
    case RelationId::S3: r.poly = uo(i) * be(j, k) - vo(j) * ga(i, k) + vo(k) * ga(i, j); break;
    case RelationId::S4: r.poly = vo(i) * be(j, k) - vo(j) * be(i, k) + vo(k) * be(i, j); break;
    case RelationId::R1: r.poly = al(i, j) * al(k, l) - al(i, k) * al(j, l) + al(i, l) * al(j, k); break;
    case RelationId::R2: r.poly = al(i, j) * ga(k, l) - al(i, k) * ga(j, l) + ga(i, l) * al(j, k); break;
    case RelationId::R3: r.poly = al(i, j) * be(k, l) - ga(i, k) * ga(j, l) + ga(i, l) * ga(j, k); break;
    case RelationId::R4: r.poly = ga(i, j) * be(k, l) - ga(i, k) * be(j, l) + ga(i, l) * be(j, k); break;
    case RelationId::R5: r.poly = be(i, j) * be(k, l) - be(i, k) * be(j, l) + be(i, l) * be(j, k); break;
    case RelationId::S:
      r.module = true;
      r.element = a_(i, be(j, k)) - w(i, k).times(vo(j)) + w(i, j).times(vo(k));
      break;
    case RelationId::SLiteral:
      r.module = true;
      r.element = a_(i, be(j, k)) - w(i, k).times(vo(j)) + w(i, j).times(vo(j));
      break;
    case RelationId::R:
      r.module = true;
      r.element = w(i, j).times(be(k, l)) - w(i, k).times(be(j, l)) + w(i, l).times(be(j, k));
      break;
  }
  if (!r.module) r.element = ModuleElement(d);
  else r.poly = CommPoly(Alphabet::uv(d));
  return r;
}

std::string to_string(const ModuleGen& g) {
  static const char* names[] = {"a", "w", "g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8"};
  return std::string(names[static_cast<int>(g.kind)]) + "(" + join(g.idx) + ")";
}

namespace {

std::size_t module_arity(ModuleGenKind k) {
  switch (k) {
    case ModuleGenKind::A:
    case ModuleGenKind::G1: return 1;
    case ModuleGenKind::W:
    case ModuleGenKind::G2:
    case ModuleGenKind::G3: return 2;
    case ModuleGenKind::G4:
    case ModuleGenKind::G5:
    case ModuleGenKind::G8: return 3;
    case ModuleGenKind::G6:
    case ModuleGenKind::G7: return 4;
  }
  return 0;
}

void check_module_gen(const ModuleGen& g, int d) {
  if (g.idx.size() != module_arity(g.kind)) throw std::invalid_argument(to_string(g) + ": wrong number of indices");
  for (int x : g.idx) check_index(x, d);
}

}  // namespace

ModuleElement expand(const ModuleGen& g, int d) {
  check_module_gen(g, d);
  const auto& x = g.idx;
  auto E = [d](const ConstGen& c) { return expand(c, d); };
  auto a_ = [d](int p, const CommPoly& f) { return ModuleElement::generator(d, 2 * p - 1, f); };
  auto w = [d](int p, int q) { return w_element(p, q, d); };
  auto vo = [&](int p) { return E(ConstGen::v(p)); };
  auto uo = [&](int p) { return E(ConstGen::u(p)); };
  auto be = [&](int p, int q) { return E(ConstGen::beta(p, q)); };
  auto ga = [&](int p, int q) { return E(ConstGen::gamma(p, q)); };
  const CommPoly one = CommPoly::constant(Alphabet::uv(d), 1);

  switch (g.kind) {
    case ModuleGenKind::A: return a_(x[0], one);
    case ModuleGenKind::W: return w(x[0], x[1]);
    case ModuleGenKind::G1: return w(x[0], x[0]);
    case ModuleGenKind::G2: return a_(x[0], vo(x[1])) - a_(x[1], vo(x[0]));
    case ModuleGenKind::G3: return w(x[0], x[1]) + w(x[1], x[0]);
    case ModuleGenKind::G4: return a_(x[0], be(x[1], x[2])) - w(x[1], x[2]).times(vo(x[0]));
    case ModuleGenKind::G5:
      return a_(x[0], be(x[1], x[2])) - a_(x[1], be(x[0], x[2])) + a_(x[2], be(x[0], x[1]));
    case ModuleGenKind::G6: return w(x[0], x[1]).times(be(x[2], x[3])) - w(x[2], x[3]).times(be(x[0], x[1]));
    case ModuleGenKind::G7: {
      const int i = x[0], j = x[1], k = x[2], l = x[3];
      return w(k, l).times(ga(i, j)) - w(j, l).times(ga(i, k)) + w(j, k).times(ga(i, l));
    }
    case ModuleGenKind::G8: {
      const int i = x[0], j = x[1], k = x[2];
      return w(j, k).times(uo(i)) - a_(j, ga(i, k)) + a_(k, ga(i, j));
    }
  }
  return ModuleElement(d);
}

MetaElement preimage(const ModuleGen& g, int d) {
  check_module_gen(g, d);
  const auto& x = g.idx;
  auto o = [](int i) { return 2 * i - 1; };
  auto e = [](int i) { return 2 * i; };
  auto c = [d](std::vector<int> letters) { return MetaElement::commutator(d, letters); };
  auto L = [d](int k) { return MetaElement::letter(d, k); };
  switch (g.kind) {
    case ModuleGenKind::G1: return c({o(x[0]), e(x[0])});
    case ModuleGenKind::G2: return c({o(x[0]), o(x[1])});
    case ModuleGenKind::G3: return c({o(x[0]), e(x[1])}) + c({o(x[1]), e(x[0])});
    case ModuleGenKind::G4: {
      const int i = x[0], p = x[1], q = x[2];
      return c({o(i), o(p), e(q)}) - c({o(i), e(p), o(q)});
    }
    case ModuleGenKind::G5: {
      const int i = x[0], j = x[1], k = x[2];
      return c({o(i), o(j), e(k)}) - c({o(i), o(k), e(j)}) + c({o(j), o(k), e(i)});
    }
    case ModuleGenKind::G6: {
      const int i = x[0], j = x[1], p = x[2], q = x[3];
      return c({o(i), o(p), e(j), e(q)}) + c({e(i), e(p), o(j), o(q)}) - c({o(i), e(p), e(j), o(q)}) -
             c({e(i), o(p), o(j), e(q)});
    }
    case ModuleGenKind::G7: {
      const int i = x[0], j = x[1], k = x[2], l = x[3];
      return L(e(i)) * c({o(j), o(k), e(l)}) + L(o(i)) * c({e(j), e(k), o(l)}) -
             L(e(i)) * c({o(j), e(k), o(l)}) - L(o(i)) * c({e(j), o(k), e(l)});
    }
    case ModuleGenKind::G8: {
      const int i = x[0], j = x[1], k = x[2];
      return L(e(i)) * c({o(j), o(k)}) - L(o(i)) * c({e(j), o(k)});
    }
    default: throw std::invalid_argument(to_string(g) + " has no commutator preimage");
  }
}

std::vector<ModuleGenerator> module_generators(int d) {
  if (d < 1) throw std::invalid_argument("module_generators: d must be positive");
  std::vector<ModuleGen> tags;
  for (int i = 1; i <= d; ++i) tags.push_back({ModuleGenKind::G1, {i}});
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) tags.push_back({ModuleGenKind::G2, {i, j}});
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) tags.push_back({ModuleGenKind::G3, {i, j}});
  for (int i = 1; i <= d; ++i)
    for (int p = 1; p <= d; ++p)
      for (int q = p + 1; q <= d; ++q) tags.push_back({ModuleGenKind::G4, {i, p, q}});
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = j + 1; k <= d; ++k) tags.push_back({ModuleGenKind::G5, {i, j, k}});
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int p = 1; p <= d; ++p)
        for (int q = p + 1; q <= d; ++q) tags.push_back({ModuleGenKind::G6, {i, j, p, q}});
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = j + 1; k <= d; ++k)
        for (int l = k + 1; l <= d; ++l) tags.push_back({ModuleGenKind::G7, {i, j, k, l}});
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = j + 1; k <= d; ++k) tags.push_back({ModuleGenKind::G8, {i, j, k}});

  std::vector<ModuleGenerator> out;
  for (const auto& t : tags) out.push_back({t, expand(t, d), preimage(t, d)});
  return out;
}

std::vector<AlgebraGenerator> algebra_generators(int d) {
  std::vector<AlgebraGenerator> out;
  for (int i = 1; i <= d; ++i) out.push_back({"x" + std::to_string(2 * i - 1), MetaElement::letter(d, 2 * i - 1), false});
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      auto L = [d](int k) { return MetaElement::letter(d, k); };
      out.push_back({"det(" + std::to_string(i) + "," + std::to_string(j) + ")",
                     L(2 * i - 1) * L(2 * j) - L(2 * i) * L(2 * j - 1), false});
    }
  for (auto& g : module_generators(d)) out.push_back({to_string(g.tag), std::move(g.preimage), true});
  return out;
}

}  // namespace nowicki
