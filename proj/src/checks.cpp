#include "nowicki/checks.hpp"

#include <map>
#include <random>

#include "nowicki/constants.hpp"
#include "nowicki/exprio.hpp"
#include "nowicki/kernel.hpp"
#include "nowicki/random.hpp"

namespace nowicki {

void CheckResult::record(bool passed, const std::string& witness) {
  ++cases;
  if (passed) return;
  ++failures;
  if (witnesses.size() < 5) witnesses.push_back(witness);
}

namespace {

std::string tuple(const std::vector<int>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

std::string show(const RelationResidual& r) {
  return r.module ? render(WreathElement(CommPoly(Alphabet::y(r.element.d())), r.element)) : render(r.poly);
}

template <class T>
T random_of(Algebra a, int d, int max_degree, int max_terms, std::mt19937_64& rng) {
  return std::get<T>(random_element(a, d, max_degree, max_terms, rng));
}

// Coordinates of wreath elements over a growing index of their terms.
struct WreathIndex {
  std::map<std::pair<int, CommMonomial>, std::size_t> index;

  QVector operator()(const WreathElement& w) {
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (const auto& [m, c] : w.poly().terms()) entries.emplace_back(slot(0, m), c);
    for (const auto& [k, poly] : w.module().coefficients())
      for (const auto& [m, c] : poly.terms()) entries.emplace_back(slot(k, m), c);
    QVector v(index.size());
    for (const auto& [i, c] : entries) v[i] = c;
    return v;
  }

 private:
  std::size_t slot(int k, const CommMonomial& m) { return index.try_emplace({k, m}, index.size()).first->second; }
};

}  // namespace

std::vector<CheckResult> verify_relations(int d, bool include_literal_s) {
  std::vector<CheckResult> out;
  for (RelationId id : all_relations()) {
    if (id == RelationId::SLiteral && !include_literal_s) continue;
    CheckResult r{to_string(id)};
    for (const auto& idx : admissible_indices(id, d)) {
      const RelationResidual res = verify_relation(id, idx, d);
      r.record(res.is_zero(), to_string(id) + tuple(idx) + ": " + (res.is_zero() ? "0" : show(res)));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> verify_generators(Algebra a, int d) {
  std::vector<CheckResult> out;
  CheckResult constancy{"constancy"};
  if (a == Algebra::Metabelian) {
    for (const auto& g : algebra_generators(d)) {
      const MetaElement dg = meta_derive(g.element);
      constancy.record(dg.is_zero(), g.name + ": delta = " + render(dg));
    }
  } else {
    for (const auto& c : default_candidates(a, d, 0)) {
      const AnyElement dc = derive(c.element);
      constancy.record(is_zero(dc), c.name + ": delta = " + render(dc));
    }
  }
  out.push_back(std::move(constancy));

  if (a == Algebra::WreathModule || a == Algebra::MetabelianIdeal) {
    CheckResult image{"image-criterion"}, agree{"embedded-preimage"};
    for (const auto& g : module_generators(d)) {
      const std::string name = to_string(g.tag);
      image.record(is_commutator_image(g.expansion), name + ": sum v_i f_i = " + render(image_residual(g.expansion)));
      const WreathElement e = embed(g.preimage);
      agree.record(e.poly().is_zero() && e.module() == g.expansion, name + ": embed(preimage) = " + render(e));
    }
    out.push_back(std::move(image));
    out.push_back(std::move(agree));
  }
  if (a == Algebra::GrassmannVariety) {
    CheckResult vanish{"levels-vanish"};
    const LevelCounts counts = grassmann_level_counts(d, d);
    vanish.record(counts.w[d] == 0, "W_" + std::to_string(d) + " has " + std::to_string(counts.w[d]) + " elements");
    vanish.record(counts.z[d] == 0, "Z_" + std::to_string(d) + " has " + std::to_string(counts.z[d]) + " elements");
    out.push_back(std::move(vanish));
  }
  return out;
}

std::vector<CheckResult> verify_embedding(int d, int max_degree, std::size_t random_pairs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CheckResult hom{"homomorphism"};
  const int half = std::max(1, max_degree / 2 + 1);
  for (std::size_t t = 0; t < random_pairs; ++t) {
    const auto f = random_of<MetaElement>(Algebra::Metabelian, d, half, 3, rng);
    const auto g = random_of<MetaElement>(Algebra::Metabelian, d, half, 3, rng);
    const WreathElement lhs = embed(f * g), rhs = wreath_mul(embed(f), embed(g));
    hom.record(lhs == rhs, "f = " + render(f) + ", g = " + render(g));
  }

  CheckResult rank_check{"full-column-rank"};
  for (int n = 0; n <= max_degree; ++n)
    for (const auto& key : component_keys(Algebra::Metabelian, d, n)) {
      const auto basis = component_basis(Algebra::Metabelian, d, key);
      WreathIndex index;
      std::vector<QVector> cols;
      for (const auto& b : basis) cols.push_back(index(embed(std::get<MetaElement>(b))));
      for (auto& c : cols) c.resize(index.index.size());
      const std::size_t r = rank(QMatrix::from_columns(cols, index.index.size()));
      rank_check.record(r == basis.size(), "component " + to_string(key) + ": rank " + std::to_string(r) + " of " +
                                               std::to_string(basis.size()));
    }

  CheckResult criterion{"criterion-vs-rank"};
  for (int n = 1; n <= max_degree; ++n)
    for (const auto& key : component_keys(Algebra::WreathModule, d, n)) {
      const auto module_basis = component_basis(Algebra::WreathModule, d, key);
      EchelonSpan span(module_basis.size());
      std::vector<QVector> images;
      if (key.valid() && n >= 2)
        for (const auto& b : component_basis(Algebra::MetabelianIdeal, d, key)) {
          const WreathElement e = embed(std::get<MetaElement>(b));
          images.push_back(coordinates(Algebra::WreathModule, d, key, e));
          span.insert(images.back());
        }
      auto test = [&](const QVector& v) {
        ModuleElement m(d);
        for (std::size_t k = 0; k < v.size(); ++k)
          if (!is_zero(v[k])) m += std::get<WreathElement>(module_basis[k]).module() * v[k];
        const bool by_rank = span.contains(v);
        criterion.record(is_commutator_image(m) == by_rank,
                         render(WreathElement(CommPoly(Alphabet::y(d)), m)) + (by_rank ? " in image" : " not in image"));
      };
      for (std::size_t k = 0; k < module_basis.size(); ++k) {
        QVector v(module_basis.size());
        v[k] = 1;
        test(v);
      }
      std::uniform_int_distribution<std::size_t> pick(0, module_basis.size() - 1);
      for (int t = 0; t < 3; ++t) {
        QVector v(module_basis.size());
        for (int s = 0; s < 3; ++s) v[pick(rng)] += random_rational(rng);
        test(v);
      }
      if (!images.empty()) {
        std::uniform_int_distribution<std::size_t> pick_image(0, images.size() - 1);
        for (int t = 0; t < 3; ++t) {
          QVector v(module_basis.size());
          for (int s = 0; s < 3; ++s) {
            const Rational c = random_rational(rng);
            const QVector& im = images[pick_image(rng)];
            for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * im[k];
          }
          test(v);
        }
      }
    }
  return {hom, rank_check, criterion};
}

std::vector<CheckResult> verify_identities(int d, std::size_t cases, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("verify_identities: d must be at least 2");
  std::mt19937_64 rng(seed);
  auto meta = [&](Algebra a) { return random_of<MetaElement>(a, d, 3, 3, rng); };
  auto grass = [&] { return random_of<GrassElement>(Algebra::GrassmannVariety, d, 3, 3, rng); };
  auto comm = [&] { return random_of<CommPoly>(Algebra::Commutative, d, 4, 4, rng); };

  CheckResult metabelian{"metabelian-identity"};
  for (std::size_t t = 0; t < cases; ++t) {
    const MetaElement a = meta(Algebra::Metabelian), b = meta(Algebra::Metabelian), c = meta(Algebra::Metabelian),
                      e = meta(Algebra::Metabelian);
    const MetaElement p = meta_bracket(a, b) * meta_bracket(c, e);
    metabelian.record(p.is_zero(), "[" + render(a) + ", " + render(b) + "][" + render(c) + ", " + render(e) + "]");
  }

  CheckResult exchange{"commutator-exchange"}, central{"central-commutators"}, triple{"triple-commutator"};
  for (std::size_t t = 0; t < cases; ++t) {
    const GrassElement z1 = grass(), z2 = grass(), z3 = grass(), z4 = grass();
    const GrassElement lhs = grass_bracket(z1, z2) * grass_bracket(z3, z4);
    const GrassElement rhs = -(grass_bracket(z1, z3) * grass_bracket(z2, z4));
    exchange.record(lhs == rhs, "z = " + render(z1) + ", " + render(z2) + ", " + render(z3) + ", " + render(z4));
    const GrassElement c = grass_bracket(z1, z2);
    central.record(c * z3 == z3 * c, "[" + render(z1) + ", " + render(z2) + "] with " + render(z3));
    triple.record(grass_bracket({z1, z2, z3}).is_zero(), render(z1) + ", " + render(z2) + ", " + render(z3));
  }

  CheckResult lcomm{"leibniz-comm"}, lmeta{"leibniz-meta"}, lgrass{"leibniz-grass"};
  for (std::size_t t = 0; t < cases; ++t) {
    const CommPoly f = comm(), g = comm();
    lcomm.record(weitz_derive(f * g) == weitz_derive(f) * g + f * weitz_derive(g), render(f) + " ; " + render(g));
    const MetaElement p = meta(Algebra::Metabelian), q = meta(Algebra::Metabelian);
    lmeta.record(meta_derive(p * q) == meta_derive(p) * q + p * meta_derive(q), render(p) + " ; " + render(q));
    const GrassElement a = grass(), b = grass();
    lgrass.record(grass_derive(a * b) == grass_derive(a) * b + a * grass_derive(b), render(a) + " ; " + render(b));
  }

  CheckResult power{"delta-power"};
  std::uniform_int_distribution<int> exponent(0, 8), index(1, d);
  for (std::size_t t = 0; t < cases; ++t) {
    const int b = exponent(rng), i = index(rng);
    const GrassElement x = GrassElement::x(d, i), y = GrassElement::y(d, i);
    auto pw = [&](int e) {
      GrassElement r = GrassElement::one(d);
      for (int k = 0; k < e; ++k) r = r * y;
      return r;
    };
    GrassElement expected(d);
    if (b >= 1) expected += x * pw(b - 1) * Rational(b);
    if (b >= 2) expected += pw(b - 2) * grass_bracket(y, x) * Rational(b * (b - 1) / 2);
    power.record(grass_derive(pw(b)) == expected, "y" + std::to_string(i) + "^" + std::to_string(b));
  }

  CheckResult phi{"phi-commutes-with-delta"};
  for (std::size_t t = 0; t < cases; ++t) {
    const GrassElement f = grass();
    std::vector<Rational> alpha;
    for (int i = 1; i < d; ++i) alpha.push_back(random_rational(rng));
    phi.record(phi_alpha(grass_derive(f), alpha) == grass_derive(phi_alpha(f, alpha)), render(f));
  }

  return {metabelian, exchange, central, triple, lcomm, lmeta, lgrass, power, phi};
}

}  // namespace nowicki
