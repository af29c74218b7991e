#include "nowicki/kernel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "nowicki/constants.hpp"

namespace nowicki {

unsigned worker_count() {
  if (const char* env = std::getenv("NOWICKI_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Runs f(0..n-1); slots are independent so output order never depends on timing.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

ComponentKey zero_key(int width) { return {std::vector<int>(width, 0), 0}; }

ComponentKey difference(const ComponentKey& a, const ComponentKey& b) {
  ComponentKey out{a.pairs, a.even - b.even};
  for (std::size_t i = 0; i < out.pairs.size(); ++i) out.pairs[i] -= b.pairs[i];
  return out;
}

struct CommBackend {
  using Elem = CommPoly;
  using Mono = CommMonomial;
  int d;
  Alphabet alph;

  int width() const { return alph.size / 2; }
  std::vector<Mono> basis(const ComponentKey& k) const { return comm_component_basis(k); }
  Elem derive(const Elem& e) const { return weitz_derive(e); }
  Elem elem(const Mono& m) const { return CommPoly::monomial(alph, m); }
  Elem zero() const { return CommPoly(alph); }
  Elem one() const { return CommPoly::constant(alph, 1); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  ComponentKey key(const Mono& m) const { return component_of(m); }
  template <class F>
  void each_term(const Elem& e, F&& f) const {
    for (const auto& [m, c] : e.terms()) f(m, c);
  }
  void add(Elem& e, const Mono& m, const Rational& c) const { e.add_term(m, c); }
  AnyElement wrap(const Elem& e) const { return e; }
  Elem unwrap(const AnyElement& a) const {
    const auto* p = std::get_if<CommPoly>(&a);
    if (!p || !(p->alphabet() == alph)) throw std::invalid_argument("element does not belong to this algebra");
    return *p;
  }
};

struct MetaBackend {
  using Elem = MetaElement;
  using Mono = MetaMonomial;
  int d;
  bool ideal;

  int width() const { return d; }
  std::vector<Mono> basis(const ComponentKey& k) const { return meta_component_basis(d, k, ideal); }
  Elem derive(const Elem& e) const { return meta_derive(e); }
  Elem elem(const Mono& m) const { return MetaElement::from_monomial(d, m); }
  Elem zero() const { return MetaElement(d); }
  Elem one() const { return MetaElement::one(d); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem act(const Elem& e, const CommPoly& uv) const { return act_uv(e, uv); }
  ComponentKey key(const Mono& m) const { return component_of(m); }
  template <class F>
  void each_term(const Elem& e, F&& f) const {
    for (const auto& [m, c] : e.terms()) f(m, c);
  }
  void add(Elem& e, const Mono& m, const Rational& c) const { e.add_term(m, c); }
  AnyElement wrap(const Elem& e) const { return e; }
  Elem unwrap(const AnyElement& a) const {
    const auto* p = std::get_if<MetaElement>(&a);
    if (!p || p->d() != d) throw std::invalid_argument("element does not belong to this algebra");
    return *p;
  }
};

struct GrassBackend {
  using Elem = GrassElement;
  using Mono = GrassMonomial;
  int d;

  int width() const { return d; }
  std::vector<Mono> basis(const ComponentKey& k) const { return grass_component_basis(d, k); }
  Elem derive(const Elem& e) const { return grass_derive(e); }
  Elem elem(const Mono& m) const { return GrassElement::from_monomial(d, m); }
  Elem zero() const { return GrassElement(d); }
  Elem one() const { return GrassElement::one(d); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  ComponentKey key(const Mono& m) const { return component_of(m); }
  template <class F>
  void each_term(const Elem& e, F&& f) const {
    for (const auto& [m, c] : e.terms()) f(m, c);
  }
  void add(Elem& e, const Mono& m, const Rational& c) const { e.add_term(m, c); }
  AnyElement wrap(const Elem& e) const { return e; }
  Elem unwrap(const AnyElement& a) const {
    const auto* p = std::get_if<GrassElement>(&a);
    if (!p || p->d() != d) throw std::invalid_argument("element does not belong to this algebra");
    return *p;
  }
};

struct ModuleBackend {
  using Elem = ModuleElement;
  using Mono = std::pair<int, CommMonomial>;
  int d;

  int width() const { return d; }
  std::vector<Mono> basis(const ComponentKey& k) const { return module_component_basis(d, k); }
  Elem derive(const Elem& e) const { return module_derive(e); }
  Elem elem(const Mono& m) const {
    return ModuleElement::generator(d, m.first, CommPoly::monomial(Alphabet::uv(d), m.second));
  }
  Elem zero() const { return ModuleElement(d); }
  Elem act(const Elem& e, const CommPoly& uv) const { return e.times(uv); }
  ComponentKey key(const Mono& m) const { return module_component_of(d, m.first, m.second); }
  template <class F>
  void each_term(const Elem& e, F&& f) const {
    for (const auto& [k, poly] : e.coefficients())
      for (const auto& [m, c] : poly.terms()) f(Mono{k, m}, c);
  }
  void add(Elem& e, const Mono& m, const Rational& c) const {
    e.add(m.first, CommPoly::monomial(Alphabet::uv(d), m.second, c));
  }
  AnyElement wrap(const Elem& e) const { return WreathElement(CommPoly(Alphabet::y(d)), e); }
  Elem unwrap(const AnyElement& a) const {
    const auto* p = std::get_if<WreathElement>(&a);
    if (!p || p->d() != d) throw std::invalid_argument("element does not belong to this algebra");
    if (!p->poly().is_zero()) throw std::invalid_argument("element has a polynomial part outside the module");
    return p->module();
  }
};

template <class F>
decltype(auto) dispatch(Algebra a, int d, F&& f) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  switch (a) {
    case Algebra::Commutative: return f(CommBackend{d, Alphabet::x(d)});
    case Algebra::UVPolynomial: return f(CommBackend{d, Alphabet::uv(d)});
    case Algebra::Metabelian: return f(MetaBackend{d, false});
    case Algebra::MetabelianIdeal: return f(MetaBackend{d, true});
    case Algebra::GrassmannVariety: return f(GrassBackend{d});
    case Algebra::WreathModule: return f(ModuleBackend{d});
  }
  throw std::invalid_argument("unknown algebra");
}

template <class B>
struct Indexed {
  std::vector<typename B::Mono> basis;
  std::map<typename B::Mono, std::size_t> index;
};

template <class B>
Indexed<B> indexed(const B& b, const ComponentKey& key) {
  if (static_cast<int>(key.pairs.size()) != b.width()) throw std::invalid_argument("component key has the wrong width");
  Indexed<B> out;
  if (!key.valid()) return out;
  out.basis = b.basis(key);
  for (std::size_t k = 0; k < out.basis.size(); ++k) out.index.emplace(out.basis[k], k);
  return out;
}

template <class B>
QVector to_vector(const B& b, const Indexed<B>& idx, const typename B::Elem& e) {
  QVector v(idx.basis.size());
  b.each_term(e, [&](const typename B::Mono& m, const Rational& c) {
    auto it = idx.index.find(m);
    if (it == idx.index.end()) throw std::invalid_argument("element has a term outside the component");
    v[it->second] = c;
  });
  return v;
}

template <class B>
typename B::Elem from_vector(const B& b, const Indexed<B>& idx, const QVector& v) {
  typename B::Elem e = b.zero();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!is_zero(v[k])) b.add(e, idx.basis[k], v[k]);
  return e;
}

template <class B>
QMatrix dmatrix(const B& b, const Indexed<B>& src, const ComponentKey& key) {
  Indexed<B> tgt;
  if (key.even > 0) tgt = indexed(b, key.lowered());
  QMatrix m(tgt.basis.size(), src.basis.size());
  for (std::size_t c = 0; c < src.basis.size(); ++c) {
    b.each_term(b.derive(b.elem(src.basis[c])), [&](const typename B::Mono& mono, const Rational& coeff) {
      auto it = tgt.index.find(mono);
      if (it == tgt.index.end()) throw std::logic_error("derivation leaves the lowered component");
      m.set(it->second, c, coeff);
    });
  }
  return m;
}

template <class B>
std::vector<typename B::Elem> kernel_elements(const B& b, const Indexed<B>& src, const ComponentKey& key) {
  std::vector<typename B::Elem> out;
  for (const auto& v : nullspace(dmatrix(b, src, key))) out.push_back(from_vector(b, src, v));
  return out;
}

template <class B>
std::vector<ComponentKey> keys_for(const B& b, int degree) {
  std::vector<ComponentKey> out;
  for (auto& k : keys_of_degree(b.width(), degree))
    if (!b.basis(k).empty()) out.push_back(std::move(k));
  return out;
}

template <class B>
std::vector<std::pair<ComponentKey, typename B::Elem>> split(const B& b, const typename B::Elem& e) {
  std::map<ComponentKey, typename B::Elem> parts;
  b.each_term(e, [&](const typename B::Mono& m, const Rational& c) {
    auto [it, inserted] = parts.try_emplace(b.key(m), b.zero());
    b.add(it->second, m, c);
  });
  return {parts.begin(), parts.end()};
}

// Homogeneous nonscalar parts of every candidate, after the constancy check.
template <class B>
std::vector<std::pair<ComponentKey, typename B::Elem>> candidate_parts(const B& b, const std::vector<Candidate>& cands) {
  std::vector<std::pair<ComponentKey, typename B::Elem>> parts;
  for (const auto& c : cands) {
    auto e = b.unwrap(c.element);
    auto de = b.derive(e);
    bool nonzero = false;
    b.each_term(de, [&](const auto&, const auto&) { nonzero = true; });
    if (nonzero) throw NonConstantCandidate(c.name, b.wrap(de));
    for (auto& [k, part] : split(b, e))
      if (k.total_degree() > 0) parts.emplace_back(k, std::move(part));
  }
  return parts;
}

// Module spans are compared with the constants inside the image of F',
// i.e. the kernel of delta stacked with f -> sum_i v_i f_i.
template <class B>
std::vector<typename B::Elem> target_kernel(const B& b, const Indexed<B>& idx, const ComponentKey& key) {
  if constexpr (requires(const typename B::Elem& e) { image_residual(e); }) {
    const QMatrix dm = dmatrix(b, idx, key);
    std::vector<SparseRow> rows;
    for (std::size_t r = 0; r < dm.rows(); ++r) rows.push_back(dm.row(r));
    std::map<CommMonomial, std::size_t> index;
    for (std::size_t c = 0; c < idx.basis.size(); ++c) {
      const CommPoly residual = image_residual(b.elem(idx.basis[c]));
      for (const auto& [m, coeff] : residual.terms()) {
        auto [it, inserted] = index.try_emplace(m, rows.size());
        if (inserted) rows.emplace_back();
        rows[it->second][c] = coeff;
      }
    }
    QMatrix stacked(rows.size(), idx.basis.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, v] : rows[r]) stacked.set(r, c, v);
    std::vector<typename B::Elem> out;
    for (const auto& v : nullspace(stacked)) out.push_back(from_vector(b, idx, v));
    return out;
  } else {
    return kernel_elements(b, idx, key);
  }
}

template <class B>
SpanReport finish_report(const B& b, const Indexed<B>& idx, const ComponentKey& key, const EchelonSpan& span) {
  SpanReport r;
  r.key = key;
  r.span_dim = span.rank();
  const auto kernel = target_kernel(b, idx, key);
  r.kernel_dim = kernel.size();
  for (const auto& k : kernel)
    if (!span.contains(to_vector(b, idx, k))) r.missing.push_back(b.wrap(k));
  return r;
}

template <class B>
std::vector<SpanReport> span_subalgebra(const B& b, const std::vector<Candidate>& cands, int max_degree) {
  const auto parts = candidate_parts(b, cands);
  std::map<ComponentKey, std::vector<typename B::Elem>> spans;
  spans[zero_key(b.width())] = {b.one()};
  std::vector<SpanReport> reports;
  for (int n = 1; n <= max_degree; ++n) {
    const auto keys = keys_for(b, n);
    std::vector<SpanReport> level(keys.size());
    std::vector<std::vector<typename B::Elem>> kept(keys.size());
    parallel_for(keys.size(), [&](std::size_t i) {
      const auto& key = keys[i];
      const auto idx = indexed(b, key);
      EchelonSpan span(idx.basis.size());
      std::size_t products = 0, dependent = 0;
      for (const auto& [pk, g] : parts) {
        const ComponentKey rest = difference(key, pk);
        if (!rest.valid()) continue;
        auto it = spans.find(rest);
        if (it == spans.end()) continue;
        for (const auto& s : it->second) {
          auto e = b.mul(s, g);
          ++products;
          if (span.insert(to_vector(b, idx, e)))
            kept[i].push_back(std::move(e));
          else
            ++dependent;
        }
      }
      level[i] = finish_report(b, idx, key, span);
      level[i].products = products;
      level[i].relation_witnesses = dependent;
    });
    for (std::size_t i = 0; i < keys.size(); ++i) spans[keys[i]] = std::move(kept[i]);
    for (auto& r : level) reports.push_back(std::move(r));
  }
  return reports;
}

template <class B>
std::vector<SpanReport> span_module(const B& b, int d, const std::vector<Candidate>& cands, int max_degree) {
  const auto parts = candidate_parts(b, cands);
  // canonical expansions grouped by their image grading in the width-d keys
  std::map<ComponentKey, std::vector<CommPoly>> multipliers;
  for (int n = 0; n <= max_degree; ++n)
    for (const auto& uvkey : keys_of_degree(2 * d, n)) {
      const auto basis = canonical_basis(d, uvkey);
      if (basis.empty()) continue;
      ComponentKey proj{std::vector<int>(d, 0), uvkey.even};
      for (int j = 0; j < d; ++j) proj.pairs[j] = uvkey.pairs[j] + uvkey.pairs[j + d];
      auto& list = multipliers[proj];
      for (const auto& m : basis) list.push_back(expand(m.gens, d));
    }
  std::vector<SpanReport> reports;
  for (int n = 1; n <= max_degree; ++n) {
    const auto keys = keys_for(b, n);
    std::vector<SpanReport> level(keys.size());
    parallel_for(keys.size(), [&](std::size_t i) {
      const auto& key = keys[i];
      const auto idx = indexed(b, key);
      EchelonSpan span(idx.basis.size());
      std::size_t products = 0, dependent = 0;
      for (const auto& [pk, g] : parts) {
        const ComponentKey rest = difference(key, pk);
        if (!rest.valid()) continue;
        auto it = multipliers.find(rest);
        if (it == multipliers.end()) continue;
        for (const auto& m : it->second) {
          ++products;
          if (!span.insert(to_vector(b, idx, b.act(g, m)))) ++dependent;
        }
      }
      level[i] = finish_report(b, idx, key, span);
      level[i].products = products;
      level[i].relation_witnesses = dependent;
    });
    for (auto& r : level) reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace

NonConstantCandidate::NonConstantCandidate(std::string name, AnyElement derivative)
    : std::invalid_argument("candidate " + name + " is not a constant"),
      name_(std::move(name)),
      derivative_(std::move(derivative)) {}

int key_width(Algebra a, int d) { return a == Algebra::UVPolynomial ? 2 * d : d; }

std::vector<ComponentKey> component_keys(Algebra a, int d, int degree) {
  return dispatch(a, d, [&](const auto& b) { return keys_for(b, degree); });
}

std::vector<AnyElement> component_basis(Algebra a, int d, const ComponentKey& key) {
  return dispatch(a, d, [&](const auto& b) {
    std::vector<AnyElement> out;
    for (const auto& m : indexed(b, key).basis) out.push_back(b.wrap(b.elem(m)));
    return out;
  });
}

std::size_t component_dimension(Algebra a, int d, const ComponentKey& key) {
  return dispatch(a, d, [&](const auto& b) { return indexed(b, key).basis.size(); });
}

QMatrix derivation_matrix(Algebra a, int d, const ComponentKey& key) {
  return dispatch(a, d, [&](const auto& b) { return dmatrix(b, indexed(b, key), key); });
}

std::vector<AnyElement> kernel_basis(Algebra a, int d, const ComponentKey& key) {
  return dispatch(a, d, [&](const auto& b) {
    std::vector<AnyElement> out;
    for (const auto& e : kernel_elements(b, indexed(b, key), key)) out.push_back(b.wrap(e));
    return out;
  });
}

std::size_t kernel_dimension(Algebra a, int d, const ComponentKey& key) {
  return dispatch(a, d, [&](const auto& b) {
    const auto idx = indexed(b, key);
    return idx.basis.size() - rank(dmatrix(b, idx, key));
  });
}

QVector coordinates(Algebra a, int d, const ComponentKey& key, const AnyElement& e) {
  return dispatch(a, d, [&](const auto& b) { return to_vector(b, indexed(b, key), b.unwrap(e)); });
}

std::vector<std::pair<ComponentKey, AnyElement>> homogeneous_parts(Algebra a, int d, const AnyElement& e) {
  return dispatch(a, d, [&](const auto& b) {
    std::vector<std::pair<ComponentKey, AnyElement>> out;
    for (const auto& [k, part] : split(b, b.unwrap(e))) out.emplace_back(k, b.wrap(part));
    return out;
  });
}

std::vector<SpanReport> span_check(Algebra a, int d, const std::vector<Candidate>& candidates, int max_degree,
                                   SpanMode mode) {
  const bool module_algebra = a == Algebra::MetabelianIdeal || a == Algebra::WreathModule;
  if ((mode == SpanMode::Module) != module_algebra)
    throw std::invalid_argument("span mode does not match algebra " + algebra_name(a));
  return dispatch(a, d, [&](const auto& b) -> std::vector<SpanReport> {
    using B = std::decay_t<decltype(b)>;
    if constexpr (requires(const B& x, const typename B::Elem& e, const CommPoly& p) { x.act(e, p); }) {
      if (mode == SpanMode::Module) return span_module(b, d, candidates, max_degree);
    }
    if constexpr (requires(const B& x, const typename B::Elem& e) { x.mul(e, e); }) {
      if (mode == SpanMode::Subalgebra) return span_subalgebra(b, candidates, max_degree);
    }
    throw std::invalid_argument("span mode is not available for " + algebra_name(a));
  });
}

SpanMode default_mode(Algebra a) {
  return a == Algebra::MetabelianIdeal || a == Algebra::WreathModule ? SpanMode::Module : SpanMode::Subalgebra;
}

std::vector<Candidate> module_products(int d, int max_degree) {
  std::vector<Candidate> out;
  for (const auto& g : module_generators(d)) {
    if (g.preimage.is_zero()) continue;
    const int gdeg = g.preimage.terms().begin()->first.degree();
    for (int n = 0; n + gdeg <= max_degree; ++n)
      for (const auto& uvkey : keys_of_degree(2 * d, n))
        for (const auto& m : canonical_basis(d, uvkey)) {
          std::string name = to_string(g.tag);
          if (!m.gens.empty()) name += "*" + to_string(m);
          out.push_back({name, act_uv(g.preimage, expand(m.gens, d))});
        }
  }
  return out;
}

std::vector<Candidate> default_candidates(Algebra a, int d, int max_degree) {
  std::vector<Candidate> out;
  switch (a) {
    case Algebra::Commutative: {
      auto gens = nowicki_generators(d);
      std::size_t k = 0;
      for (int i = 1; i <= d; ++i) out.push_back({"x" + std::to_string(2 * i - 1), std::move(gens[k++])});
      for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
          out.push_back({"det(" + std::to_string(i) + "," + std::to_string(j) + ")", std::move(gens[k++])});
      break;
    }
    case Algebra::Metabelian:
      for (auto& g : algebra_generators(d))
        if (!g.module_generator) out.push_back({g.name, std::move(g.element)});
      for (auto& c : module_products(d, max_degree)) out.push_back(std::move(c));
      break;
    case Algebra::MetabelianIdeal:
      for (auto& g : module_generators(d)) out.push_back({to_string(g.tag), std::move(g.preimage)});
      break;
    case Algebra::WreathModule:
      for (auto& g : module_generators(d))
        out.push_back({to_string(g.tag), WreathElement(CommPoly(Alphabet::y(d)), std::move(g.expansion))});
      break;
    case Algebra::GrassmannVariety:
      for (auto& g : grassmann_generators(d)) out.push_back({to_string(g.tag), std::move(g.element)});
      break;
    case Algebra::UVPolynomial:
      for (int p = 1; p <= d; ++p) {
        out.push_back({to_string(ConstGen::u(p)), expand(ConstGen::u(p), d)});
        out.push_back({to_string(ConstGen::v(p)), expand(ConstGen::v(p), d)});
      }
      for (int p = 1; p <= d; ++p)
        for (int q = 1; q <= d; ++q) {
          std::vector<ConstGen> gs{ConstGen::gamma(p, q)};
          if (p < q) {
            gs.push_back(ConstGen::alpha(p, q));
            gs.push_back(ConstGen::beta(p, q));
          }
          for (const auto& g : gs) out.push_back({to_string(g), expand(g, d)});
        }
      break;
  }
  return out;
}

namespace {

// Graded piece of F_{2d}(G): total degree, degree in {x_d, y_d}, degree in Y.
struct Piece {
  int n, t, y;
  auto operator<=>(const Piece&) const = default;
};

Piece piece_of(const GrassMonomial& m, int d) {
  const ComponentKey k = component_of(m);
  return {k.total_degree(), k.pairs[d - 1], k.even};
}

std::vector<GrassMonomial> piece_basis(int d, const Piece& p) {
  std::vector<GrassMonomial> out;
  if (p.n < 0 || p.t < 0 || p.y < 0 || p.t > p.n || p.y > p.n) return out;
  for (const auto& key : keys_of_degree(d, p.n)) {
    if (key.pairs[d - 1] != p.t || key.even != p.y) continue;
    for (auto& m : grass_component_basis(d, key)) out.push_back(std::move(m));
  }
  return out;
}

// Rows: coordinates of each image in a monomial index grown on demand.
void append_rows(std::vector<std::map<std::size_t, Rational>>& rows, std::map<GrassMonomial, std::size_t>& index,
                 std::size_t column, const GrassElement& image) {
  for (const auto& [m, c] : image.terms()) {
    auto [it, inserted] = index.try_emplace(m, rows.size());
    if (inserted) rows.emplace_back();
    rows[it->second][column] = c;
  }
}

QMatrix stack(const std::vector<std::vector<std::map<std::size_t, Rational>>>& blocks, std::size_t cols) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  QMatrix m(total, cols);
  std::size_t r = 0;
  for (const auto& b : blocks)
    for (const auto& row : b) {
      for (const auto& [c, v] : row) m.set(r, c, v);
      ++r;
    }
  return m;
}

std::vector<IdealReport> ideal_check(int d, const std::vector<GrassElement>& ideal, int max_degree,
                                     const std::function<QMatrix(const std::vector<GrassMonomial>&, const Piece&)>& kernel_matrix) {
  std::vector<std::pair<Piece, GrassElement>> parts;
  for (const auto& g : ideal) {
    std::map<Piece, GrassElement> split;
    for (const auto& [m, c] : g.terms()) split.try_emplace(piece_of(m, d), GrassElement(d)).first->second.add_term(m, c);
    for (auto& [p, e] : split) parts.emplace_back(p, std::move(e));
  }
  std::vector<Piece> pieces;
  for (int n = 1; n <= max_degree; ++n)
    for (int t = 1; t <= n; ++t)
      for (int y = 0; y <= n; ++y) pieces.push_back({n, t, y});
  std::vector<IdealReport> level(pieces.size());
  std::vector<char> used(pieces.size(), 0);
  parallel_for(pieces.size(), [&](std::size_t i) {
    const Piece& p = pieces[i];
    const auto basis = piece_basis(d, p);
    if (basis.empty()) return;
    std::map<GrassMonomial, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
    auto vec = [&](const GrassElement& e) {
      QVector v(basis.size());
      for (const auto& [m, c] : e.terms()) v[index.at(m)] = c;
      return v;
    };
    EchelonSpan span(basis.size());
    for (const auto& [gp, g] : parts) {
      const Piece rest{p.n - gp.n, p.t - gp.t, p.y - gp.y};
      for (const auto& h : piece_basis(d, rest)) span.insert(vec(GrassElement::from_monomial(d, h) * g));
    }
    IdealReport r;
    r.degree = p.n;
    r.top_degree = p.t;
    r.y_degree = p.y;
    for (const auto& v : nullspace(kernel_matrix(basis, p))) {
      ++r.kernel_dim;
      if (span.contains(v)) {
        ++r.in_ideal;
        continue;
      }
      GrassElement e(d);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!is_zero(v[k])) e.add_term(basis[k], v[k]);
      r.missing.push_back(std::move(e));
    }
    level[i] = std::move(r);
    used[i] = 1;
  });
  std::vector<IdealReport> out;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (used[i]) out.push_back(std::move(level[i]));
  return out;
}

QMatrix phi_matrix(int d, const std::vector<GrassMonomial>& basis, const std::vector<std::vector<Rational>>& alphas) {
  std::vector<std::vector<std::map<std::size_t, Rational>>> blocks;
  for (const auto& alpha : alphas) {
    std::vector<std::map<std::size_t, Rational>> rows;
    std::map<GrassMonomial, std::size_t> index;
    for (std::size_t c = 0; c < basis.size(); ++c)
      append_rows(rows, index, c, phi_alpha(GrassElement::from_monomial(d, basis[c]), alpha));
    blocks.push_back(std::move(rows));
  }
  return stack(blocks, basis.size());
}

}  // namespace

std::vector<IdealReport> lemma_ideal_check(int d, const std::vector<Rational>& alpha, int max_degree) {
  const LemmaElements le = lemma_elements(d, alpha);
  std::vector<GrassElement> ideal{le.omega, le.mu, le.nu};
  for (int pos = 1; pos <= 2 * d; ++pos) ideal.push_back(grass_bracket(le.omega, GrassElement::letter(d, pos)));
  return ideal_check(d, ideal, max_degree,
                     [&](const std::vector<GrassMonomial>& basis, const Piece&) { return phi_matrix(d, basis, {alpha}); });
}

std::vector<IdealReport> common_kernel_ideal_check(const std::vector<GrassElement>& ideal, int max_degree,
                                                   bool constants_only) {
  const int d = 2;
  for (const auto& g : ideal)
    if (g.d() != d) throw std::invalid_argument("common_kernel_ideal_check works at d = 2");
  return ideal_check(d, ideal, max_degree, [&](const std::vector<GrassMonomial>& basis, const Piece& p) {
    // phi_alpha(f) is a polynomial of degree <= n in the scalar alpha, so n + 1
    // distinct nonzero values detect vanishing for all alpha.
    std::vector<std::vector<Rational>> alphas;
    for (int k = 1; k <= p.n + 1; ++k) alphas.push_back({Rational(k)});
    QMatrix m = phi_matrix(d, basis, alphas);
    if (!constants_only) return m;
    std::vector<std::map<std::size_t, Rational>> rows;
    std::map<GrassMonomial, std::size_t> index;
    for (std::size_t c = 0; c < basis.size(); ++c)
      append_rows(rows, index, c, grass_derive(GrassElement::from_monomial(d, basis[c])));
    std::vector<std::map<std::size_t, Rational>> phi_rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& [c, v] : m.row(r)) phi_rows[r][c] = v;
    return stack({phi_rows, rows}, basis.size());
  });
}

}  // namespace nowicki
