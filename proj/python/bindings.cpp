// Python surface of the library. Elements cross the boundary as text in the
// parse/render grammar, so every value returned here parses back to itself.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "nowicki/checks.hpp"
#include "nowicki/exprio.hpp"
#include "nowicki/kernel.hpp"

namespace py = pybind11;
using namespace nowicki;

namespace {

using Key = std::tuple<std::vector<int>, int>;

Algebra algebra(const std::string& name) {
  const auto a = algebra_from_name(name);
  if (!a) throw std::invalid_argument("unknown algebra '" + name + "' (comm, uv, meta, meta-ideal, grass, wreath)");
  return *a;
}

Key key_tuple(const ComponentKey& k) { return {k.pairs, k.even}; }

std::vector<std::string> rendered(const std::vector<AnyElement>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(render(e));
  return out;
}

py::list kernel(const std::string& name, int d, int degree) {
  const Algebra a = algebra(name);
  py::list out;
  for (const auto& key : component_keys(a, d, degree)) {
    py::dict c;
    c["key"] = key_tuple(key);
    c["basis"] = rendered(kernel_basis(a, d, key));
    out.append(c);
  }
  return out;
}

py::list span(const std::string& name, int d, int max_degree, const std::optional<std::string>& mode,
              const std::string& ranges) {
  const Algebra a = algebra(name);
  SpanMode m = default_mode(a);
  if (mode) {
    if (*mode == "module") m = SpanMode::Module;
    else if (*mode == "subalgebra") m = SpanMode::Subalgebra;
    else throw std::invalid_argument("mode must be 'module' or 'subalgebra'");
  }
  if (ranges != "full" && ranges != "literal") throw std::invalid_argument("ranges must be 'full' or 'literal'");
  std::vector<Candidate> candidates;
  if (a == Algebra::GrassmannVariety) {
    for (auto& g : grassmann_generators(d, ranges == "full" ? GrassRanges::Full : GrassRanges::Literal))
      candidates.push_back({to_string(g.tag), std::move(g.element)});
  } else {
    candidates = default_candidates(a, d, max_degree);
  }
  py::list out;
  for (const auto& r : span_check(a, d, candidates, max_degree, m)) {
    py::dict c;
    c["key"] = key_tuple(r.key);
    c["kernel_dim"] = r.kernel_dim;
    c["span_dim"] = r.span_dim;
    c["products"] = r.products;
    c["missing"] = rendered(r.missing);
    c["ok"] = r.ok();
    out.append(c);
  }
  return out;
}

py::list verify(const std::string& check, int d, const std::string& name, int degree, std::size_t count,
                std::uint64_t seed) {
  std::vector<CheckResult> results;
  if (check == "relations") results = verify_relations(d);
  else if (check == "generators") results = verify_generators(algebra(name), d);
  else if (check == "embedding") results = verify_embedding(d, degree, count ? count : 200, seed);
  else if (check == "identities") results = verify_identities(d, count ? count : 1000, seed);
  else throw std::invalid_argument("check must be relations, generators, embedding or identities");
  py::list out;
  for (const auto& r : results) {
    py::dict c;
    c["name"] = r.name;
    c["cases"] = r.cases;
    c["failures"] = r.failures;
    c["witnesses"] = r.witnesses;
    out.append(c);
  }
  return out;
}

std::vector<std::tuple<std::string, std::string>> straighten_text(const std::string& product, int d) {
  std::vector<std::tuple<std::string, std::string>> out;
  for (const auto& [m, c] : straighten(parse_const_product(product, d), d)) out.emplace_back(to_string(c), to_string(m));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Constants of Weitzenboeck derivations: exact kernels, generators and certificates.";

  m.def("normalize", [](const std::string& text, const std::string& a, int d) { return render(parse(text, algebra(a), d)); },
        py::arg("text"), py::arg("algebra"), py::arg("d"), "Parse an element and return its normal form.");
  m.def("derive", [](const std::string& text, const std::string& a, int d) { return render(derive(parse(text, algebra(a), d))); },
        py::arg("text"), py::arg("algebra"), py::arg("d"), "Apply the derivation delta.");
  m.def("is_constant", [](const std::string& text, const std::string& a, int d) { return is_zero(derive(parse(text, algebra(a), d))); },
        py::arg("text"), py::arg("algebra"), py::arg("d"));
  m.def("to_json", [](const std::string& text, const std::string& a, int d) { return to_json(parse(text, algebra(a), d), algebra(a)); },
        py::arg("text"), py::arg("algebra"), py::arg("d"));
  m.def("from_json",
        [](const std::string& doc) {
          const JsonElement j = from_json(doc);
          return std::make_tuple(algebra_name(j.algebra), j.d, render(j.element));
        },
        py::arg("document"), "Returns (algebra, d, text).");

  m.def("embed", [](const std::string& text, int d) { return render(embed(std::get<MetaElement>(parse(text, Algebra::Metabelian, d)))); },
        py::arg("text"), py::arg("d"), "Image of a metabelian element in the wreath product.");
  m.def("pullback",
        [](const std::string& text, int d) {
          const auto w = std::get<WreathElement>(parse(text, Algebra::WreathModule, d));
          if (!w.poly().is_zero()) throw std::invalid_argument("pullback: element has a polynomial part");
          return render(pullback(w.module()));
        },
        py::arg("text"), py::arg("d"), "Inverse of the embedding on the commutator image.");

  m.def("kernel", &kernel, py::arg("algebra"), py::arg("d"), py::arg("degree"),
        "Basis of the constants in every component of the given total degree.");
  m.def("kernel_dimension",
        [](const std::string& a, int d, const std::vector<int>& pairs, int even) {
          return kernel_dimension(algebra(a), d, ComponentKey{pairs, even});
        },
        py::arg("algebra"), py::arg("d"), py::arg("pairs"), py::arg("even"));
  m.def("span_check", &span, py::arg("algebra"), py::arg("d"), py::arg("max_degree"), py::arg("mode") = py::none(),
        py::arg("ranges") = "full", "Generation certificate per component.");
  m.def("verify", &verify, py::arg("check"), py::arg("d"), py::arg("algebra") = "meta", py::arg("degree") = 4,
        py::arg("count") = 0, py::arg("seed") = 1);
  m.def("straighten", &straighten_text, py::arg("product"), py::arg("d"),
        "Canonical combination of a product such as 'alpha(1,3)*alpha(2,4)' as (coefficient, monomial) pairs.");

  m.def("nowicki_generators",
        [](int d) {
          std::vector<std::string> out;
          for (const auto& g : nowicki_generators(d)) out.push_back(render(g));
          return out;
        },
        py::arg("d"));
  m.def("module_generators",
        [](int d) {
          std::vector<std::tuple<std::string, std::string>> out;
          for (const auto& g : module_generators(d)) out.emplace_back(to_string(g.tag), render(g.preimage));
          return out;
        },
        py::arg("d"), "Generators of the constants of the commutator ideal as (name, element) pairs.");
  m.def("grassmann_generators",
        [](int d, const std::string& ranges) {
          if (ranges != "full" && ranges != "literal") throw std::invalid_argument("ranges must be 'full' or 'literal'");
          std::vector<std::tuple<std::string, std::string>> out;
          for (const auto& g : grassmann_generators(d, ranges == "full" ? GrassRanges::Full : GrassRanges::Literal))
            out.emplace_back(to_string(g.tag), render(g.element));
          return out;
        },
        py::arg("d"), py::arg("ranges") = "full");
}
