// Batch command-line front end. Exit codes: 0 success, 1 a check failed,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nowicki/checks.hpp"
#include "nowicki/constants.hpp"
#include "nowicki/exprio.hpp"
#include "nowicki/kernel.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace nowicki;

constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string algebra = "comm";
  int d = 2;
  int degree = 2;
  int max_degree = 5;
  std::string key;
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 1;
  std::size_t count = 0;
  std::string kind;
  std::string mode;
  std::string ranges = "full";
  std::string expression;
  bool literal_s = false;
};

Algebra algebra_arg(const std::string& name) {
  const auto a = algebra_from_name(name);
  if (!a) throw UsageError("unknown algebra '" + name + "' (comm, uv, meta, meta-ideal, grass, wreath)");
  return *a;
}

ComponentKey key_arg(const std::string& text, int width) {
  ComponentKey key;
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw UsageError("component key must look like 'p1,...,pn;e'");
  std::stringstream pairs(text.substr(0, semi));
  for (std::string part; std::getline(pairs, part, ',');) {
    try {
      key.pairs.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw UsageError("bad component key '" + text + "'");
    }
  }
  try {
    key.even = std::stoi(text.substr(semi + 1));
  } catch (const std::exception&) {
    throw UsageError("bad component key '" + text + "'");
  }
  if (static_cast<int>(key.pairs.size()) != width)
    throw UsageError("component key needs " + std::to_string(width) + " pair degrees");
  if (!key.valid()) throw UsageError("component key '" + text + "' is not a valid multidegree");
  return key;
}

json element_json(const AnyElement& e, Algebra a) { return json::parse(to_json(e, a)); }

json check_json(const CheckResult& r) {
  return {{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"witnesses", r.witnesses}};
}

std::string check_text(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.failures << " failures\n";
    for (const auto& w : r.witnesses) out << "    " << w << "\n";
  }
  return out.str();
}

bool all_ok(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.ok()) return false;
  return true;
}

struct Report {
  std::string text;
  json results = json::array();
  json summary = json::object();
  int code = 0;
};

Report cmd_kernel(const Options& o) {
  const Algebra a = algebra_arg(o.algebra);
  std::vector<ComponentKey> keys;
  if (!o.key.empty())
    keys.push_back(key_arg(o.key, key_width(a, o.d)));
  else
    keys = component_keys(a, o.d, o.degree);
  Report r;
  std::ostringstream text;
  std::size_t total = 0;
  for (const auto& key : keys) {
    const auto basis = kernel_basis(a, o.d, key);
    total += basis.size();
    text << "component " << to_string(key) << "  dim " << basis.size() << "\n";
    json items = json::array();
    for (const auto& e : basis) {
      text << "  " << render(e) << "\n";
      items.push_back(element_json(e, a));
    }
    r.results.push_back({{"component", to_string(key)}, {"kernel_dim", basis.size()}, {"basis", items}});
  }
  text << "total dim " << total << "\n";
  r.text = text.str();
  r.summary = {{"total_kernel_dim", total}};
  return r;
}

Report cmd_verify(const Options& o) {
  std::vector<CheckResult> results;
  if (o.kind == "relations")
    results = verify_relations(o.d, o.literal_s);
  else if (o.kind == "generators")
    results = verify_generators(algebra_arg(o.algebra), o.d);
  else if (o.kind == "embedding")
    results = verify_embedding(o.d, o.degree, o.count ? o.count : 200, o.seed);
  else if (o.kind == "identities")
    results = verify_identities(o.d, o.count ? o.count : 1000, o.seed);
  else
    throw UsageError("verify expects relations, generators, embedding or identities");
  Report r;
  for (const auto& c : results) r.results.push_back(check_json(c));
  r.text = check_text(results);
  r.code = all_ok(results) ? 0 : kFailure;
  r.summary = {{"passed", r.code == 0}};
  return r;
}

Report cmd_span(const Options& o) {
  const Algebra a = algebra_arg(o.algebra);
  SpanMode mode = default_mode(a);
  if (o.mode == "module") mode = SpanMode::Module;
  else if (o.mode == "subalgebra") mode = SpanMode::Subalgebra;
  else if (!o.mode.empty()) throw UsageError("--mode expects module or subalgebra");
  std::vector<Candidate> candidates;
  if (a == Algebra::GrassmannVariety) {
    if (o.ranges != "full" && o.ranges != "literal") throw UsageError("--ranges expects full or literal");
    for (auto& g : grassmann_generators(o.d, o.ranges == "full" ? GrassRanges::Full : GrassRanges::Literal))
      candidates.push_back({to_string(g.tag), std::move(g.element)});
  } else {
    candidates = default_candidates(a, o.d, o.max_degree);
  }
  const auto reports = span_check(a, o.d, candidates, o.max_degree, mode);
  Report r;
  std::ostringstream text;
  text << "component        kernel  span  products  dependent  status\n";
  std::size_t failed = 0;
  for (const auto& s : reports) {
    if (!s.ok()) ++failed;
    char line[160];
    std::snprintf(line, sizeof line, "%-16s %6zu %5zu %9zu %10zu  %s\n", to_string(s.key).c_str(), s.kernel_dim,
                  s.span_dim, s.products, s.relation_witnesses, s.ok() ? "ok" : "MISSING");
    text << line;
    json missing = json::array();
    for (const auto& m : s.missing) {
      text << "    missing: " << render(m) << "\n";
      missing.push_back(element_json(m, a));
    }
    r.results.push_back({{"component", to_string(s.key)},
                         {"kernel_dim", s.kernel_dim},
                         {"span_dim", s.span_dim},
                         {"products", s.products},
                         {"relation_witnesses", s.relation_witnesses},
                         {"missing", missing}});
  }
  text << candidates.size() << " candidates, " << reports.size() << " components, " << failed << " incomplete\n";
  r.text = text.str();
  r.code = failed ? kFailure : 0;
  r.summary = {{"candidates", candidates.size()}, {"components", reports.size()}, {"incomplete", failed}};
  return r;
}

Report cmd_straighten(const Options& o) {
  const auto product = parse_const_product(o.expression, o.d);
  const auto combination = straighten(product, o.d);
  Report r;
  std::string line;
  bool first = true;
  for (const auto& [m, c] : combination) {
    const bool negative = sgn(c) < 0;
    line += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    const Rational a = abs(c);
    const std::string body = to_string(m);
    if (a != 1 || body == "1") line += to_string(a) + (body == "1" ? "" : "*");
    if (body != "1") line += body;
    first = false;
    r.results.push_back({{"coeff", to_string(c)}, {"monomial", body}});
  }
  if (first) line = "0";
  r.text = line + "\n";
  r.summary = {{"expansion", element_json(expand(product, o.d), Algebra::UVPolynomial)}};
  return r;
}

Report cmd_normalize(const Options& o) {
  const Algebra a = algebra_arg(o.algebra);
  const AnyElement e = parse(o.expression, a, o.d);
  Report r;
  r.text = render(e) + "\n";
  r.results.push_back(element_json(e, a));
  return r;
}

json config_json(const std::string& command, const Options& o) {
  json c = {{"d", o.d}, {"format", o.format}};
  if (command == "kernel" || command == "span" || command == "normalize" ||
      (command == "verify" && o.kind == "generators"))
    c["algebra"] = o.algebra;
  if (command == "kernel") {
    if (o.key.empty()) c["degree"] = o.degree;
    else c["key"] = o.key;
  }
  if (command == "span") {
    c["max_degree"] = o.max_degree;
    if (!o.mode.empty()) c["mode"] = o.mode;
    if (o.algebra == "grass" || o.algebra == "grassmann") c["ranges"] = o.ranges;
  }
  if (command == "verify") {
    c["check"] = o.kind;
    if (o.kind == "embedding") c["degree"] = o.degree;
    if (o.kind == "embedding" || o.kind == "identities") {
      c["seed"] = o.seed;
      c["count"] = o.count ? o.count : (o.kind == "embedding" ? 200 : 1000);
    }
    if (o.kind == "relations") c["literal_s"] = o.literal_s;
  }
  if (command == "straighten" || command == "normalize") c["expression"] = o.expression;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constants of Weitzenboeck derivations: kernels, relations, generation certificates"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--d", o.d, "rank parameter d (2d variables)")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", o.output, "write the report to this file");
  };

  auto* kernel = app.add_subcommand("kernel", "basis of the constants in each component");
  common(kernel);
  kernel->add_option("--algebra", o.algebra, "comm, uv, meta, meta-ideal, grass, wreath");
  kernel->add_option("--degree", o.degree, "total degree")->check(CLI::NonNegativeNumber);
  kernel->add_option("--key", o.key, "single component 'p1,...,pn;e'");

  auto* verify = app.add_subcommand("verify", "relations, generators, embedding or identities");
  common(verify);
  verify->add_option("check", o.kind, "relations | generators | embedding | identities")->required();
  verify->add_option("--algebra", o.algebra, "algebra for 'generators'");
  verify->add_option("--degree", o.degree, "degree bound for 'embedding'")->check(CLI::NonNegativeNumber);
  verify->add_option("--count", o.count, "random cases (embedding: 200, identities: 1000)");
  verify->add_option("--seed", o.seed, "seed for randomized checks");
  verify->add_flag("--literal-s", o.literal_s, "also check the literal reading of relation S");

  auto* span = app.add_subcommand("span", "generation certificate per component");
  common(span);
  span->add_option("--algebra", o.algebra, "comm, uv, meta, meta-ideal, grass, wreath");
  span->add_option("--max-degree", o.max_degree, "total degree bound")->check(CLI::NonNegativeNumber);
  span->add_option("--mode", o.mode, "module or subalgebra (default by algebra)");
  span->add_option("--ranges", o.ranges, "grass only: full or literal W_0/Z_0 index ranges");

  auto* straighten = app.add_subcommand("straighten", "canonical form of a product of u, v, alpha, beta, gamma");
  common(straighten);
  straighten->add_option("expression", o.expression, "e.g. \"alpha(1,3)*alpha(2,4)\"")->required();

  auto* normalize = app.add_subcommand("normalize", "parse an element and print its normal form");
  common(normalize);
  normalize->add_option("--algebra", o.algebra, "comm, uv, meta, meta-ideal, grass, wreath");
  normalize->add_option("expression", o.expression, "element text")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Report report;
  try {
    if (command == "kernel") report = cmd_kernel(o);
    else if (command == "verify") report = cmd_verify(o);
    else if (command == "span") report = cmd_span(o);
    else if (command == "straighten") report = cmd_straighten(o);
    else report = cmd_normalize(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailure;
  }

  std::string payload = report.text;
  if (o.format == "json") {
    json doc = {{"command", command}, {"config", config_json(command, o)}, {"results", report.results}};
    if (!report.summary.empty()) doc["summary"] = report.summary;
    payload = doc.dump(2) + "\n";
  }
  if (o.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream file(o.output);
    if (!file) {
      std::cerr << "error: cannot write " << o.output << "\n";
      return kUsage;
    }
    file << payload;
  }
  return report.code;
}
