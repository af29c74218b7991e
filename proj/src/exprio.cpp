#include "nowicki/exprio.hpp"

#include <cctype>
#include <optional>

#include "json.hpp"

namespace nowicki {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

SchemaError::SchemaError(const std::string& message, std::string pointer)
    : std::invalid_argument(message + " at " + (pointer.empty() ? std::string("/") : pointer)),
      pointer_(std::move(pointer)) {}

namespace {

struct Var {
  char letter;
  int index;
  std::size_t pos;
};

struct Factor {
  bool commutator = false;
  std::vector<Var> vars;  // one entry unless commutator
  int power = 1;
};

struct Term {
  Rational coeff = 1;
  std::vector<Factor> factors;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  std::vector<Term> expr() {
    std::vector<Term> out;
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    for (;;) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      skip();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+', '-' or end of input");
      negative = get() == '-';
    }
    return out;
  }

 private:
  Term term() {
    Term t;
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = rational();
      skip();
      if (peek() == '*') {
        get();
        skip();
      } else if (!starts_factor()) {
        return t;
      }
    }
    t.factors.push_back(factor());
    for (;;) {
      skip();
      if (peek() != '*') break;
      get();
      t.factors.push_back(factor());
    }
    return t;
  }

  bool starts_factor() const {
    const char c = peek();
    return c == '[' || c == 'x' || c == 'y' || c == 'u' || c == 'v' || c == 'a';
  }

  Factor factor() {
    skip();
    Factor f;
    if (peek() == '[') {
      const std::size_t open = pos_;
      get();
      f.commutator = true;
      f.vars.push_back(var());
      skip();
      while (peek() == ',') {
        get();
        f.vars.push_back(var());
        skip();
      }
      if (peek() != ']') fail("expected ',' or ']'");
      get();
      if (f.vars.size() < 2) throw ParseError("commutator needs at least two entries", open);
      return f;
    }
    f.vars.push_back(var());
    skip();
    if (peek() == '^') {
      get();
      skip();
      f.power = static_cast<int>(nat());
    }
    return f;
  }

  Var var() {
    skip();
    const std::size_t at = pos_;
    const char c = peek();
    if (c != 'x' && c != 'y' && c != 'u' && c != 'v' && c != 'a') fail("expected a variable");
    get();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index");
    const long n = nat();
    return {c, static_cast<int>(n), at};
  }

  long nat() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a natural number");
    long n = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      n = n * 10 + (get() - '0');
      if (n > 1000000) fail("number too large");
    }
    return n;
  }

  Rational rational() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    std::size_t end = pos_;
    skip();
    if (peek() == '/') {
      get();
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
      const std::size_t dstart = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) get();
      const std::string text = std::string(s_.substr(start, end - start)) + "/" + std::string(s_.substr(dstart, pos_ - dstart));
      try {
        return parse_rational(text);
      } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational '" + text + "'", start);
      }
    }
    return parse_rational(s_.substr(start, end - start));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  std::string_view s_;
  std::size_t pos_ = 0;
};

[[noreturn]] void range_error(const Var& v, const std::string& why) {
  throw ParseError(std::string(1, v.letter) + std::to_string(v.index) + " " + why, v.pos);
}

void require(const Var& v, std::string_view letters, int max) {
  if (letters.find(v.letter) == std::string_view::npos)
    range_error(v, "is not a variable of this algebra");
  if (v.index < 1 || v.index > max) range_error(v, "is out of range 1.." + std::to_string(max));
}

CommPoly eval_comm(const std::vector<Term>& terms, Alphabet alph, int d) {
  const bool uv = alph.name == AlphabetName::UV;
  const int half = 2 * d;
  CommPoly out(alph);
  for (const Term& t : terms) {
    CommMonomial m{std::vector<int>(alph.size, 0)};
    bool zero = false;
    for (const Factor& f : t.factors) {
      for (const Var& v : f.vars) require(v, uv ? "uv" : "x", half);
      if (f.commutator) {
        zero = true;  // commuting variables
        continue;
      }
      const Var& v = f.vars.front();
      m.exps[(v.letter == 'v' ? half : 0) + v.index - 1] += f.power;
    }
    if (!zero) out.add_term(m, t.coeff);
  }
  return out;
}

MetaElement eval_meta(const std::vector<Term>& terms, int d) {
  RawExpression raw;
  for (const Term& t : terms) {
    RawWord word;
    for (const Factor& f : t.factors) {
      std::vector<int> letters;
      for (const Var& v : f.vars) {
        require(v, "x", 2 * d);
        letters.push_back(v.index);
      }
      if (f.commutator)
        word.push_back({true, letters});
      else
        for (int k = 0; k < f.power; ++k) word.push_back({false, letters});
    }
    raw.emplace_back(t.coeff, std::move(word));
  }
  return meta_normalize(d, raw);
}

GrassElement eval_grass(const std::vector<Term>& terms, int d) {
  GrassElement out(d);
  for (const Term& t : terms) {
    GrassElement acc = GrassElement::one(d);
    for (const Factor& f : t.factors) {
      std::vector<GrassElement> letters;
      for (const Var& v : f.vars) {
        require(v, "xy", d);
        letters.push_back(GrassElement::letter(d, v.letter == 'x' ? xpos(v.index) : ypos(v.index)));
      }
      if (f.commutator) {
        acc = acc * grass_bracket(letters);
      } else {
        for (int k = 0; k < f.power; ++k) acc = acc * letters.front();
      }
    }
    out += acc * t.coeff;
  }
  return out;
}

WreathElement eval_wreath(const std::vector<Term>& terms, int d) {
  WreathElement out(d);
  auto letter = [d](const Var& v) {
    require(v, "ya", 2 * d);
    return v.letter == 'y' ? WreathElement::y(d, v.index) : WreathElement::a(d, v.index);
  };
  for (const Term& t : terms) {
    WreathElement acc = WreathElement::one(d);
    CommPoly coeff = CommPoly::constant(Alphabet::uv(d), 1);
    std::optional<Var> uv_factor;
    for (const Factor& f : t.factors) {
      if (!f.commutator && (f.vars.front().letter == 'u' || f.vars.front().letter == 'v')) {
        const Var& v = f.vars.front();
        require(v, "uv", 2 * d);
        coeff = coeff * (v.letter == 'u' ? uvar(d, v.index) : vvar(d, v.index)).pow(f.power);
        uv_factor = v;
        continue;
      }
      if (f.commutator) {
        WreathElement br = letter(f.vars.front());
        for (std::size_t k = 1; k < f.vars.size(); ++k) {
          const WreathElement next = letter(f.vars[k]);
          br = wreath_mul(br, next) - wreath_mul(next, br);
        }
        acc = wreath_mul(acc, br);
      } else {
        const WreathElement l = letter(f.vars.front());
        for (int k = 0; k < f.power; ++k) acc = wreath_mul(acc, l);
      }
    }
    if (uv_factor) {
      if (!acc.poly().is_zero())
        range_error(*uv_factor, "may only multiply a term that lies in the module");
      acc = WreathElement(CommPoly(Alphabet::y(d)), acc.module().times(coeff));
    }
    out += acc * t.coeff;
  }
  return out;
}

// ---- rendering ----

std::string coeff_prefix(const Rational& c, bool first, bool has_body) {
  std::string s;
  const bool negative = sgn(c) < 0;
  if (first)
    s = negative ? "-" : "";
  else
    s = negative ? " - " : " + ";
  const Rational a = abs(c);
  if (!has_body) return s + to_string(a);
  if (a != 1) s += to_string(a) + "*";
  return s;
}

void join(std::string& body, const std::string& piece) {
  if (!body.empty()) body += "*";
  body += piece;
}

std::string power(const std::string& name, int e) { return e == 1 ? name : name + "^" + std::to_string(e); }

std::string comm_body(const Alphabet& alph, const CommMonomial& m) {
  std::string body;
  for (std::size_t k = 0; k < m.exps.size(); ++k)
    if (m.exps[k] > 0) join(body, power(alph.variable_name(static_cast<int>(k)), m.exps[k]));
  return body;
}

template <class Terms, class Body>
std::string render_terms(const Terms& terms, Body&& body) {
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational coeff = c;
    const std::string b = body(m, coeff);
    out += coeff_prefix(coeff, first, !b.empty()) + b;
    first = false;
  }
  return out.empty() ? "0" : out;
}

std::string render_comm(const CommPoly& p) {
  return render_terms(p.terms(), [&](const CommMonomial& m, Rational&) { return comm_body(p.alphabet(), m); });
}

std::string render_meta(const MetaElement& e) {
  return render_terms(e.terms(), [](const MetaMonomial& m, Rational& c) {
    std::string body;
    for (std::size_t k = 0; k < m.prefix.size(); ++k)
      if (m.prefix[k] > 0) join(body, power("x" + std::to_string(k + 1), m.prefix[k]));
    if (m.commutator) {
      int i = m.head_i, j = m.head_j;
      if (sgn(c) < 0) {
        std::swap(i, j);
        c = -c;
      }
      std::string br = "[x" + std::to_string(i) + ",x" + std::to_string(j);
      for (int t : m.tail) br += ",x" + std::to_string(t);
      join(body, br + "]");
    }
    return body;
  });
}

std::string render_grass(const GrassElement& e) {
  return render_terms(e.terms(), [](const GrassMonomial& m, Rational&) {
    std::string body;
    for (std::size_t k = 0; k < m.exps.size(); ++k)
      if (m.exps[k] > 0) join(body, power(grass_letter_name(static_cast<int>(k) + 1), m.exps[k]));
    for (std::size_t k = 0; k + 1 < m.block.size(); k += 2)
      join(body, "[" + grass_letter_name(m.block[k]) + "," + grass_letter_name(m.block[k + 1]) + "]");
    return body;
  });
}

std::string render_wreath(const WreathElement& w) {
  std::vector<std::pair<std::string, Rational>> pieces;
  const Alphabet y = Alphabet::y(w.d());
  for (const auto& [m, c] : w.poly().terms()) pieces.emplace_back(comm_body(y, m), c);
  const Alphabet uv = Alphabet::uv(w.d());
  for (const auto& [k, poly] : w.module().coefficients())
    for (const auto& [m, c] : poly.terms()) {
      std::string body = "a" + std::to_string(k);
      const std::string rest = comm_body(uv, m);
      if (!rest.empty()) body += "*" + rest;
      pieces.emplace_back(body, c);
    }
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    out += coeff_prefix(pieces[i].second, i == 0, !pieces[i].first.empty()) + pieces[i].first;
  return out.empty() ? "0" : out;
}

// ---- JSON ----

using json = nlohmann::ordered_json;

json term_json(const Rational& c, const std::vector<int>& exps, const json& comm) {
  return {{"coeff", to_string(c)}, {"exponents", exps}, {"comm", comm}};
}

int element_d(const AnyElement& e) {
  return std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CommPoly>)
          return x.alphabet().name == AlphabetName::UV ? x.alphabet().size / 4 : x.alphabet().size / 2;
        else
          return x.d();
      },
      e);
}

std::string pointer(const std::string& base, std::size_t i, const char* field = nullptr) {
  std::string p = base + "/" + std::to_string(i);
  if (field) p += std::string("/") + field;
  return p;
}

const json& field(const json& obj, const char* name, const std::string& at) {
  auto it = obj.find(name);
  if (it == obj.end()) throw SchemaError(std::string("missing field '") + name + "'", at);
  return *it;
}

int int_value(const json& v, const std::string& at) {
  if (!v.is_number_integer()) throw SchemaError("expected an integer", at);
  return v.get<int>();
}

std::vector<int> int_array(const json& v, const std::string& at) {
  if (!v.is_array()) throw SchemaError("expected an array of integers", at);
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(int_value(v[i], pointer(at, i)));
  return out;
}

std::vector<int> exponents(const json& term, std::size_t size, const std::string& at) {
  const std::string p = at + "/exponents";
  std::vector<int> e = int_array(field(term, "exponents", at), p);
  if (e.size() != size) throw SchemaError("expected " + std::to_string(size) + " exponents", p);
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0) throw SchemaError("negative exponent", pointer(p, i));
  return e;
}

std::vector<std::vector<int>> comm_blocks(const json& term, const std::string& at) {
  const std::string p = at + "/comm";
  const json& c = field(term, "comm", at);
  if (!c.is_array()) throw SchemaError("expected an array of integer arrays", p);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(int_array(c[i], pointer(p, i)));
  return out;
}

void check_range(const std::vector<int>& letters, int max, const std::string& at) {
  for (std::size_t i = 0; i < letters.size(); ++i)
    if (letters[i] < 1 || letters[i] > max)
      throw SchemaError("index out of range 1.." + std::to_string(max), pointer(at, i));
}

}  // namespace

AnyElement parse(std::string_view text, Algebra algebra, int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  const std::vector<Term> terms = Parser(text).expr();
  switch (algebra) {
    case Algebra::Commutative: return eval_comm(terms, Alphabet::x(d), d);
    case Algebra::UVPolynomial: return eval_comm(terms, Alphabet::uv(d), d);
    case Algebra::Metabelian: return eval_meta(terms, d);
    case Algebra::MetabelianIdeal: {
      MetaElement e = eval_meta(terms, d);
      if (!e.in_commutator_ideal()) throw ParseError("element is not in the commutator ideal", 0);
      return e;
    }
    case Algebra::GrassmannVariety: return eval_grass(terms, d);
    case Algebra::WreathModule: return eval_wreath(terms, d);
  }
  throw std::invalid_argument("unknown algebra");
}

std::string render(const AnyElement& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CommPoly>) return render_comm(x);
        else if constexpr (std::is_same_v<T, MetaElement>) return render_meta(x);
        else if constexpr (std::is_same_v<T, GrassElement>) return render_grass(x);
        else return render_wreath(x);
      },
      e);
}

Algebra algebra_of(const AnyElement& e) {
  return std::visit(
      [](const auto& x) -> Algebra {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CommPoly>)
          return x.alphabet().name == AlphabetName::UV ? Algebra::UVPolynomial : Algebra::Commutative;
        else if constexpr (std::is_same_v<T, MetaElement>) return Algebra::Metabelian;
        else if constexpr (std::is_same_v<T, GrassElement>) return Algebra::GrassmannVariety;
        else return Algebra::WreathModule;
      },
      e);
}

std::string to_json(const AnyElement& e, int indent) { return to_json(e, algebra_of(e), indent); }

std::string to_json(const AnyElement& e, Algebra algebra, int indent) {
  json terms = json::array();
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CommPoly>) {
          for (const auto& [m, c] : x.terms()) terms.push_back(term_json(c, m.exps, json::array()));
        } else if constexpr (std::is_same_v<T, MetaElement>) {
          for (const auto& [m, c] : x.terms()) {
            json comm = json::array();
            if (m.commutator) {
              std::vector<int> letters{m.head_i, m.head_j};
              letters.insert(letters.end(), m.tail.begin(), m.tail.end());
              comm.push_back(letters);
            }
            terms.push_back(term_json(c, m.prefix, comm));
          }
        } else if constexpr (std::is_same_v<T, GrassElement>) {
          for (const auto& [m, c] : x.terms()) {
            json comm = json::array();
            for (std::size_t k = 0; k + 1 < m.block.size(); k += 2) comm.push_back({m.block[k], m.block[k + 1]});
            terms.push_back(term_json(c, m.exps, comm));
          }
        } else {
          for (const auto& [m, c] : x.poly().terms()) terms.push_back(term_json(c, m.exps, json::array()));
          for (const auto& [k, poly] : x.module().coefficients())
            for (const auto& [m, c] : poly.terms()) terms.push_back(term_json(c, m.exps, json::array({{k}})));
        }
      },
      e);
  const json doc = {{"algebra", algebra_name(algebra)}, {"d", element_d(e)}, {"terms", terms}};
  return doc.dump(indent);
}

JsonElement from_json(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& err) {
    throw SchemaError(std::string("malformed JSON: ") + err.what(), "");
  }
  if (!doc.is_object()) throw SchemaError("expected an object", "");
  const json& alg = field(doc, "algebra", "");
  if (!alg.is_string()) throw SchemaError("expected a string", "/algebra");
  const auto algebra = algebra_from_name(alg.get<std::string>());
  if (!algebra) throw SchemaError("unknown algebra '" + alg.get<std::string>() + "'", "/algebra");
  const int d = int_value(field(doc, "d", ""), "/d");
  if (d < 1) throw SchemaError("d must be positive", "/d");
  const json& terms = field(doc, "terms", "");
  if (!terms.is_array()) throw SchemaError("expected an array", "/terms");

  AnyElement out = zero_element(*algebra, d);
  RawExpression raw;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string at = pointer("/terms", i);
    const json& t = terms[i];
    if (!t.is_object()) throw SchemaError("expected an object", at);
    const json& cj = field(t, "coeff", at);
    if (!cj.is_string()) throw SchemaError("expected a string \"p/q\"", at + "/coeff");
    Rational c;
    try {
      c = parse_rational(cj.get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw SchemaError(err.what(), at + "/coeff");
    }
    const auto blocks = comm_blocks(t, at);
    const std::string cp = at + "/comm";
    switch (*algebra) {
      case Algebra::Commutative:
      case Algebra::UVPolynomial: {
        auto& p = std::get<CommPoly>(out);
        if (!blocks.empty()) throw SchemaError("commutative terms carry no commutators", cp);
        p.add_term(CommMonomial{exponents(t, p.alphabet().size, at)}, c);
        break;
      }
      case Algebra::Metabelian:
      case Algebra::MetabelianIdeal: {
        const auto e = exponents(t, 2 * d, at);
        if (blocks.size() > 1) throw SchemaError("at most one commutator per term", cp);
        RawWord word;
        for (int k = 0; k < 2 * d; ++k)
          for (int r = 0; r < e[k]; ++r) word.push_back({false, {k + 1}});
        if (!blocks.empty()) {
          if (blocks[0].size() < 2) throw SchemaError("commutator needs at least two entries", pointer(cp, 0));
          check_range(blocks[0], 2 * d, pointer(cp, 0));
          word.push_back({true, blocks[0]});
        } else if (*algebra == Algebra::MetabelianIdeal) {
          throw SchemaError("term lies outside the commutator ideal", cp);
        }
        raw.emplace_back(c, std::move(word));
        break;
      }
      case Algebra::GrassmannVariety: {
        auto& g = std::get<GrassElement>(out);
        GrassElement term = GrassElement::from_monomial(d, GrassMonomial{exponents(t, 2 * d, at), {}}, c);
        std::vector<int> positions;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          if (blocks[b].size() != 2) throw SchemaError("each commutator holds two positions", pointer(cp, b));
          check_range(blocks[b], 2 * d, pointer(cp, b));
          positions.insert(positions.end(), blocks[b].begin(), blocks[b].end());
        }
        g += term * GrassElement::block(d, positions);
        break;
      }
      case Algebra::WreathModule: {
        auto& w = std::get<WreathElement>(out);
        if (blocks.empty()) {
          w += WreathElement(CommPoly::monomial(Alphabet::y(d), CommMonomial{exponents(t, 2 * d, at)}, c),
                             ModuleElement(d));
          break;
        }
        if (blocks.size() != 1 || blocks[0].size() != 1)
          throw SchemaError("module terms carry exactly one generator [[k]]", cp);
        check_range(blocks[0], 2 * d, pointer(cp, 0));
        const CommPoly coeff = CommPoly::monomial(Alphabet::uv(d), CommMonomial{exponents(t, 4 * d, at)}, c);
        w += WreathElement(CommPoly(Alphabet::y(d)), ModuleElement::generator(d, blocks[0][0], coeff));
        break;
      }
    }
  }
  if (*algebra == Algebra::Metabelian || *algebra == Algebra::MetabelianIdeal) out = meta_normalize(d, raw);
  return {*algebra, d, std::move(out)};
}

std::vector<ConstGen> parse_const_product(std::string_view text, int d) {
  std::vector<ConstGen> out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> int {
    skip();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected an index", pos);
    int n = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      n = n * 10 + (text[pos++] - '0');
      if (n > 1000000) throw ParseError("index too large", pos);
    }
    return n;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  skip();
  if (pos >= text.size()) throw ParseError("empty product", pos);
  for (;;) {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string name(text.substr(start, pos - start));
    const bool arc = name == "alpha" || name == "beta" || name == "gamma";
    if (!arc && name != "u" && name != "v") throw ParseError("unknown generator '" + name + "'", start);
    expect('(');
    const std::size_t ip = pos;
    const int p = number();
    int q = 0;
    if (arc) {
      expect(',');
      q = number();
    }
    expect(')');
    for (int k : arc ? std::vector<int>{p, q} : std::vector<int>{p})
      if (k < 1 || k > d) throw ParseError("index out of range 1.." + std::to_string(d), ip);
    if (name == "u") out.push_back(ConstGen::u(p));
    else if (name == "v") out.push_back(ConstGen::v(p));
    else if (name == "alpha") out.push_back(ConstGen::alpha(p, q));
    else if (name == "beta") out.push_back(ConstGen::beta(p, q));
    else out.push_back(ConstGen::gamma(p, q));
    skip();
    if (pos >= text.size()) break;
    expect('*');
  }
  return out;
}

}  // namespace nowicki
