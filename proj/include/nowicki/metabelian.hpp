#pragma once

#include <vector>

#include "nowicki/combination.hpp"
#include "nowicki/commpoly.hpp"
#include "nowicki/grading.hpp"

namespace nowicki {

/// Basis element of the free metabelian associative algebra F_{2d}:
///   Pure:  x_1^{e_1} ... x_{2d}^{e_{2d}}
///   Comm:  x_1^{e_1} ... x_{2d}^{e_{2d}} [x_i, x_j, x_{t_1}, ..., x_{t_m}]
/// with i > j <= t_1 <= ... <= t_m. Letters are 1-based.
struct MetaMonomial {
  std::vector<int> prefix;
  bool commutator = false;
  int head_i = 0;
  int head_j = 0;
  std::vector<int> tail;

  static MetaMonomial pure(std::vector<int> exps) { return {std::move(exps), false, 0, 0, {}}; }

  int degree() const;
  /// Number of occurrences of each letter (0-based slots).
  std::vector<int> letter_counts() const;

  friend bool operator==(const MetaMonomial&, const MetaMonomial&) = default;
  friend bool operator<(const MetaMonomial& a, const MetaMonomial& b);
};

class MetaElement {
 public:
  MetaElement() = default;
  explicit MetaElement(int d) : d_(d) {}

  static MetaElement one(int d);
  /// The generator x_k (1-based).
  static MetaElement letter(int d, int k);
  /// The normalised left-normed commutator [x_{l_1}, ..., x_{l_n}], n >= 2.
  static MetaElement commutator(int d, const std::vector<int>& letters);
  static MetaElement from_monomial(int d, const MetaMonomial& m, const Rational& c = 1);

  int d() const { return d_; }
  const Combination<MetaMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the element lies in the commutator ideal (no Pure terms).
  bool in_commutator_ideal() const;

  /// Adds c * m; `m` must already be a basis monomial.
  void add_term(const MetaMonomial& m, const Rational& c);

  MetaElement& operator+=(const MetaElement& o);
  MetaElement& operator-=(const MetaElement& o);
  MetaElement& operator*=(const Rational& s);
  friend MetaElement operator+(MetaElement a, const MetaElement& b) { return a += b; }
  friend MetaElement operator-(MetaElement a, const MetaElement& b) { return a -= b; }
  friend MetaElement operator-(MetaElement a) { return a *= Rational(-1); }
  friend MetaElement operator*(MetaElement a, const Rational& s) { return a *= s; }
  friend MetaElement operator*(const Rational& s, MetaElement a) { return a *= s; }
  friend MetaElement operator*(const MetaElement& a, const MetaElement& b);
  friend bool operator==(const MetaElement& a, const MetaElement& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }

 private:
  int d_ = 0;
  Combination<MetaMonomial> terms_;
};

/// One factor of a raw word: a single letter or a left-normed commutator.
struct RawFactor {
  bool commutator = false;
  std::vector<int> letters;
};
using RawWord = std::vector<RawFactor>;
using RawExpression = std::vector<std::pair<Rational, RawWord>>;

/// Rewrites a formal combination of words into the basis. Throws
/// std::invalid_argument for commutators with fewer than two entries or
/// letters outside 1..2d.
MetaElement meta_normalize(int d, const RawExpression& expr);

MetaElement meta_mul(const MetaElement& f, const MetaElement& g);

/// [f, g] = fg - gf.
MetaElement meta_bracket(const MetaElement& f, const MetaElement& g);

/// Right multiplication by the generator x_a.
MetaElement meta_mul_letter(const MetaElement& f, int a);

MetaElement meta_derive(const MetaElement& f);

/// Module action of K[U,V] on the commutator ideal: f u_i = x_i f,
/// f v_i = [f, x_i]. `uv` is an exponent vector over u_1..u_{2d}, v_1..v_{2d}.
/// Throws std::invalid_argument when c has a Pure part.
MetaElement act_uv(const MetaElement& c, const CommMonomial& uv);
MetaElement act_uv(const MetaElement& c, const CommPoly& uv);

/// Lifts a polynomial in x_1..x_{2d} by reading each monomial as an ordered word.
MetaElement lift_ordered(const CommPoly& p);

ComponentKey component_of(const MetaMonomial& m);

/// Basis of a component; `commutator_only` restricts to the ideal F'.
std::vector<MetaMonomial> meta_component_basis(int d, const ComponentKey& key, bool commutator_only);

}  // namespace nowicki
