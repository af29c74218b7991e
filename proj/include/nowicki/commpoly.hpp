#pragma once

#include <string>
#include <vector>

#include "nowicki/combination.hpp"
#include "nowicki/grading.hpp"
#include "nowicki/rational.hpp"

namespace nowicki {

enum class AlphabetName { X, Y, U, V, UV };

/// Indexed commuting variables. UV is the concatenation u_1..u_{2d}, v_1..v_{2d}.
struct Alphabet {
  AlphabetName name = AlphabetName::X;
  int size = 0;

  static Alphabet x(int d) { return {AlphabetName::X, 2 * d}; }
  static Alphabet y(int d) { return {AlphabetName::Y, 2 * d}; }
  static Alphabet uv(int d) { return {AlphabetName::UV, 4 * d}; }

  bool paired() const { return size > 0 && size % 2 == 0; }
  /// Name of the 0-based variable slot, e.g. "x3" or "v2".
  std::string variable_name(int slot) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Exponent vector. Ordered by total degree, then by exponents with larger
/// leading entries first, so that x1*x4 precedes x2*x3.
struct CommMonomial {
  std::vector<int> exps;

  int degree() const;
  friend bool operator==(const CommMonomial&, const CommMonomial&) = default;
  friend bool operator<(const CommMonomial& a, const CommMonomial& b);
};

class CommPoly {
 public:
  CommPoly() = default;
  explicit CommPoly(Alphabet alphabet) : alphabet_(alphabet) {}

  static CommPoly constant(Alphabet alphabet, const Rational& c);
  /// The variable in 0-based slot `slot`.
  static CommPoly variable(Alphabet alphabet, int slot);
  static CommPoly monomial(Alphabet alphabet, CommMonomial m, const Rational& c = 1);

  const Alphabet& alphabet() const { return alphabet_; }
  const Combination<CommMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const CommMonomial& m, const Rational& c);

  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly& operator*=(const Rational& s);

  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator-(CommPoly a) { return a *= Rational(-1); }
  friend CommPoly operator*(CommPoly a, const Rational& s) { return a *= s; }
  friend CommPoly operator*(const Rational& s, CommPoly a) { return a *= s; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend bool operator==(const CommPoly& a, const CommPoly& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

  CommPoly pow(int n) const;

 private:
  void require_same(const CommPoly& o) const;

  Alphabet alphabet_;
  Combination<CommMonomial> terms_;
};

CommPoly poly_mul(const CommPoly& p, const CommPoly& q);

/// Weitzenboeck derivation: the even-indexed variable 2i (1-based) maps to
/// 2i-1, odd ones to zero. Throws std::invalid_argument for odd-sized alphabets.
CommPoly weitz_derive(const CommPoly& p);

/// exp(delta)(p) = sum_k delta^k(p)/k!, finite by local nilpotence.
CommPoly exp_delta(const CommPoly& p);

/// x_1, x_3, ..., x_{2d-1}, then x_{2i-1}x_{2j} - x_{2i}x_{2j-1} for i < j.
std::vector<CommPoly> nowicki_generators(int d);

/// Algebra homomorphism sending slot k to images[k] (all over one alphabet).
CommPoly substitute(const CommPoly& p, const std::vector<CommPoly>& images, Alphabet target);

/// Component of a monomial in a paired alphabet.
ComponentKey component_of(const CommMonomial& m);

/// Monomial basis of a component, in CommMonomial order.
std::vector<CommMonomial> comm_component_basis(const ComponentKey& key);

}  // namespace nowicki
