#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nowicki/commpoly.hpp"
#include "nowicki/metabelian.hpp"

namespace nowicki {

/// Element sum_i a_i f_i(U, V) of the free K[U,V]-module on a_1..a_{2d}.
/// Coefficients live over Alphabet::uv(d); the primed variables v' = v + u
/// never appear in stored data.
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(int d) : d_(d) {}

  /// a_k * coeff.
  static ModuleElement generator(int d, int k, const CommPoly& coeff);
  static ModuleElement generator(int d, int k);

  int d() const { return d_; }
  const std::map<int, CommPoly>& coefficients() const { return coeffs_; }
  CommPoly coefficient(int k) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(int k, const CommPoly& coeff);

  /// Multiplies every coefficient by p (an element of K[U,V]).
  ModuleElement times(const CommPoly& p) const;

  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  ModuleElement& operator*=(const Rational& s);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(ModuleElement a, const Rational& s) { return a *= s; }
  friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
    return a.d_ == b.d_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int d_ = 0;
  std::map<int, CommPoly> coeffs_;
};

/// Element p(Y) + m of W_{2d} = K[Y_{2d}] semidirect M_{2d}.
class WreathElement {
 public:
  WreathElement() = default;
  explicit WreathElement(int d) : d_(d), poly_(Alphabet::y(d)), module_(d) {}
  WreathElement(CommPoly poly, ModuleElement module);

  static WreathElement one(int d);
  static WreathElement y(int d, int k);
  static WreathElement a(int d, int k);

  int d() const { return d_; }
  const CommPoly& poly() const { return poly_; }
  const ModuleElement& module() const { return module_; }
  bool is_zero() const { return poly_.is_zero() && module_.is_zero(); }

  WreathElement& operator+=(const WreathElement& o);
  WreathElement& operator-=(const WreathElement& o);
  WreathElement& operator*=(const Rational& s);
  friend WreathElement operator+(WreathElement a, const WreathElement& b) { return a += b; }
  friend WreathElement operator-(WreathElement a, const WreathElement& b) { return a -= b; }
  friend WreathElement operator*(WreathElement a, const Rational& s) { return a *= s; }
  friend bool operator==(const WreathElement& a, const WreathElement& b) {
    return a.d_ == b.d_ && a.poly_ == b.poly_ && a.module_ == b.module_;
  }

 private:
  int d_ = 0;
  CommPoly poly_;
  ModuleElement module_;
};

/// (p1 + m1)(p2 + m2) = p1 p2 + p1 . m2 + m1 . p2 with y_j a_i = a_i u_j,
/// a_i y_j = a_i (v_j + u_j) and M . M = 0.
WreathElement wreath_mul(const WreathElement& w1, const WreathElement& w2);

/// The algebra homomorphism x_j -> y_j + a_j, evaluated multiplicatively.
WreathElement embed(const MetaElement& f);

/// Closed form x_{i_1}..x_{i_m}[x_i,x_j,x_{j_1},..,x_{j_n}] ->
/// (a_i v_j - a_j v_i) v_{j_1}..v_{j_n} u_{i_1}..u_{i_m}.
/// Throws std::invalid_argument for Pure monomials.
ModuleElement commutator_image(const MetaMonomial& b, int d);

/// sum_i v_i f_i.
CommPoly image_residual(const ModuleElement& m);
bool is_commutator_image(const ModuleElement& m);

class NotAnImage : public std::invalid_argument {
 public:
  explicit NotAnImage(CommPoly residual);
  const CommPoly& residual() const { return residual_; }

 private:
  CommPoly residual_;
};

/// Preimage in F' of a module element. Throws NotAnImage with the nonzero
/// residual sum_i v_i f_i when m is not in the image of the commutator ideal.
MetaElement pullback(const ModuleElement& m);

ModuleElement module_derive(const ModuleElement& m);
WreathElement wreath_derive(const WreathElement& w);

/// The u- or v-variable with 1-based index k as a polynomial over Alphabet::uv(d).
CommPoly uvar(int d, int k);
CommPoly vvar(int d, int k);

/// Grading of a module basis element a_k * monomial; pairs indexed like X_{2d}.
ComponentKey module_component_of(int d, int a, const CommMonomial& uv);
std::vector<std::pair<int, CommMonomial>> module_component_basis(int d, const ComponentKey& key);

}  // namespace nowicki
