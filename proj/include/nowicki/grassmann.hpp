#pragma once

#include <string>
#include <vector>

#include "nowicki/combination.hpp"
#include "nowicki/grading.hpp"
#include "nowicki/rational.hpp"

namespace nowicki {

/// Alphabet positions are 1-based with x_i at 2i-1 and y_i at 2i, so the
/// order x_1 < y_1 < ... < x_d < y_d is the numeric order.
inline int xpos(int i) { return 2 * i - 1; }
inline int ypos(int i) { return 2 * i; }
/// "x2" or "y1".
std::string grass_letter_name(int pos);

/// Ordered word x_1^{a_1} y_1^{b_1} ... times the commutator block
/// [u_{i_1},u_{i_2}]...[u_{i_{2c-1}},u_{i_{2c}}] with i_1 < ... < i_{2c}.
struct GrassMonomial {
  std::vector<int> exps;
  std::vector<int> block;

  int degree() const;
  friend bool operator==(const GrassMonomial&, const GrassMonomial&) = default;
  friend bool operator<(const GrassMonomial& a, const GrassMonomial& b);
};

class GrassElement {
 public:
  GrassElement() = default;
  explicit GrassElement(int d) : d_(d) {}

  static GrassElement one(int d);
  static GrassElement letter(int d, int pos);
  static GrassElement x(int d, int i) { return letter(d, xpos(i)); }
  static GrassElement y(int d, int i) { return letter(d, ypos(i)); }
  /// Product of commutators of letters, entries given as positions in pairs.
  /// Signs and zeros follow the exterior rule.
  static GrassElement block(int d, const std::vector<int>& positions);
  static GrassElement from_monomial(int d, const GrassMonomial& m, const Rational& c = 1);

  int d() const { return d_; }
  const Combination<GrassMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const GrassMonomial& m, const Rational& c);

  GrassElement& operator+=(const GrassElement& o);
  GrassElement& operator-=(const GrassElement& o);
  GrassElement& operator*=(const Rational& s);
  friend GrassElement operator+(GrassElement a, const GrassElement& b) { return a += b; }
  friend GrassElement operator-(GrassElement a, const GrassElement& b) { return a -= b; }
  friend GrassElement operator-(GrassElement a) { return a *= Rational(-1); }
  friend GrassElement operator*(GrassElement a, const Rational& s) { return a *= s; }
  friend GrassElement operator*(const Rational& s, GrassElement a) { return a *= s; }
  friend GrassElement operator*(const GrassElement& a, const GrassElement& b);
  friend bool operator==(const GrassElement& a, const GrassElement& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }

 private:
  int d_ = 0;
  Combination<GrassMonomial> terms_;
};

/// Sorts `positions` into increasing order. Returns the permutation sign, or 0
/// when a position repeats.
int sort_block(std::vector<int>& positions);

GrassElement grass_mul(const GrassElement& f, const GrassElement& g);
GrassElement grass_bracket(const GrassElement& f, const GrassElement& g);
/// Left-normed [f_1, ..., f_n].
GrassElement grass_bracket(const std::vector<GrassElement>& fs);
GrassElement grass_mul_letter(const GrassElement& f, int pos);
GrassElement grass_derive(const GrassElement& f);

/// x_d -> sum alpha_i x_i, y_d -> sum alpha_i y_i; lands in rank d-1.
/// Throws std::invalid_argument for d = 1 or a wrong-length alpha.
GrassElement phi_alpha(const GrassElement& f, const std::vector<Rational>& alpha);

struct LemmaElements {
  GrassElement omega;
  GrassElement mu;
  GrassElement nu;
};

/// Throws std::invalid_argument for d < 2, a wrong-length alpha or alpha = 0.
LemmaElements lemma_elements(int d, const std::vector<Rational>& alpha);

enum class GrassGenKind { X, V, W, Z };

/// Tag of a generator: level s for W_s and Z_s, with the base indices followed
/// by one (x-index, y-index) pair per recursion step.
struct GrassGen {
  GrassGenKind kind = GrassGenKind::X;
  int level = 0;
  std::vector<int> idx;

  friend bool operator==(const GrassGen&, const GrassGen&) = default;
};

std::string to_string(const GrassGen& g);

struct GrassGenerator {
  GrassGen tag;
  GrassElement element;
};

GrassElement grass_v(int d, int i, int j);
GrassElement grass_w(int d, int i, int j, int k);
GrassElement grass_z(int d, int i, int j, int k, int l);
/// y[x, f] - x[y, f].
GrassElement grass_lift(const GrassElement& f, int xi, int yj);

/// Index ranges of the level-0 sets. Literal: w_{ijk} with j <= k and z_{ijkl}
/// with i <= j <= k <= l. Full: every index tuple, which the generation
/// certificate needs from d = 2, degree 4 on (z_{1212} and z_{2212}).
enum class GrassRanges { Literal, Full };

/// X, V, then W_0..W_{d-1} and Z_0..Z_{d-1}. Lifts range over all (x_i, y_j);
/// zeros, non-constants and exact duplicates are dropped, earlier tags win.
std::vector<GrassGenerator> grassmann_generators(int d, GrassRanges ranges = GrassRanges::Full);

/// Sizes of W_s and Z_s for s = 0..max_level, deduplicated within a level only,
/// and the number of lifts at each level discarded as non-constants.
struct LevelCounts {
  std::vector<std::size_t> w;
  std::vector<std::size_t> z;
  std::vector<std::size_t> dropped;
};
LevelCounts grassmann_level_counts(int d, int max_level, GrassRanges ranges = GrassRanges::Full);

ComponentKey component_of(const GrassMonomial& m);
std::vector<GrassMonomial> grass_component_basis(int d, const ComponentKey& key);

}  // namespace nowicki
