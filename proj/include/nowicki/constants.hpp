#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nowicki/combination.hpp"
#include "nowicki/commpoly.hpp"
#include "nowicki/metabelian.hpp"
#include "nowicki/wreath.hpp"

namespace nowicki {

// Enumerator order is the factor order of a canonical monomial.
enum class ConstKind { Vodd, Beta, Gamma, Alpha, Uodd };

/// Generator of K[U,V]^delta. Points use `p` only: Uodd(j) is u_{2j-1},
/// Vodd(i) is v_{2i-1}. Arcs are the 2x2 determinants alpha, beta, gamma.
struct ConstGen {
  ConstKind kind = ConstKind::Uodd;
  int p = 0;
  int q = 0;

  static ConstGen u(int j) { return {ConstKind::Uodd, j, 0}; }
  static ConstGen v(int i) { return {ConstKind::Vodd, i, 0}; }
  static ConstGen alpha(int p, int q) { return {ConstKind::Alpha, p, q}; }
  static ConstGen beta(int p, int q) { return {ConstKind::Beta, p, q}; }
  static ConstGen gamma(int p, int q) { return {ConstKind::Gamma, p, q}; }

  bool is_point() const { return kind == ConstKind::Uodd || kind == ConstKind::Vodd; }

  friend auto operator<=>(const ConstGen&, const ConstGen&) = default;
  friend bool operator==(const ConstGen&, const ConstGen&) = default;
};

/// "u(1)", "alpha(1,2)", ...
std::string to_string(const ConstGen& g);

/// Columns 1..d carry the u-pairs, d+1..2d the v-pairs.
int point_of(const ConstGen& g, int d);
std::pair<int, int> interval_of(const ConstGen& g, int d);

/// Open intervals overlapping without containment. Throws for point kinds.
bool intersects(const ConstGen& g1, const ConstGen& g2, int d);
/// Open interval of `arc` contains the point of `pt`. Throws on kind mismatch.
bool covers(const ConstGen& arc, const ConstGen& pt, int d);

/// Expansion over Alphabet::uv(d). alpha_pp = beta_pp = 0; gamma_pp is genuine.
/// Throws std::out_of_range for indices outside 1..d.
CommPoly expand(const ConstGen& g, int d);
CommPoly expand(const std::vector<ConstGen>& product, int d);

/// Grading over the 2d columns: one unit per point, one per arc endpoint, and
/// one even unit per arc.
ComponentKey component_of(const ConstGen& g, int d);
ComponentKey component_of(const std::vector<ConstGen>& product, int d);

/// Product of generators in canonical factor order.
struct CanonicalMonomial {
  std::vector<ConstGen> gens;

  friend auto operator<=>(const CanonicalMonomial&, const CanonicalMonomial&) = default;
  friend bool operator==(const CanonicalMonomial&, const CanonicalMonomial&) = default;
};

std::string to_string(const CanonicalMonomial& m);

/// Arcs pairwise non-intersecting and no point covered.
bool is_canonical(const std::vector<ConstGen>& product, int d);

/// Canonical monomials of one component of K[U,V] (2d columns), sorted.
std::vector<CanonicalMonomial> canonical_basis(int d, const ComponentKey& key);

/// Expresses a product of generators in the canonical basis of its component.
/// Throws std::logic_error if the expansion is outside the canonical span.
Combination<CanonicalMonomial> straighten(const std::vector<ConstGen>& product, int d);

enum class RelationId { S1, S2, S3, S4, R1, R2, R3, R4, R5, S, SLiteral, R };

std::string to_string(RelationId id);
std::optional<RelationId> relation_from_string(const std::string& name);
std::vector<RelationId> all_relations();

/// Index tuples satisfying the side conditions of a relation for rank d.
std::vector<std::vector<int>> admissible_indices(RelationId id, int d);

struct RelationResidual {
  bool module = false;
  CommPoly poly;
  ModuleElement element;

  bool is_zero() const { return module ? element.is_zero() : poly.is_zero(); }
};

/// Fully expanded left-hand side. S is read with v_{2k-1} in its last term,
/// SLiteral with v_{2j-1} twice. Throws std::invalid_argument when the indices
/// violate the side conditions.
RelationResidual verify_relation(RelationId id, const std::vector<int>& indices, int d);

/// The module determinant a_{2p-1} v_{2q} - a_{2p} v_{2q-1}.
ModuleElement w_element(int p, int q, int d);
/// a_{2p-1} v_{2q} - a_{2q} v_{2p-1}; agrees with w_element only for p = q.
ModuleElement w_element_as_printed(int p, int q, int d);

enum class ModuleGenKind { A, W, G1, G2, G3, G4, G5, G6, G7, G8 };

/// Generator tags. G1..G8 follow the numbering of the F' generators:
/// G1(i), G2(i,j), G3(i,j), G4(i,p,q), G5(i,j,k), G6(i,j,p,q), G7(i,j,k,l), G8(i,j,k).
struct ModuleGen {
  ModuleGenKind kind = ModuleGenKind::A;
  std::vector<int> idx;

  friend auto operator<=>(const ModuleGen&, const ModuleGen&) = default;
  friend bool operator==(const ModuleGen&, const ModuleGen&) = default;
};

std::string to_string(const ModuleGen& g);

/// Module expansion; G-tags use the determinant formulas of the submodule L.
ModuleElement expand(const ModuleGen& g, int d);

/// Preimage in F' of a G-tag. Throws for A and W.
MetaElement preimage(const ModuleGen& g, int d);

struct ModuleGenerator {
  ModuleGen tag;
  ModuleElement expansion;
  MetaElement preimage;
};

/// All G1..G8 generators with their admissible index ranges for rank d.
std::vector<ModuleGenerator> module_generators(int d);

struct AlgebraGenerator {
  std::string name;
  MetaElement element;
  bool module_generator = false;
};

/// x_{2i-1}, the lifted determinants x_{2i-1}x_{2j} - x_{2i}x_{2j-1}, then G1..G8.
std::vector<AlgebraGenerator> algebra_generators(int d);

}  // namespace nowicki
