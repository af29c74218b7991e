#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nowicki/element.hpp"
#include "nowicki/grading.hpp"
#include "nowicki/linalg.hpp"

namespace nowicki {

/// Number of pair degrees in a component key: 2d for UVPolynomial, d otherwise.
int key_width(Algebra a, int d);

/// Components of the given total degree with a nonempty basis, in key order.
std::vector<ComponentKey> component_keys(Algebra a, int d, int degree);

/// Basis of a component, each basis monomial as an element. Throws
/// std::invalid_argument for a key of the wrong width.
std::vector<AnyElement> component_basis(Algebra a, int d, const ComponentKey& key);
std::size_t component_dimension(Algebra a, int d, const ComponentKey& key);

/// Column k holds the coordinates of delta(basis[k]) in the basis of key.lowered().
QMatrix derivation_matrix(Algebra a, int d, const ComponentKey& key);

std::vector<AnyElement> kernel_basis(Algebra a, int d, const ComponentKey& key);
std::size_t kernel_dimension(Algebra a, int d, const ComponentKey& key);

/// Coordinates of a homogeneous element in a component basis. Throws
/// std::invalid_argument when a term lies outside the component.
QVector coordinates(Algebra a, int d, const ComponentKey& key, const AnyElement& e);

struct Candidate {
  std::string name;
  AnyElement element;
};

class NonConstantCandidate : public std::invalid_argument {
 public:
  NonConstantCandidate(std::string name, AnyElement derivative);
  const std::string& name() const { return name_; }
  const AnyElement& derivative() const { return derivative_; }

 private:
  std::string name_;
  AnyElement derivative_;
};

/// Subalgebra: products of candidates. Module: candidates times canonical
/// monomials of K[U,V]^delta acting through the module structure (only for
/// MetabelianIdeal and WreathModule). For WreathModule the span is compared
/// with the constants satisfying sum_i v_i f_i = 0, the image of F'.
enum class SpanMode { Subalgebra, Module };

struct SpanReport {
  ComponentKey key;
  std::size_t kernel_dim = 0;
  std::size_t span_dim = 0;
  std::size_t products = 0;
  /// Products that were linearly dependent on earlier ones.
  std::size_t relation_witnesses = 0;
  /// Kernel basis elements outside the span.
  std::vector<AnyElement> missing;

  bool ok() const { return span_dim == kernel_dim && missing.empty(); }
};

/// One report per component of total degree 1..max_degree, ordered by degree
/// then key. Throws NonConstantCandidate when a candidate is not a constant.
std::vector<SpanReport> span_check(Algebra a, int d, const std::vector<Candidate>& candidates, int max_degree,
                                   SpanMode mode = SpanMode::Subalgebra);

/// Homogeneous parts of an element keyed by component.
std::vector<std::pair<ComponentKey, AnyElement>> homogeneous_parts(Algebra a, int d, const AnyElement& e);

/// The default candidate sets: nowicki_generators for Commutative, the lifted
/// generators and G1..G8 preimages for Metabelian, G1..G8 preimages for
/// MetabelianIdeal, L-expansions for WreathModule, X, V, W_l, Z_l for
/// GrassmannVariety, and u, v, alpha, beta, gamma for UVPolynomial.
std::vector<Candidate> default_candidates(Algebra a, int d, int max_degree);
SpanMode default_mode(Algebra a);

/// The module-generated elements g * m of F' with m a canonical monomial,
/// for every G1..G8 preimage g and total degree at most max_degree.
std::vector<Candidate> module_products(int d, int max_degree);

/// Worker count: NOWICKI_THREADS if set and positive, else the hardware count.
unsigned worker_count();

/// Graded left-ideal certificate in F_{2d}(G). The graded piece fixes the
/// total degree, the degree in {x_d, y_d} and the degree in Y.
struct IdealReport {
  int degree = 0;
  int top_degree = 0;
  int y_degree = 0;
  std::size_t kernel_dim = 0;
  std::size_t in_ideal = 0;
  std::vector<GrassElement> missing;

  bool ok() const { return missing.empty(); }
};

/// Elements killed by phi_alpha against the left ideal generated by omega,
/// [omega, u] for every letter u, mu and nu.
std::vector<IdealReport> lemma_ideal_check(int d, const std::vector<Rational>& alpha, int max_degree);

/// At d = 2: elements killed by every phi_alpha against the left ideal
/// generated by `ideal`. With constants_only the kernel is further
/// intersected with ker delta.
std::vector<IdealReport> common_kernel_ideal_check(const std::vector<GrassElement>& ideal, int max_degree,
                                                   bool constants_only);

}  // namespace nowicki
