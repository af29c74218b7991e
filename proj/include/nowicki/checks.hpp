#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nowicki/element.hpp"

namespace nowicki {

/// Outcome of one family of checks. At most a few witnesses are kept.
struct CheckResult {
  explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;

  bool ok() const { return failures == 0; }
  void record(bool passed, const std::string& witness);
};

/// Every admissible index tuple of S1..S4, R1..R5, S and R at rank d. The
/// literal reading of S (v_{2j-1} twice) is added when requested.
std::vector<CheckResult> verify_relations(int d, bool include_literal_s = false);

/// Constancy of the default generating set of the algebra. For WreathModule
/// also the image criterion of every L generator and agreement with the
/// embedded F' preimage; for GrassmannVariety the vanishing of W_s, Z_s, s >= d.
std::vector<CheckResult> verify_generators(Algebra a, int d);

/// Homomorphism property of the embedding on random pairs, full column rank on
/// every component of F_{2d} up to max_degree, and agreement of the criterion
/// sum_i v_i f_i = 0 with image membership computed by rank.
std::vector<CheckResult> verify_embedding(int d, int max_degree, std::size_t random_pairs, std::uint64_t seed);

/// Randomized identity suites: metabelian identity, commutator exchange and
/// centrality in F_{2d}(G), [z1,z2,z3] = 0, Leibniz for the three
/// derivations, the closed form of delta(y^b) for b <= 8, and
/// phi_alpha o delta = delta o phi_alpha. d >= 2.
std::vector<CheckResult> verify_identities(int d, std::size_t cases, std::uint64_t seed);

}  // namespace nowicki
