#pragma once

#include <random>

#include "nowicki/element.hpp"

namespace nowicki {

/// Random element with up to max_terms basis terms of total degree at most
/// max_degree and small nonzero rational coefficients. Terms are drawn from
/// the component bases, so every result is already in normal form; the
/// WreathModule variant also carries a polynomial part in Y.
AnyElement random_element(Algebra a, int d, int max_degree, int max_terms, std::mt19937_64& rng);

Rational random_rational(std::mt19937_64& rng);

}  // namespace nowicki
