#pragma once

#include <vector>

#include "origami/polynomial.hpp"

namespace origami {

// Factors f over Q into irreducible primitive integer polynomials (positive
// leading coefficient), with multiplicity flattened: a factor of multiplicity
// k appears k times. Constant content is dropped.
//
// Zassenhaus: factor modulo a word-size prime, Hensel lift past twice the
// coefficient bound, recombine exhaustively. Throws ComputationLimit past
// max_subsets trial products.
std::vector<RatPolynomial> factor_rational(const RatPolynomial& f, long max_subsets = 2'000'000);

// Divisors of f of exact degree d found by recombining lifted modular
// factors, each returned primitive. Only complete when every irreducible
// factor of f has degree >= d (then every degree-d divisor is irreducible).
// Returns early when the modular degree patterns rule out degree d.
std::vector<RatPolynomial> factors_of_degree(const RatPolynomial& f, int d, long max_subsets = 2'000'000);

bool is_irreducible(const RatPolynomial& f);

}  // namespace origami
