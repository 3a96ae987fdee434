#pragma once

#include "twistspec/linear_map.hpp"
#include "twistspec/polynomial.hpp"

namespace twistspec {

// certified interval around a single real value (here: a spectral radius)
struct RootEnclosure {
    Rat lower, upper;

    Rat width() const { return upper - lower; }
    Rat midpoint() const { return (lower + upper) / 2; }
};

// Certified enclosure of the spectral radius of a nonnegative irreducible
// matrix, of width <= tol. Collatz-Wielandt: for any strictly positive v,
// min_i (Mv)_i/v_i and max_i (Mv)_i/v_i bracket the spectral radius; power
// iteration in exact integers tightens the bracket. Throws on a reducible
// or negative matrix, or tol <= 0.
RootEnclosure perron_root(const LinearMap& m, const Rat& tol);

// Enclosure of the spectral radius of M^k without forming the power:
// each Collatz-Wielandt step applies M k times, so convergence is k-fold
// faster and entries never materialize as a dense k-th power.
RootEnclosure perron_root_power(const LinearMap& m, unsigned k, const Rat& tol);

// Strictly positive eigenvector approximation, normalized to sum 1, with
// certified residual ||Mv - lambda v||_inf <= tol * lambda. Requires a
// primitive matrix (strongly connected, cycle gcd 1).
RatVector perron_vector(const LinearMap& m, const Rat& tol);

// Certified two-sided bound on max |root| over all complex roots of p.
// Approximates roots (Durand-Kerner in double precision), then certifies:
// with Weierstrass corrections w_i evaluated in exact rational complex
// arithmetic, the disks of radius deg(p)*|w_i| around the approximation
// points cover every root of p.
struct ModulusBound {
    double lower, upper;  // outward-rounded
};
ModulusBound max_root_modulus(const IntPolynomial& p);

// true iff every root of p has modulus <= enc.upper + tol (certified)
bool dominant_root_check(const IntPolynomial& p, const RootEnclosure& enc, const Rat& tol);

}  // namespace twistspec
