#pragma once

#include "twistspec/linear_map.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistspec {

// integer polynomial, coefficients ascending by degree
struct IntPolynomial {
    std::vector<Int> c;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    void trim();  // drop trailing zero coefficients

    bool operator==(const IntPolynomial&) const = default;
};

// exact monic characteristic polynomial det(xI - M) via the
// Faddeev-LeVerrier recurrence (all divisions exact, verified)
IntPolynomial char_poly(const LinearMap& m);

// Closed-form reference polynomial for the genus-g transition matrix:
// x^(4g-4) - x^(4g-5) - x^(2g-1) - 10x^(2g-2) - x^(2g-3) - x + 1.
IntPolynomial expected_char_poly(int genus);

bool palindromic(const IntPolynomial& p);

Int eval(const IntPolynomial& p, const Int& x);
Rat eval(const IntPolynomial& p, const Rat& x);

IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q);

// exact polynomial division p / d; nullopt when d does not divide p
std::optional<IntPolynomial> exact_divide(const IntPolynomial& p, const IntPolynomial& d);

std::string to_string(const IntPolynomial& p, const std::string& var = "x");

}  // namespace twistspec
