#pragma once

#include <vector>

#include <gmpxx.h>

#include "somos/errors.hpp"

namespace somos {

// One scheme covers the whole zoo: a(n)*a(n-k) = sum of quadratic terms
// coeff*a(n-a)*a(n-b) plus linear terms coeff*a(n-off). Offsets count back
// from n, so every term the right-hand side touches lies within the last k.
struct QuadTerm {
    int off_a = 0;
    int off_b = 0;
    mpz_class coeff = 1;
};

struct LinTerm {
    int off = 0;
    mpz_class coeff = 1;
};

struct QuadRecurrence {
    int divisor_offset = 0; // the k in a(n)*a(n-k)
    std::vector<QuadTerm> quad_terms;
    std::vector<LinTerm> lin_terms;

    void validate() const; // throws InvalidParams
};

// Regression pins from outside the family: Somos-6, and the Dana Scott
// recurrence D(n)D(n-4) = D(n-1)D(n-3) + D(n-2).
QuadRecurrence somos6();
QuadRecurrence dana_scott();

} // namespace somos
