#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "somos/errors.hpp"
#include "somos/linear.hpp"
#include "somos/quadratic.hpp"
#include "somos/sequence.hpp"

namespace somos {

// b(n)b(n-k) = b(n-i)b(n-k+i) + b(n-j) + b(n-k+j) with i < k-i and j < k-j.
// The K form picks out k = 2K+1, i = 1, j = K, the case with proven
// integrality and the explicit order-6K linear recurrence.
struct FamilyParams {
    int k = 0;
    int i = 0;
    int j = 0;

    auto operator<=>(const FamilyParams&) const = default;

    void validate() const; // InvalidParams naming the violated inequality
    bool is_main_family() const { return k % 2 == 1 && i == 1 && 2 * j == k - 1; }
    static FamilyParams from_K(int K);
};

QuadRecurrence make_family(const FamilyParams& params);
inline QuadRecurrence make_family_K(int K) { return make_family(FamilyParams::from_K(K)); }

// The closed form of the first 6K+1 terms: five polynomial rows in (K, i),
// dispatched on which K-block n falls in. Exact integers, any K >= 1.
mpz_class closed_form(int K, long n); // 1 <= n <= 6K+1, throws OutOfRange

// a(n) = A(K)*(a(n-2K) - a(n-4K)) + a(n-6K), A(K) = 2K^2+8K+4, order 6K.
LinearRecurrence linear_recurrence_of(int K);

inline mpz_class A_of(int K) {
    mpz_class Kz(K);
    return 2 * Kz * Kz + 8 * Kz + 4;
}

// Residual of the quadratic relation at index n:
// a(n)a(n-(2K+1)) - a(n-1)a(n-2K) - a(n-K) - a(n-K-1). Zero certifies it.
mpq_class phi(const SequenceState& seq, int K, std::size_t n);

struct EquivalenceReport {
    bool ok = false;
    std::optional<std::size_t> first_divergence; // index where the engines split
    std::string detail;
};

// Generates count terms twice (quadratic engine; linear engine seeded with
// the closed-form prefix), compares term-for-term, and checks phi(n) = 0 on
// the linear-generated sequence at every applicable n.
EquivalenceReport verify_equivalence_report(int K, std::size_t count);
bool verify_equivalence(int K, std::size_t count);

} // namespace somos
