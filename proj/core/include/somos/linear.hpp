#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "somos/errors.hpp"

namespace somos {

// a(n) = c_1*a(n-1) + ... + c_d*a(n-d), exact rational coefficients.
struct LinearRecurrence {
    enum class Provenance { closed_form, guessed };

    std::size_t order = 0;
    std::vector<mpq_class> coeffs; // c_1..c_d
    Provenance provenance = Provenance::closed_form;

    void validate() const; // order == coeffs.size(), c_d != 0

    // The annihilating operator (1, -c_1, ..., -c_d) scaled to integers,
    // content removed, leading entry positive. Canonical form for fixtures:
    // two recurrences are the same relation iff these vectors match.
    std::vector<mpz_class> normalized_operator() const;

    // e.g. "a(n) = 14*a(n-2) - 14*a(n-4) + a(n-6)"
    std::string render() const;
};

// Holds at every index from order+1 to the end? Second element is the first
// failing 1-based index when not.
std::pair<bool, std::optional<std::size_t>>
verify(const LinearRecurrence& rec, const std::vector<mpz_class>& seq);

// Extends prefix out to count terms by running the recurrence.
std::vector<mpq_class> extend(const LinearRecurrence& rec,
                              std::vector<mpq_class> prefix, std::size_t count);

struct GuessResult {
    bool found = false;
    std::optional<LinearRecurrence> recurrence;
    std::size_t terms_used = 0;     // training prefix length
    std::size_t terms_verified = 0; // held-out terms checked
};

// Minimal-order recurrence fitted on roughly the first 2/3 of seq by
// exact-rational Berlekamp-Massey, then checked against the held-out tail.
// The effective order bound is min(max_order, train/2) so a guess is always
// over-determined. found=false when nothing fits; InsufficientTerms when the
// input is too short to guess anything at all.
GuessResult guess_minimal(const std::vector<mpz_class>& seq, std::size_t max_order);

} // namespace somos
