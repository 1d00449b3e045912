#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "somos/errors.hpp"

namespace somos {

// Symbolic terms grow superexponentially; 200k monomials is already ~minutes
// of exact arithmetic and far beyond what the faithfulness reports need.
inline constexpr std::size_t default_monomial_cap = 200'000;

// one signed exponent per variable slot
using ExpVec = std::vector<int>;

// Graded lexicographic, the fixed monomial order for division and rendering.
// Works on signed exponents too; on the shifted nonnegative vectors used
// during division it is the classic admissible grlex.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

class LaurentPoly {
public:
    using TermMap = std::map<ExpVec, mpz_class, GrlexLess>;

    explicit LaurentPoly(int arity) : arity_(arity) {
        if (arity < 1) throw InvalidParams("polynomial arity must be >= 1");
    }
    static LaurentPoly constant(int arity, const mpz_class& c);
    static LaurentPoly variable(int arity, int slot); // 0-based slot
    static LaurentPoly monomial(int arity, ExpVec exps, const mpz_class& c);

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t monomial_count() const { return terms_.size(); }

    // accumulates; erases the entry if the coefficient cancels to zero
    void add_term(const ExpVec& e, const mpz_class& c);

    bool operator==(const LaurentPoly& other) const = default;

private:
    int arity_;
    TermMap terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly scale(const LaurentPoly& p, const mpz_class& c);

// Quotient q with q*d == p, or nullopt when d does not divide p in the
// Laurent ring over Z. Monomial content of both sides is factored out first;
// what remains is greedy lead-term division under grlex, which for a single
// divisor decides divisibility exactly.
std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& d);

// every coefficient equal to 1; the zero polynomial counts as faithful
bool is_faithful(const LaurentPoly& p);

// the polynomial evaluated at x_i = 1 for all i, i.e. the coefficient sum
mpz_class specialize_ones(const LaurentPoly& p);

// Canonical text form: terms in descending grlex, "*" separated factors,
// explicit signed exponents, unit coefficients omitted, e.g. 2*x1^-1*x3^2.
std::string render(const LaurentPoly& p);
std::string render(const LaurentPoly& p, const std::vector<std::string>& names);

} // namespace somos
