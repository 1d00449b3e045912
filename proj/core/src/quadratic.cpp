#include "somos/quadratic.hpp"

#include <string>

namespace somos {

void QuadRecurrence::validate() const {
    if (divisor_offset < 1)
        throw InvalidParams("divisor offset must be >= 1, got " +
                            std::to_string(divisor_offset));
    if (quad_terms.empty() && lin_terms.empty())
        throw InvalidParams("recurrence has no right-hand side terms");
    auto check_off = [&](int off) {
        if (off < 1)
            throw InvalidParams("term offset must be >= 1, got " + std::to_string(off));
        if (off > divisor_offset)
            throw InvalidParams("term offset " + std::to_string(off) +
                                " exceeds divisor offset " + std::to_string(divisor_offset));
    };
    for (const auto& t : quad_terms) {
        check_off(t.off_a);
        check_off(t.off_b);
        if (t.coeff == 0) throw InvalidParams("zero coefficient on a quadratic term");
    }
    for (const auto& t : lin_terms) {
        check_off(t.off);
        if (t.coeff == 0) throw InvalidParams("zero coefficient on a linear term");
    }
}

QuadRecurrence somos6() {
    // S(n)S(n-6) = S(n-1)S(n-5) + S(n-2)S(n-4) + S(n-3)^2
    QuadRecurrence rec;
    rec.divisor_offset = 6;
    rec.quad_terms = {{1, 5, 1}, {2, 4, 1}, {3, 3, 1}};
    return rec;
}

QuadRecurrence dana_scott() {
    // D(n)D(n-4) = D(n-1)D(n-3) + D(n-2)
    QuadRecurrence rec;
    rec.divisor_offset = 4;
    rec.quad_terms = {{1, 3, 1}};
    rec.lin_terms = {{2, 1}};
    return rec;
}

} // namespace somos
