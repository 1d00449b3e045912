#include "somos/symbolic.hpp"

namespace somos {

SymbolicState::SymbolicState(int arity) : arity_(arity) {
    if (arity < 1) throw InvalidParams("symbolic state needs arity >= 1");
    terms_.reserve(static_cast<std::size_t>(arity));
    for (int m = 0; m < arity; ++m) terms_.push_back(LaurentPoly::variable(arity, m));
}

const LaurentPoly& SymbolicState::at(std::size_t n) const {
    if (n < 1 || n > terms_.size())
        throw OutOfRange("symbolic index " + std::to_string(n) + " out of range (have " +
                         std::to_string(terms_.size()) + " terms)");
    return terms_[n - 1];
}

void SymbolicState::append(LaurentPoly p) { terms_.push_back(std::move(p)); }

void SymbolicState::mark_stopped(StopReason r, std::size_t index) {
    stop_ = r;
    stop_index_ = index;
}

LaurentPoly symbolic_step(const QuadRecurrence& rec, SymbolicState& state,
                          std::size_t monomial_cap) {
    const std::size_t k = static_cast<std::size_t>(rec.divisor_offset);
    const std::size_t n = state.size() + 1;
    // wrong arity means wrong variable set entirely; more terms never fix it
    if (state.arity() != rec.divisor_offset)
        throw ArityMismatch(static_cast<std::size_t>(state.arity()), k);
    if (state.size() < k)
        throw OutOfRange("need " + std::to_string(k) + " symbolic terms before stepping, have " +
                         std::to_string(state.size()));

    LaurentPoly rhs(state.arity());
    for (const auto& t : rec.quad_terms)
        rhs = add(rhs, scale(mul(state.at(n - t.off_a), state.at(n - t.off_b)), t.coeff));
    for (const auto& t : rec.lin_terms) rhs = add(rhs, scale(state.at(n - t.off), t.coeff));
    if (rhs.monomial_count() > monomial_cap)
        throw CapExceeded(n, monomial_cap, "monomial count");

    auto quotient = exact_div(rhs, state.at(n - k));
    if (!quotient) throw NotDivisible(n, "symbolic term " + std::to_string(n));
    if (quotient->monomial_count() > monomial_cap)
        throw CapExceeded(n, monomial_cap, "monomial count");

    state.append(*quotient);
    return *quotient;
}

void symbolic_extend(const QuadRecurrence& rec, SymbolicState& state, std::size_t count,
                     std::size_t monomial_cap) {
    rec.validate();
    while (state.size() < count) {
        try {
            symbolic_step(rec, state, monomial_cap);
        } catch (const NotDivisible& e) {
            state.mark_stopped(StopReason::not_divisible, e.index);
            break;
        } catch (const CapExceeded& e) {
            state.mark_stopped(StopReason::cap_exceeded, e.index);
            break;
        }
    }
}

} // namespace somos
