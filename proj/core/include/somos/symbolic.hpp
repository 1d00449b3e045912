#pragma once

#include <cstddef>
#include <vector>

#include "somos/errors.hpp"
#include "somos/laurent.hpp"
#include "somos/quadratic.hpp"

namespace somos {

// The 1-D recurrence run with formal initial conditions a(m) = x_m. Every
// later term is a Laurent polynomial in x_1..x_k as long as each division
// comes out exact; the first inexact division is the interesting event.
class SymbolicState {
public:
    explicit SymbolicState(int arity); // seeds terms 1..arity with x_1..x_arity

    const std::vector<LaurentPoly>& terms() const { return terms_; }
    const LaurentPoly& at(std::size_t n) const; // 1-based
    std::size_t size() const { return terms_.size(); }
    int arity() const { return arity_; }

    StopReason stop() const { return stop_; }
    std::size_t stop_index() const { return stop_index_; }

    void append(LaurentPoly p);
    void mark_stopped(StopReason r, std::size_t index);

private:
    int arity_;
    std::vector<LaurentPoly> terms_;
    StopReason stop_ = StopReason::none;
    std::size_t stop_index_ = 0;
};

// One symbolic term. Throws NotDivisible (the Laurentness counterexample
// signal) and CapExceeded; both carry the failing index.
LaurentPoly symbolic_step(const QuadRecurrence& rec, SymbolicState& state,
                          std::size_t monomial_cap = default_monomial_cap);

// Batch driver out to count terms total; terminal conditions are recorded on
// the state instead of thrown, mirroring the numeric generate.
void symbolic_extend(const QuadRecurrence& rec, SymbolicState& state, std::size_t count,
                     std::size_t monomial_cap = default_monomial_cap);

} // namespace somos
