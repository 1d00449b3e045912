#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "somos/errors.hpp"
#include "somos/quadratic.hpp"

namespace somos {

// These sequences grow exponentially; without a guard a bad parameter choice
// can eat the machine. One million bits is far past anything a desk-scale
// study needs while still being hit in well under a minute by a blowup.
inline constexpr std::size_t default_bit_cap = 1'000'000;

// Terms are 1-indexed: at(1) is the first term. Stored as reduced rationals
// even for integral families, because the scanner's whole job is to notice
// when integrality breaks rather than crash on a fraction.
class SequenceState {
public:
    explicit SequenceState(std::vector<mpq_class> initial);

    const std::vector<mpq_class>& terms() const { return terms_; }
    const mpq_class& at(std::size_t n) const; // 1-based, throws OutOfRange
    std::size_t size() const { return terms_.size(); }

    bool integral_so_far() const { return integral_so_far_; }
    std::optional<std::size_t> first_nonintegral_index() const { return first_nonintegral_; }

    // Set when a batch driver hit a terminal condition; stop_index is the
    // index the failed step would have produced.
    StopReason stop() const { return stop_; }
    std::size_t stop_index() const { return stop_index_; }

    void append(const mpq_class& v);
    void mark_stopped(StopReason r, std::size_t index);

private:
    std::vector<mpq_class> terms_;
    bool integral_so_far_ = true;
    std::optional<std::size_t> first_nonintegral_;
    StopReason stop_ = StopReason::none;
    std::size_t stop_index_ = 0;
};

// Computes the next term and appends it. Throws DivisorZero / CapExceeded.
mpq_class step(const QuadRecurrence& rec, SequenceState& state,
               std::size_t bit_cap = default_bit_cap);

// Runs the recurrence out to count terms total. Terminal conditions are
// recorded on the returned state (partial result retained), not thrown.
SequenceState generate(const QuadRecurrence& rec, std::vector<mpq_class> initial,
                       std::size_t count, std::size_t bit_cap = default_bit_cap);

inline std::vector<mpq_class> ones(std::size_t n) {
    return std::vector<mpq_class>(n, mpq_class(1));
}

// All-ones start. True iff every one of the count terms is an integer;
// otherwise false plus the earliest failing index. DivisorZero/CapExceeded
// are rethrown here: an integrality verdict needs all count terms to exist.
std::pair<bool, std::optional<std::size_t>>
integrality_prefix(const QuadRecurrence& rec, std::size_t count,
                   std::size_t bit_cap = default_bit_cap);

} // namespace somos
