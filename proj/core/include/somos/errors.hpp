#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace somos {

// Caller bugs: bad parameters, malformed inputs. These throw and stay thrown.
struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadInitialLength : std::invalid_argument {
    BadInitialLength(std::size_t got, std::size_t want)
        : std::invalid_argument("initial condition has " + std::to_string(got) +
                                " terms, recurrence needs " + std::to_string(want)) {}
};

struct InsufficientTerms : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct ArityMismatch : std::invalid_argument {
    ArityMismatch(std::size_t a, std::size_t b)
        : std::invalid_argument("polynomial arity mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b)) {}
};

struct DivisionByZeroPoly : std::domain_error {
    DivisionByZeroPoly() : std::domain_error("division by the zero polynomial") {}
};

struct MissingCell : std::logic_error {
    long n, level;
    MissingCell(long n_, long level_)
        : std::logic_error("lift table has no cell (" + std::to_string(n_) + ", " +
                           std::to_string(level_) + ")"),
          n(n_), level(level_) {}
};

// Terminal runtime conditions. step/symbolic_step throw these; the batch
// drivers (generate, scans, region checks) catch them and record a StopReason
// instead, so a parameter scan can observe a blowup without dying on it.
struct DivisorZero : std::runtime_error {
    std::size_t index;
    explicit DivisorZero(std::size_t index_)
        : std::runtime_error("divisor term is zero at index " + std::to_string(index_)),
          index(index_) {}
};

struct CapExceeded : std::runtime_error {
    std::size_t index;
    std::size_t cap;
    CapExceeded(std::size_t index_, std::size_t cap_, const char* what_)
        : std::runtime_error(std::string(what_) + " cap (" + std::to_string(cap_) +
                             ") exceeded at index " + std::to_string(index_)),
          index(index_), cap(cap_) {}
};

struct NotDivisible : std::runtime_error {
    std::size_t index;
    NotDivisible(std::size_t index_, const std::string& context)
        : std::runtime_error("exact division failed at " + context +
                             ": denominator is not a monomial factor"),
          index(index_) {}
};

enum class StopReason { none, divisor_zero, cap_exceeded, not_divisible };

inline const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::divisor_zero:  return "divisor_zero";
        case StopReason::cap_exceeded:  return "cap_exceeded";
        case StopReason::not_divisible: return "not_divisible";
        default:                        return "none";
    }
}

} // namespace somos
