#include "somos/sequence.hpp"

namespace somos {

namespace {

std::size_t rational_bits(const mpq_class& v) {
    // canonical form, so num/den bit lengths are the honest size measure
    std::size_t nb = mpz_sizeinbase(v.get_num().get_mpz_t(), 2);
    std::size_t db = mpz_sizeinbase(v.get_den().get_mpz_t(), 2);
    return nb > db ? nb : db;
}

} // namespace

SequenceState::SequenceState(std::vector<mpq_class> initial) {
    terms_.reserve(initial.size());
    for (auto& v : initial) append(v);
}

const mpq_class& SequenceState::at(std::size_t n) const {
    if (n < 1 || n > terms_.size())
        throw OutOfRange("sequence index " + std::to_string(n) + " out of range (have " +
                         std::to_string(terms_.size()) + " terms)");
    return terms_[n - 1];
}

void SequenceState::append(const mpq_class& v) {
    terms_.push_back(v);
    if (integral_so_far_ && terms_.back().get_den() != 1) {
        integral_so_far_ = false;
        first_nonintegral_ = terms_.size();
    }
}

void SequenceState::mark_stopped(StopReason r, std::size_t index) {
    stop_ = r;
    stop_index_ = index;
}

mpq_class step(const QuadRecurrence& rec, SequenceState& state, std::size_t bit_cap) {
    const std::size_t k = static_cast<std::size_t>(rec.divisor_offset);
    const std::size_t n = state.size() + 1;
    if (state.size() < k)
        throw OutOfRange("need " + std::to_string(k) + " terms before stepping, have " +
                         std::to_string(state.size()));

    const mpq_class& divisor = state.at(n - k);
    if (divisor == 0) throw DivisorZero(n);

    mpq_class rhs = 0;
    for (const auto& t : rec.quad_terms)
        rhs += t.coeff * state.at(n - t.off_a) * state.at(n - t.off_b);
    for (const auto& t : rec.lin_terms)
        rhs += t.coeff * state.at(n - t.off);

    mpq_class value = rhs / divisor; // mpq_class keeps this reduced
    if (rational_bits(value) > bit_cap) throw CapExceeded(n, bit_cap, "term bit-length");

    state.append(value);
    return value;
}

SequenceState generate(const QuadRecurrence& rec, std::vector<mpq_class> initial,
                       std::size_t count, std::size_t bit_cap) {
    rec.validate();
    const std::size_t k = static_cast<std::size_t>(rec.divisor_offset);
    if (initial.size() != k) throw BadInitialLength(initial.size(), k);
    for (const auto& v : initial)
        if (v == 0) throw InvalidParams("initial terms must be nonzero");

    if (count < k) initial.resize(count);
    SequenceState state(std::move(initial));
    while (state.size() < count) {
        try {
            step(rec, state, bit_cap);
        } catch (const DivisorZero& e) {
            state.mark_stopped(StopReason::divisor_zero, e.index);
            break;
        } catch (const CapExceeded& e) {
            state.mark_stopped(StopReason::cap_exceeded, e.index);
            break;
        }
    }
    return state;
}

std::pair<bool, std::optional<std::size_t>>
integrality_prefix(const QuadRecurrence& rec, std::size_t count, std::size_t bit_cap) {
    rec.validate();
    const std::size_t k = static_cast<std::size_t>(rec.divisor_offset);
    if (count < k)
        throw InvalidParams("count " + std::to_string(count) + " shorter than the initial block");

    SequenceState state = generate(rec, ones(k), count, bit_cap);
    if (state.stop() == StopReason::divisor_zero) throw DivisorZero(state.stop_index());
    if (state.stop() == StopReason::cap_exceeded)
        throw CapExceeded(state.stop_index(), bit_cap, "term bit-length");
    return {state.integral_so_far(), state.first_nonintegral_index()};
}

} // namespace somos
