#include "somos/linear.hpp"

#include <algorithm>

namespace somos {

void LinearRecurrence::validate() const {
    if (order == 0 || coeffs.size() != order)
        throw InvalidParams("recurrence order " + std::to_string(order) + " does not match " +
                            std::to_string(coeffs.size()) + " coefficients");
    if (coeffs.back() == 0) throw InvalidParams("trailing coefficient is zero (order is not true)");
}

std::vector<mpz_class> LinearRecurrence::normalized_operator() const {
    validate();
    // operator vector (1, -c_1, ..., -c_d); clear denominators, strip content
    mpz_class scale = 1;
    for (const auto& c : coeffs) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> op;
    op.reserve(order + 1);
    op.push_back(scale);
    for (const auto& c : coeffs) {
        mpq_class scaled = -c * scale;
        op.push_back(scaled.get_num()); // denominator is 1 by construction
    }
    mpz_class content = 0;
    for (const auto& m : op) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), m.get_mpz_t());
    for (auto& m : op) m /= content;
    // op[0] = scale/content > 0, so the leading sign is already positive
    return op;
}

std::string LinearRecurrence::render() const {
    validate();
    std::string out = "a(n) =";
    bool first = true;
    for (std::size_t t = 1; t <= order; ++t) {
        const mpq_class& c = coeffs[t - 1];
        if (c == 0) continue;
        mpq_class mag = abs(c);
        out += first ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + ");
        if (mag != 1) out += mag.get_str() + "*";
        out += "a(n-" + std::to_string(t) + ")";
        first = false;
    }
    if (first) out += " 0";
    return out;
}

std::pair<bool, std::optional<std::size_t>>
verify(const LinearRecurrence& rec, const std::vector<mpz_class>& seq) {
    rec.validate();
    for (std::size_t n = rec.order + 1; n <= seq.size(); ++n) {
        mpq_class rhs = 0;
        for (std::size_t t = 1; t <= rec.order; ++t) rhs += rec.coeffs[t - 1] * seq[n - 1 - t];
        if (rhs != seq[n - 1]) return {false, n};
    }
    return {true, std::nullopt};
}

std::vector<mpq_class> extend(const LinearRecurrence& rec, std::vector<mpq_class> prefix,
                              std::size_t count) {
    rec.validate();
    if (prefix.size() < rec.order)
        throw InsufficientTerms("prefix of " + std::to_string(prefix.size()) +
                                " terms cannot seed an order-" + std::to_string(rec.order) +
                                " recurrence");
    prefix.reserve(count);
    while (prefix.size() < count) {
        mpq_class next = 0;
        std::size_t n = prefix.size();
        for (std::size_t t = 1; t <= rec.order; ++t) next += rec.coeffs[t - 1] * prefix[n - t];
        prefix.push_back(next);
    }
    if (prefix.size() > count) prefix.resize(count);
    return prefix;
}

namespace {

// Berlekamp-Massey over Q. Returns the taps c_1..c_L of the shortest LFSR
// with s[n] = sum c_t s[n-t] for n >= L (0-based positions).
std::vector<mpq_class> berlekamp_massey(const std::vector<mpq_class>& s) {
    std::vector<mpq_class> C{1}, B{1}; // connection polys, C[i] multiplies s[n-i]
    std::size_t L = 0, m = 1;
    mpq_class b = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        mpq_class d = s[n];
        for (std::size_t t = 1; t <= L; ++t) d += C[t] * s[n - t];
        if (d == 0) {
            ++m;
        } else if (2 * L <= n) {
            std::vector<mpq_class> T = C;
            mpq_class coef = d / b;
            if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
            for (std::size_t t = 0; t < B.size(); ++t) C[t + m] -= coef * B[t];
            L = n + 1 - L;
            B = std::move(T);
            b = d;
            m = 1;
        } else {
            mpq_class coef = d / b;
            if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
            for (std::size_t t = 0; t < B.size(); ++t) C[t + m] -= coef * B[t];
            ++m;
        }
    }
    std::vector<mpq_class> taps(L, 0);
    for (std::size_t t = 1; t <= L && t < C.size(); ++t) taps[t - 1] = -C[t];
    return taps;
}

} // namespace

GuessResult guess_minimal(const std::vector<mpz_class>& seq, std::size_t max_order) {
    if (max_order == 0) throw InvalidParams("max_order must be >= 1");
    if (seq.size() < 4)
        throw InsufficientTerms("need at least 4 terms to guess, got " +
                                std::to_string(seq.size()));

    const std::size_t verify_len = std::max<std::size_t>(seq.size() / 3, 1);
    const std::size_t train_len = seq.size() - verify_len;
    const std::size_t order_bound = std::min(max_order, train_len / 2);

    GuessResult res;
    res.terms_used = train_len;
    res.terms_verified = verify_len;
    if (order_bound < 1) throw InsufficientTerms("training prefix too short to fit any order");

    std::vector<mpq_class> train(seq.begin(), seq.begin() + train_len);
    std::vector<mpq_class> taps = berlekamp_massey(train);
    if (taps.empty() || taps.size() > order_bound) return res;
    // a trailing zero tap means the minimal LFSR needs its initial-segment
    // freedom; no true-order recurrence of this length fits from the start.
    // Never happens for the strictly positive sequences this lab guesses.
    if (taps.back() == 0) return res;

    LinearRecurrence rec;
    rec.order = taps.size();
    rec.coeffs = std::move(taps);
    rec.provenance = LinearRecurrence::Provenance::guessed;

    if (!verify(rec, seq).first) return res;

    res.found = true;
    res.recurrence = std::move(rec);
    return res;
}

} // namespace somos
