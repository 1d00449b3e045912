#include "somos/family.hpp"

namespace somos {

void FamilyParams::validate() const {
    if (k < 3) throw InvalidParams("k must be >= 3, got " + std::to_string(k));
    if (i < 1) throw InvalidParams("i must be >= 1, got " + std::to_string(i));
    if (j < 1) throw InvalidParams("j must be >= 1, got " + std::to_string(j));
    if (!(i < k - i))
        throw InvalidParams("need i < k-i: i=" + std::to_string(i) + ", k=" + std::to_string(k));
    if (!(j < k - j))
        throw InvalidParams("need j < k-j: j=" + std::to_string(j) + ", k=" + std::to_string(k));
}

FamilyParams FamilyParams::from_K(int K) {
    if (K < 1) throw InvalidParams("K must be >= 1, got " + std::to_string(K));
    return {2 * K + 1, 1, K};
}

QuadRecurrence make_family(const FamilyParams& params) {
    params.validate();
    QuadRecurrence rec;
    rec.divisor_offset = params.k;
    // store the offset pair sorted so (k,i,j) and (k,k-i,j) land on the
    // same representation
    int a = params.i, b = params.k - params.i;
    if (a > b) std::swap(a, b);
    rec.quad_terms = {{a, b, 1}};
    if (params.j == params.k - params.j) {
        rec.lin_terms = {{params.j, 2}}; // merged pair; unreachable while j < k-j holds
    } else {
        int lo = params.j, hi = params.k - params.j;
        if (lo > hi) std::swap(lo, hi);
        rec.lin_terms = {{lo, 1}, {hi, 1}};
    }
    return rec;
}

mpz_class closed_form(int K, long n) {
    if (K < 1) throw InvalidParams("K must be >= 1, got " + std::to_string(K));
    if (n < 1 || n > 6L * K + 1)
        throw OutOfRange("closed form covers 1..6K+1 = 1.." + std::to_string(6L * K + 1) +
                         ", got n = " + std::to_string(n));
    if (n <= 2L * K + 1) return 1;

    // n = (r+1)K + i with r in 2..5 and i in 2..K+1; q counts past 2K+1
    long q = n - (2L * K + 1);
    long r = (q + K - 1) / K;      // 1..4
    long i = q - (r - 1) * K + 1;  // 2..K+1
    mpz_class Kz(K), iz(i);
    switch (r) {
        case 1: // a(2K+i) = -1 + 2i
            return -1 + 2 * iz;
        case 2: // a(3K+i) = 1 + 2K - 2i + 2i^2
            return 1 + 2 * Kz - 2 * iz + 2 * iz * iz;
        case 3: // a(4K+i) = -3 - 8K + 2i - 2K^2 + 12Ki + 2i^2 + 4K^2 i
            return -3 - 8 * Kz + 2 * iz - 2 * Kz * Kz + 12 * Kz * iz + 2 * iz * iz +
                   4 * Kz * Kz * iz;
        case 4: // a(5K+i) = 3 + 10K - 10i + 16K^2 - 16Ki + 8i^2
                //           + 4K^3 - 4K^2 i + 16K i^2 + 4K^2 i^2
            return 3 + 10 * Kz - 10 * iz + 16 * Kz * Kz - 16 * Kz * iz + 8 * iz * iz +
                   4 * Kz * Kz * Kz - 4 * Kz * Kz * iz + 16 * Kz * iz * iz +
                   4 * Kz * Kz * iz * iz;
        default:
            throw OutOfRange("row dispatch fell through at n = " + std::to_string(n));
    }
}

LinearRecurrence linear_recurrence_of(int K) {
    if (K < 1) throw InvalidParams("K must be >= 1, got " + std::to_string(K));
    LinearRecurrence rec;
    rec.order = static_cast<std::size_t>(6 * K);
    rec.coeffs.assign(rec.order, mpq_class(0));
    mpq_class A(A_of(K));
    rec.coeffs[2 * K - 1] = A;
    rec.coeffs[4 * K - 1] = -A;
    rec.coeffs[6 * K - 1] = 1;
    rec.provenance = LinearRecurrence::Provenance::closed_form;
    return rec;
}

mpq_class phi(const SequenceState& seq, int K, std::size_t n) {
    const std::size_t span = 2 * static_cast<std::size_t>(K) + 1;
    if (n < span + 1)
        throw OutOfRange("phi needs n >= 2K+2 = " + std::to_string(span + 1) +
                         ", got n = " + std::to_string(n));
    if (n > seq.size())
        throw OutOfRange("phi at n = " + std::to_string(n) + " needs " + std::to_string(n) +
                         " terms, have " + std::to_string(seq.size()));
    return seq.at(n) * seq.at(n - span) - seq.at(n - 1) * seq.at(n - span + 1) -
           seq.at(n - K) - seq.at(n - K - 1);
}

EquivalenceReport verify_equivalence_report(int K, std::size_t count) {
    if (K < 1) throw InvalidParams("K must be >= 1, got " + std::to_string(K));
    const std::size_t prefix_len = 6 * static_cast<std::size_t>(K) + 1;
    if (count < prefix_len)
        throw InvalidParams("count must cover the closed-form prefix 6K+1 = " +
                            std::to_string(prefix_len));

    EquivalenceReport rep;

    SequenceState quad = generate(make_family_K(K), ones(2 * K + 1), count);
    if (quad.stop() != StopReason::none) {
        rep.detail = std::string("quadratic engine stopped: ") + to_string(quad.stop());
        return rep;
    }

    std::vector<mpq_class> prefix;
    prefix.reserve(prefix_len);
    for (std::size_t n = 1; n <= prefix_len; ++n) prefix.emplace_back(closed_form(K, n));
    std::vector<mpq_class> lin = extend(linear_recurrence_of(K), std::move(prefix), count);

    for (std::size_t n = 1; n <= count; ++n) {
        if (quad.at(n) != lin[n - 1]) {
            rep.first_divergence = n;
            rep.detail = "engines disagree at n = " + std::to_string(n);
            return rep;
        }
    }

    SequenceState lin_state{lin};
    for (std::size_t n = 2 * K + 2; n <= count; ++n) {
        if (phi(lin_state, K, n) != 0) {
            rep.first_divergence = n;
            rep.detail = "phi(n) nonzero at n = " + std::to_string(n);
            return rep;
        }
    }

    rep.ok = true;
    return rep;
}

bool verify_equivalence(int K, std::size_t count) {
    return verify_equivalence_report(K, count).ok;
}

} // namespace somos
