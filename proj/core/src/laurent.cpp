#include "somos/laurent.hpp"

namespace somos {

LaurentPoly LaurentPoly::constant(int arity, const mpz_class& c) {
    LaurentPoly p(arity);
    if (c != 0) p.terms_.emplace(ExpVec(arity, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int arity, int slot) {
    if (slot < 0 || slot >= arity)
        throw InvalidParams("variable slot " + std::to_string(slot) + " outside arity " +
                            std::to_string(arity));
    LaurentPoly p(arity);
    ExpVec e(arity, 0);
    e[slot] = 1;
    p.terms_.emplace(std::move(e), 1);
    return p;
}

LaurentPoly LaurentPoly::monomial(int arity, ExpVec exps, const mpz_class& c) {
    if (static_cast<int>(exps.size()) != arity)
        throw ArityMismatch(exps.size(), static_cast<std::size_t>(arity));
    LaurentPoly p(arity);
    if (c != 0) p.terms_.emplace(std::move(exps), c);
    return p;
}

void LaurentPoly::add_term(const ExpVec& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

void require_same_arity(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.arity() != q.arity())
        throw ArityMismatch(static_cast<std::size_t>(p.arity()),
                            static_cast<std::size_t>(q.arity()));
}

} // namespace

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_arity(p, q);
    LaurentPoly r = p;
    for (const auto& [e, c] : q.terms()) r.add_term(e, c);
    return r;
}

LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_arity(p, q);
    LaurentPoly r = p;
    for (const auto& [e, c] : q.terms()) r.add_term(e, -c);
    return r;
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
    require_same_arity(p, q);
    LaurentPoly r(p.arity());
    ExpVec e(static_cast<std::size_t>(p.arity()));
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [eq, cq] : q.terms()) {
            for (std::size_t t = 0; t < e.size(); ++t) e[t] = ep[t] + eq[t];
            r.add_term(e, cp * cq);
        }
    }
    return r;
}

LaurentPoly scale(const LaurentPoly& p, const mpz_class& c) {
    LaurentPoly r(p.arity());
    if (c == 0) return r;
    for (const auto& [e, pc] : p.terms()) r.add_term(e, pc * c);
    return r;
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& d) {
    require_same_arity(p, d);
    if (d.is_zero()) throw DivisionByZeroPoly();
    const int arity = p.arity();
    if (p.is_zero()) return LaurentPoly(arity);

    // componentwise minimum exponent = the monomial content shift
    auto min_exps = [arity](const LaurentPoly& f) {
        ExpVec m = f.terms().begin()->first;
        for (const auto& [e, c] : f.terms())
            for (int t = 0; t < arity; ++t)
                if (e[t] < m[t]) m[t] = e[t];
        return m;
    };
    ExpVec shift_p = min_exps(p), shift_d = min_exps(d);

    auto shifted = [arity](const LaurentPoly& f, const ExpVec& s) {
        LaurentPoly g(arity);
        for (const auto& [e, c] : f.terms()) {
            ExpVec ne(e);
            for (int t = 0; t < arity; ++t) ne[t] -= s[t];
            g.add_term(ne, c);
        }
        return g;
    };
    LaurentPoly R = shifted(p, shift_p);
    const LaurentPoly D = shifted(d, shift_d);

    // Greedy division by the grlex-leading term. If a quotient exists its
    // leading term is LT(R)/LT(D) (leading terms multiply without collision
    // under a multiplicative order), so failure here is proof of
    // non-divisibility; no backtracking needed.
    const auto& [lt_d_exp, lt_d_coef] = *D.terms().rbegin();
    LaurentPoly Q(arity);
    ExpVec qe(static_cast<std::size_t>(arity));
    while (!R.is_zero()) {
        const auto& [lt_r_exp, lt_r_coef] = *R.terms().rbegin();
        for (int t = 0; t < arity; ++t) {
            qe[t] = lt_r_exp[t] - lt_d_exp[t];
            if (qe[t] < 0) return std::nullopt;
        }
        if (lt_r_coef % lt_d_coef != 0) return std::nullopt;
        mpz_class qc = lt_r_coef / lt_d_coef;
        Q.add_term(qe, qc);
        for (const auto& [e, c] : D.terms()) {
            ExpVec ne(e);
            for (int t = 0; t < arity; ++t) ne[t] += qe[t];
            R.add_term(ne, -c * qc);
        }
    }

    // undo the content shifts: quotient exponents move by shift_p - shift_d
    ExpVec back(static_cast<std::size_t>(arity));
    for (int t = 0; t < arity; ++t) back[t] = shift_p[t] - shift_d[t];
    LaurentPoly out(arity);
    for (const auto& [e, c] : Q.terms()) {
        ExpVec ne(e);
        for (int t = 0; t < arity; ++t) ne[t] += back[t];
        out.add_term(ne, c);
    }
    return out;
}

bool is_faithful(const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (c != 1) return false;
    return true;
}

mpz_class specialize_ones(const LaurentPoly& p) {
    mpz_class sum = 0;
    for (const auto& [e, c] : p.terms()) sum += c;
    return sum;
}

std::string render(const LaurentPoly& p) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(p.arity()));
    for (int t = 1; t <= p.arity(); ++t) names.push_back("x" + std::to_string(t));
    return render(p, names);
}

std::string render(const LaurentPoly& p, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != p.arity())
        throw ArityMismatch(names.size(), static_cast<std::size_t>(p.arity()));
    if (p.is_zero()) return "0";

    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string vars;
        for (std::size_t t = 0; t < e.size(); ++t) {
            if (e[t] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[t];
            if (e[t] != 1) vars += "^" + std::to_string(e[t]);
        }
        if (vars.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += vars;
        } else {
            out += mag.get_str() + "*" + vars;
        }
        first = false;
    }
    return out;
}

} // namespace somos
