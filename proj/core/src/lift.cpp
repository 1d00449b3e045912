#include "somos/lift.hpp"

#include <array>
#include <set>

#include <json.hpp>

namespace somos {

void LiftSpec::validate() const {
    const int k = base.k, i = base.i, j = base.j;
    if (k < 3) throw InvalidParams("k must be >= 3, got " + std::to_string(k));
    if (i < 1 || !(i < k - i))
        throw InvalidParams("need 0 < i < k-i: i=" + std::to_string(i) +
                            ", k=" + std::to_string(k));
    if (j < 1 || j > k - j)
        throw InvalidParams("need 0 < j <= k-j: j=" + std::to_string(j) +
                            ", k=" + std::to_string(k));
    if (j == k - j && !allow_unfaithful_case)
        throw InvalidParams("k even with j = k/2 is the known-unfaithful case; "
                            "pass the override to compute it anyway");
    if (depth < 0) throw InvalidParams("depth must be >= 0");
}

namespace {

std::array<Cell, 5> dependencies(const LiftSpec& spec, Cell c) {
    const long k = spec.base.k, i = spec.base.i, j = spec.base.j;
    return {{{c.n - k, c.level},
             {c.n - i, c.level + 2},
             {c.n - k + i, c.level - 2},
             {c.n - j, c.level + 1},
             {c.n - k + j, c.level - 1}}};
}

} // namespace

LiftPlan plan_lift(const LiftSpec& spec) {
    spec.validate();
    std::set<Cell> computed, initial;
    std::vector<Cell> work;
    for (long t = 0; t < spec.depth; ++t) work.push_back({t, spec.base.k});
    while (!work.empty()) {
        Cell c = work.back();
        work.pop_back();
        if (c.n < 0) {
            initial.insert(c);
            continue;
        }
        if (!computed.insert(c).second) continue;
        for (Cell d : dependencies(spec, c)) work.push_back(d);
    }
    LiftPlan plan;
    plan.computed.assign(computed.begin(), computed.end());
    plan.initial.assign(initial.begin(), initial.end());
    return plan;
}

LaurentPoly lift_step(const LiftSpec& spec, const LiftTable& table, Cell target) {
    auto lookup = [&table](Cell c) -> const LaurentPoly& {
        auto it = table.find(c);
        if (it == table.end()) throw MissingCell(c.n, c.level);
        return it->second;
    };
    auto deps = dependencies(spec, target);
    const LaurentPoly& divisor = lookup(deps[0]);
    LaurentPoly rhs = mul(lookup(deps[1]), lookup(deps[2]));
    rhs = add(rhs, lookup(deps[3]));
    rhs = add(rhs, lookup(deps[4]));
    if (rhs.monomial_count() > spec.monomial_cap)
        throw CapExceeded(static_cast<std::size_t>(target.n), spec.monomial_cap,
                          "monomial count");
    auto quotient = exact_div(rhs, divisor);
    if (!quotient)
        throw NotDivisible(static_cast<std::size_t>(target.n),
                           "lift cell (" + std::to_string(target.n) + ", " +
                               std::to_string(target.level) + ")");
    return *quotient;
}

LiftReport check_faithful_region(const LiftSpec& spec) {
    LiftPlan plan = plan_lift(spec);
    LiftReport report;
    report.variable_count = plan.initial.size();
    if (plan.computed.empty()) return report;

    const int arity = static_cast<int>(plan.initial.size());
    LiftTable table;
    for (std::size_t s = 0; s < plan.initial.size(); ++s)
        table.emplace(plan.initial[s], LaurentPoly::variable(arity, static_cast<int>(s)));

    for (Cell c : plan.computed) {
        try {
            LaurentPoly poly = lift_step(spec, table, c);
            report.cells.push_back({c, true, is_faithful(poly), poly.monomial_count()});
            table.emplace(c, std::move(poly));
        } catch (const NotDivisible&) {
            report.cells.push_back({c, false, false, 0});
            report.stop = StopReason::not_divisible;
            report.stop_cell = c;
            break;
        } catch (const CapExceeded&) {
            report.stop = StopReason::cap_exceeded;
            report.stop_cell = c;
            break;
        }
    }
    return report;
}

std::string to_json(const LiftReport& report, const LiftSpec& spec) {
    nlohmann::json doc;
    doc["schema"] = "somos-lift-report/1";
    doc["params"] = {{"k", spec.base.k},
                     {"i", spec.base.i},
                     {"j", spec.base.j},
                     {"depth", spec.depth},
                     {"allow_unfaithful_case", spec.allow_unfaithful_case},
                     {"monomial_cap", spec.monomial_cap}};
    doc["variable_count"] = report.variable_count;
    doc["stop"] = to_string(report.stop);
    if (report.stop_cell)
        doc["stop_cell"] = {{"n", report.stop_cell->n}, {"level", report.stop_cell->level}};
    else
        doc["stop_cell"] = nullptr;
    auto& cells = doc["cells"] = nlohmann::json::array();
    for (const auto& r : report.cells)
        cells.push_back({{"n", r.cell.n},
                         {"level", r.cell.level},
                         {"laurent", r.laurent},
                         {"faithful", r.faithful},
                         {"monomial_count", r.monomial_count}});
    return doc.dump(2);
}

} // namespace somos
