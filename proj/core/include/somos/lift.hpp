#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "somos/errors.hpp"
#include "somos/family.hpp"
#include "somos/laurent.hpp"

namespace somos {

// The 2-D table: first index advances like the 1-D sequence, the second
// ("level", to keep it apart from the family parameter k) slides by +-1 on
// linear terms and +-2 on the product. Cells with n < 0 are formal variables.
//
//   T(n,L)*T(n-k,L) = T(n-i,L+2)*T(n-k+i,L-2) + T(n-j,L+1) + T(n-k+j,L-1)
//
// Every dependency has a strictly smaller first index, so evaluation in
// (n, level) order is always well founded, whatever the level wanders to.
struct Cell {
    long n = 0;
    long level = 0;
    auto operator<=>(const Cell&) const = default;
};

struct LiftSpec {
    FamilyParams base;
    long depth = 0; // base-row targets T(0..depth-1, k)
    // Conjecture coverage stops at k even with j = k/2; that case is the
    // known-unfaithful demonstration and has to be asked for explicitly.
    bool allow_unfaithful_case = false;
    std::size_t monomial_cap = default_monomial_cap;

    void validate() const;
};

// dependency closure of the base-row targets, computed before any algebra
struct LiftPlan {
    std::vector<Cell> computed; // ascending (n, level); that is a topo order
    std::vector<Cell> initial;  // referenced cells with n < 0, ascending
};
LiftPlan plan_lift(const LiftSpec& spec);

using LiftTable = std::map<Cell, LaurentPoly>;

// One cell. All five right-hand cells and the divisor must already be in the
// table (MissingCell otherwise). NotDivisible here is the Laurentness
// counterexample signal; the value is then not a Laurent polynomial at all.
LaurentPoly lift_step(const LiftSpec& spec, const LiftTable& table, Cell target);

struct LiftCellRecord {
    Cell cell;
    bool laurent = false;  // exact division succeeded
    bool faithful = false; // laurent and every coefficient 1
    std::size_t monomial_count = 0;
};

struct LiftReport {
    std::vector<LiftCellRecord> cells; // ascending (n, level)
    StopReason stop = StopReason::none;
    std::optional<Cell> stop_cell;
    std::size_t variable_count = 0;
};

// Evaluates the whole closure in dependency order. A NotDivisible cell is
// recorded (laurent=false, faithful=false) and ends the run, since anything
// downstream of it has no polynomial value; CapExceeded likewise ends the
// run but decides nothing about the cell.
LiftReport check_faithful_region(const LiftSpec& spec);

std::string to_json(const LiftReport& report, const LiftSpec& spec);

} // namespace somos
