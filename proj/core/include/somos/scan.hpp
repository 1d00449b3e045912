#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "somos/errors.hpp"
#include "somos/family.hpp"
#include "somos/linear.hpp"
#include "somos/sequence.hpp"

namespace somos {

// The conjectured integrality rule, as a literal predicate on (k, i, j):
//   k even, i odd:  j = k/2
//   k even, i even: j = i/2, j = k/2, or j = (k-i)/2
//   k odd,  i odd:  j = (k-i)/2
//   k odd,  i even: j = i/2
// Note j = k/2 fails the j < k-j admissibility constraint, so that branch
// never fires for cells an admissible scan visits.
bool conjecture_rule(int k, int i, int j);

// conjecture_rule over validated admissible params
bool predict(const FamilyParams& params);

// all (k, i, j) with k in [k_min, k_max], i < k-i, j < k-j, ascending;
// i_filter/j_filter of 0 mean no filter
std::vector<FamilyParams> admissible_cells(int k_min, int k_max, int i_filter = 0,
                                           int j_filter = 0);

struct ScanConfig {
    int k_min = 3;
    int k_max = 10;
    int i_filter = 0;
    int j_filter = 0;
    std::size_t terms_per_cell = 120;
    std::size_t guess_max_order = 40;
    std::size_t bit_cap = default_bit_cap;
    unsigned jobs = 1;

    void validate() const;
};

struct ScanCell {
    FamilyParams params;
    bool predicted_integer = false;
    bool observed_integer = false; // all terms_per_cell terms integral
    std::optional<std::size_t> first_failure_index;
    std::optional<std::size_t> guessed_order; // only for observed-integral cells
    bool agrees_with_conjecture = false;
    StopReason stop = StopReason::none; // divisor_zero/cap_exceeded, recorded not thrown
};

struct ScanReport {
    ScanConfig config;
    std::vector<ScanCell> cells; // ascending (k, i, j), one per admissible cell
    std::size_t predicted_true = 0;
    std::size_t observed_true = 0;
    std::size_t disagreements = 0;
};

// Runs every admissible cell in the configured range: terms_per_cell terms
// of the all-ones sequence, integrality classification, and a minimal
// linear-recurrence guess for the integral cells. Cells are independent;
// jobs > 1 fans them out over a thread pool with deterministic ordering.
ScanReport scan(const ScanConfig& config);

// extra_metadata, when nonempty, lands in a "generated_at" field; leave it
// empty for byte-identical reruns
std::string to_json(const ScanReport& report, const std::string& timestamp = "");
std::string to_csv(const ScanReport& report);
std::string summary_line(const ScanReport& report);

} // namespace somos
