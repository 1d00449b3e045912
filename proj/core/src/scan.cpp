#include "somos/scan.hpp"

#include <atomic>
#include <thread>

#include <json.hpp>

namespace somos {

bool conjecture_rule(int k, int i, int j) {
    if (k % 2 == 0) {
        if (i % 2 == 1) return 2 * j == k;
        return 2 * j == i || 2 * j == k || 2 * j == k - i;
    }
    if (i % 2 == 1) return 2 * j == k - i;
    return 2 * j == i;
}

bool predict(const FamilyParams& params) {
    params.validate();
    return conjecture_rule(params.k, params.i, params.j);
}

std::vector<FamilyParams> admissible_cells(int k_min, int k_max, int i_filter, int j_filter) {
    std::vector<FamilyParams> cells;
    for (int k = k_min; k <= k_max; ++k)
        for (int i = 1; i < k - i; ++i)
            for (int j = 1; j < k - j; ++j) {
                if (i_filter && i != i_filter) continue;
                if (j_filter && j != j_filter) continue;
                cells.push_back({k, i, j});
            }
    return cells;
}

void ScanConfig::validate() const {
    if (k_min < 3) throw InvalidParams("k_min must be >= 3");
    if (k_max < k_min) throw InvalidParams("k_max must be >= k_min");
    if (terms_per_cell <= static_cast<std::size_t>(k_max))
        throw InvalidParams("terms_per_cell must exceed the largest k scanned");
    if (jobs < 1) throw InvalidParams("jobs must be >= 1");
}

namespace {

ScanCell run_cell(const FamilyParams& params, const ScanConfig& config) {
    ScanCell cell;
    cell.params = params;
    cell.predicted_integer = predict(params);

    // A cell's verdict is settled at its first non-integral term; running the
    // remaining terms would only compound ever-fatter rationals for nothing.
    QuadRecurrence rec = make_family(params);
    SequenceState state{ones(params.k)};
    try {
        while (state.size() < config.terms_per_cell && state.integral_so_far())
            step(rec, state, config.bit_cap);
    } catch (const DivisorZero& e) {
        state.mark_stopped(StopReason::divisor_zero, e.index);
    } catch (const CapExceeded& e) {
        state.mark_stopped(StopReason::cap_exceeded, e.index);
    }
    cell.stop = state.stop();
    cell.observed_integer = state.integral_so_far() && state.stop() == StopReason::none &&
                            state.size() == config.terms_per_cell;
    cell.first_failure_index = state.first_nonintegral_index();
    cell.agrees_with_conjecture = cell.predicted_integer == cell.observed_integer;

    if (cell.observed_integer) {
        std::vector<mpz_class> ints;
        ints.reserve(state.size());
        for (const auto& t : state.terms()) ints.push_back(t.get_num());
        GuessResult guess = guess_minimal(ints, config.guess_max_order);
        if (guess.found) cell.guessed_order = guess.recurrence->order;
    }
    return cell;
}

} // namespace

ScanReport scan(const ScanConfig& config) {
    config.validate();
    ScanReport report;
    report.config = config;

    std::vector<FamilyParams> cells =
        admissible_cells(config.k_min, config.k_max, config.i_filter, config.j_filter);
    report.cells.resize(cells.size());

    unsigned jobs = config.jobs;
    if (jobs > cells.size()) jobs = static_cast<unsigned>(cells.size());
    if (jobs <= 1) {
        for (std::size_t t = 0; t < cells.size(); ++t)
            report.cells[t] = run_cell(cells[t], config);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (std::size_t t = next++; t < cells.size(); t = next++)
                    report.cells[t] = run_cell(cells[t], config);
            });
        for (auto& th : pool) th.join();
    }

    for (const auto& c : report.cells) {
        if (c.predicted_integer) ++report.predicted_true;
        if (c.observed_integer) ++report.observed_true;
        if (!c.agrees_with_conjecture) ++report.disagreements;
    }
    return report;
}

std::string to_json(const ScanReport& report, const std::string& timestamp) {
    nlohmann::json doc;
    doc["schema"] = "somos-scan-report/1";
    doc["config"] = {{"k_min", report.config.k_min},
                     {"k_max", report.config.k_max},
                     {"i_filter", report.config.i_filter},
                     {"j_filter", report.config.j_filter},
                     {"terms_per_cell", report.config.terms_per_cell},
                     {"guess_max_order", report.config.guess_max_order},
                     {"bit_cap", report.config.bit_cap}};
    doc["summary"] = {{"cells", report.cells.size()},
                      {"predicted_integer", report.predicted_true},
                      {"observed_integer", report.observed_true},
                      {"disagreements", report.disagreements}};
    if (!timestamp.empty()) doc["generated_at"] = timestamp;
    auto& cells = doc["cells"] = nlohmann::json::array();
    for (const auto& c : report.cells) {
        nlohmann::json jc = {{"k", c.params.k},
                             {"i", c.params.i},
                             {"j", c.params.j},
                             {"predicted_integer", c.predicted_integer},
                             {"observed_integer", c.observed_integer},
                             {"agrees_with_conjecture", c.agrees_with_conjecture},
                             {"stop", to_string(c.stop)}};
        jc["first_failure_index"] =
            c.first_failure_index ? nlohmann::json(*c.first_failure_index) : nullptr;
        jc["guessed_order"] = c.guessed_order ? nlohmann::json(*c.guessed_order) : nullptr;
        cells.push_back(std::move(jc));
    }
    return doc.dump(2);
}

std::string to_csv(const ScanReport& report) {
    std::string out = "k,i,j,predicted_integer,observed_integer,first_failure_index,"
                      "guessed_order,agrees_with_conjecture,stop\n";
    for (const auto& c : report.cells) {
        out += std::to_string(c.params.k) + "," + std::to_string(c.params.i) + "," +
               std::to_string(c.params.j) + ",";
        out += c.predicted_integer ? "true," : "false,";
        out += c.observed_integer ? "true," : "false,";
        out += c.first_failure_index ? std::to_string(*c.first_failure_index) : "";
        out += ",";
        out += c.guessed_order ? std::to_string(*c.guessed_order) : "";
        out += ",";
        out += c.agrees_with_conjecture ? "true," : "false,";
        out += to_string(c.stop);
        out += "\n";
    }
    return out;
}

std::string summary_line(const ScanReport& report) {
    return "scanned " + std::to_string(report.cells.size()) + " cells (k " +
           std::to_string(report.config.k_min) + ".." + std::to_string(report.config.k_max) +
           ", " + std::to_string(report.config.terms_per_cell) + " terms each): " +
           std::to_string(report.predicted_true) + " predicted integral, " +
           std::to_string(report.observed_true) + " observed integral, " +
           std::to_string(report.disagreements) + " disagreements";
}

} // namespace somos
