// somos: exact-arithmetic lab for the quadratic recurrence family
//   b(n)b(n-k) = b(n-i)b(n-k+i) + b(n-j) + b(n-k+j)
// Subcommands: generate, verify, guess, symbolic, lift, scan.

#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "somos/family.hpp"
#include "somos/lift.hpp"
#include "somos/linear.hpp"
#include "somos/scan.hpp"
#include "somos/sequence.hpp"
#include "somos/symbolic.hpp"

namespace {

// Stable exit codes; keep in sync with the table in README.md.
namespace exit_code {
constexpr int ok = 0;
constexpr int failure = 1;       // negative result: mismatch, no recurrence found, disagreements
constexpr int usage = 2;         // bad flags, parameters, or input
constexpr int divisor_zero = 3;  // the recurrence is undefined from some index on
constexpr int cap_exceeded = 4;  // bit-length or monomial cap hit
constexpr int non_integer = 5;   // a non-integral term appeared (terms still printed)
constexpr int not_divisible = 6; // symbolic division failed: Laurentness counterexample
} // namespace exit_code

struct FamilyOpts {
    int K = 0;
    int k = 0, i = 0, j = 0;

    bool given() const { return K > 0 || k > 0; }
    somos::FamilyParams params() const {
        if (K > 0) return somos::FamilyParams::from_K(K);
        return somos::FamilyParams{k, i, j}; // callers validate per their own rules
    }
};

void add_family_flags(CLI::App* cmd, FamilyOpts& opts) {
    auto* K = cmd->add_option("--K", opts.K, "main-family shorthand: k=2K+1, i=1, j=K");
    auto* k = cmd->add_option("--k", opts.k, "divisor offset k");
    auto* i = cmd->add_option("--i", opts.i, "product offset i (pairs with k-i)");
    auto* j = cmd->add_option("--j", opts.j, "linear offset j (pairs with k-j)");
    K->excludes(k)->excludes(i)->excludes(j);
    k->needs(i, j);
    i->needs(k);
    j->needs(k);
}

void write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw somos::InvalidParams("cannot open output file: " + out_path);
    f << payload;
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

std::vector<mpz_class> parse_integers(const std::string& text) {
    std::string cleaned = text;
    for (auto& ch : cleaned)
        if (ch == ',') ch = ' ';
    std::istringstream in(cleaned);
    std::vector<mpz_class> out;
    std::string tok;
    while (in >> tok) {
        try {
            out.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw somos::InvalidParams("not an integer: '" + tok + "'");
        }
    }
    return out;
}

int run_generate(const FamilyOpts& fam, std::size_t count, const std::string& format,
                 std::size_t bit_cap, const std::string& out_path) {
    somos::FamilyParams p = fam.params();
    somos::QuadRecurrence rec = somos::make_family(p);
    somos::SequenceState state = somos::generate(rec, somos::ones(p.k), count, bit_cap);

    std::string payload;
    if (format == "json") {
        nlohmann::json doc;
        doc["schema"] = "somos-generate/1";
        doc["params"] = {{"k", p.k}, {"i", p.i}, {"j", p.j}};
        doc["count_requested"] = count;
        doc["integral"] = state.integral_so_far();
        doc["stop"] = somos::to_string(state.stop());
        auto& terms = doc["terms"] = nlohmann::json::array();
        for (std::size_t n = 1; n <= state.size(); ++n) terms.push_back(state.at(n).get_str());
        payload = doc.dump(2) + "\n";
    } else {
        for (std::size_t n = 1; n <= state.size(); ++n) {
            if (n > 1) payload += " ";
            payload += state.at(n).get_str();
        }
        payload += "\n";
    }
    write_output(payload, out_path);

    if (state.stop() == somos::StopReason::divisor_zero) return exit_code::divisor_zero;
    if (state.stop() == somos::StopReason::cap_exceeded) return exit_code::cap_exceeded;
    if (!state.integral_so_far()) return exit_code::non_integer;
    return exit_code::ok;
}

int run_verify(int K, std::size_t count) {
    somos::EquivalenceReport rep = somos::verify_equivalence_report(K, count);
    if (rep.ok) {
        std::cout << "K=" << K << ", " << count
                  << " terms: quadratic engine, closed-form prefix, linear recurrence, and "
                     "phi residuals all agree\n";
        return exit_code::ok;
    }
    std::cout << "mismatch: " << rep.detail << "\n";
    return exit_code::failure;
}

int run_guess(const FamilyOpts& fam, const std::string& terms_arg, const std::string& file_arg,
              std::size_t count, std::size_t max_order) {
    std::vector<mpz_class> seq;
    if (!terms_arg.empty()) {
        seq = parse_integers(terms_arg);
    } else if (!file_arg.empty()) {
        std::ifstream f(file_arg);
        if (!f) throw somos::InvalidParams("cannot read file: " + file_arg);
        std::stringstream buf;
        buf << f.rdbuf();
        seq = parse_integers(buf.str());
    } else if (fam.given()) {
        somos::FamilyParams p = fam.params();
        p.validate();
        somos::SequenceState state =
            somos::generate(somos::make_family(p), somos::ones(p.k), count);
        if (!state.integral_so_far() || state.stop() != somos::StopReason::none) {
            std::cout << "family sequence is not an integer sequence over " << count
                      << " terms; nothing to guess\n";
            return exit_code::failure;
        }
        seq.reserve(state.size());
        for (const auto& t : state.terms()) seq.push_back(t.get_num());
    } else {
        throw somos::InvalidParams("pass --terms, --file, or family parameters");
    }

    somos::GuessResult res;
    try {
        res = somos::guess_minimal(seq, max_order);
    } catch (const somos::InsufficientTerms& e) {
        std::cout << e.what() << "\n";
        return exit_code::failure;
    }
    if (!res.found) {
        std::cout << "no C-finite recurrence of order <= " << max_order << " found ("
                  << res.terms_used << " training terms, " << res.terms_verified
                  << " held out)\n";
        return exit_code::failure;
    }
    std::cout << res.recurrence->render() << "\n";
    std::cout << "order " << res.recurrence->order << "; fitted on " << res.terms_used
              << " terms, verified on " << res.terms_verified << " held-out terms\n";
    return exit_code::ok;
}

int run_symbolic(const FamilyOpts& fam, std::size_t count, std::size_t cap,
                 const std::string& format, const std::string& out_path) {
    somos::FamilyParams p = fam.params();
    p.validate();
    somos::QuadRecurrence rec = somos::make_family(p);
    somos::SymbolicState state(p.k);
    somos::symbolic_extend(rec, state, count, cap);

    std::string payload;
    if (format == "json") {
        nlohmann::json doc;
        doc["schema"] = "somos-symbolic/1";
        doc["params"] = {{"k", p.k}, {"i", p.i}, {"j", p.j}};
        doc["stop"] = somos::to_string(state.stop());
        doc["stop_index"] =
            state.stop() == somos::StopReason::none ? nlohmann::json(nullptr)
                                                    : nlohmann::json(state.stop_index());
        auto& terms = doc["terms"] = nlohmann::json::array();
        for (std::size_t n = 1; n <= state.size(); ++n)
            terms.push_back({{"n", n},
                             {"poly", somos::render(state.at(n))},
                             {"monomial_count", state.at(n).monomial_count()},
                             {"faithful", somos::is_faithful(state.at(n))}});
        payload = doc.dump(2) + "\n";
    } else {
        for (std::size_t n = 1; n <= state.size(); ++n)
            payload += "a(" + std::to_string(n) + ") = " + somos::render(state.at(n)) + "\n";
        if (state.stop() != somos::StopReason::none)
            payload += std::string("stopped: ") + somos::to_string(state.stop()) +
                       " at term " + std::to_string(state.stop_index()) + "\n";
    }
    write_output(payload, out_path);

    if (state.stop() == somos::StopReason::not_divisible) return exit_code::not_divisible;
    if (state.stop() == somos::StopReason::cap_exceeded) return exit_code::cap_exceeded;
    return exit_code::ok;
}

int run_lift(const FamilyOpts& fam, long depth, bool allow_unfaithful, std::size_t cap,
             const std::string& format, const std::string& out_path) {
    somos::LiftSpec spec;
    spec.base = fam.params();
    spec.depth = depth;
    spec.allow_unfaithful_case = allow_unfaithful;
    spec.monomial_cap = cap;
    somos::LiftReport report = somos::check_faithful_region(spec);

    std::string payload;
    if (format == "json") {
        payload = somos::to_json(report, spec) + "\n";
    } else {
        for (const auto& r : report.cells)
            payload += "T(" + std::to_string(r.cell.n) + ", " + std::to_string(r.cell.level) +
                       "): laurent=" + (r.laurent ? "yes" : "no") +
                       " faithful=" + (r.faithful ? "yes" : "no") +
                       " monomials=" + std::to_string(r.monomial_count) + "\n";
        payload += std::to_string(report.cells.size()) + " cells over " +
                   std::to_string(report.variable_count) + " initial variables\n";
        if (report.stop != somos::StopReason::none)
            payload += std::string("stopped: ") + somos::to_string(report.stop) + " at T(" +
                       std::to_string(report.stop_cell->n) + ", " +
                       std::to_string(report.stop_cell->level) + ")\n";
    }
    write_output(payload, out_path);
    return exit_code::ok;
}

int run_scan(const somos::ScanConfig& config, const std::string& format,
             const std::string& out_path, bool with_timestamp) {
    somos::ScanReport report = somos::scan(config);
    std::string payload = format == "csv"
                              ? somos::to_csv(report)
                              : somos::to_json(report, with_timestamp ? utc_timestamp() : "");
    if (format != "csv") payload += "\n";

    if (out_path.empty()) {
        std::cerr << somos::summary_line(report) << "\n";
        std::cout << payload;
    } else {
        write_output(payload, out_path);
        std::cout << somos::summary_line(report) << "\n";
    }
    return report.disagreements == 0 ? exit_code::ok : exit_code::failure;
}

template <typename F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const somos::DivisorZero& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::divisor_zero;
    } catch (const somos::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::cap_exceeded;
    } catch (const somos::NotDivisible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::not_divisible;
    } catch (const somos::InsufficientTerms& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic lab for Somos-like quadratic recurrences"};
    app.require_subcommand(1);
    app.footer("exit codes: 0 ok, 1 negative result, 2 usage, 3 divisor zero, "
               "4 cap exceeded, 5 non-integer term, 6 symbolic division failed");

    // generate
    auto* gen = app.add_subcommand("generate", "run the quadratic recurrence, all-ones start");
    FamilyOpts gen_fam;
    add_family_flags(gen, gen_fam);
    std::size_t gen_count = 0;
    std::string gen_format = "text", gen_out;
    std::size_t gen_bit_cap = somos::default_bit_cap;
    gen->add_option("--count", gen_count, "total terms to produce")->required();
    gen->add_option("--format", gen_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    gen->add_option("--bit-cap", gen_bit_cap, "term bit-length cap");
    gen->add_option("--out", gen_out, "write output here instead of stdout");

    // verify
    auto* ver = app.add_subcommand(
        "verify", "check quadratic engine vs closed forms, linear recurrence, and phi");
    int ver_K = 0;
    std::size_t ver_count = 0;
    ver->add_option("--K", ver_K, "main-family index")->required();
    ver->add_option("--count", ver_count, "terms to compare (at least 6K+1)")->required();

    // guess
    auto* gss = app.add_subcommand("guess", "fit a minimal C-finite recurrence");
    FamilyOpts gss_fam;
    add_family_flags(gss, gss_fam);
    std::string gss_terms, gss_file;
    std::size_t gss_count = 60, gss_max_order = 40;
    gss->add_option("--terms", gss_terms, "inline sequence, comma or space separated");
    gss->add_option("--file", gss_file, "file of whitespace-separated integers");
    gss->add_option("--count", gss_count, "terms to generate when fitting a family");
    gss->add_option("--max-order", gss_max_order, "largest order to consider");

    // symbolic
    auto* sym = app.add_subcommand("symbolic",
                                   "run the recurrence on formal initial terms x1..xk");
    FamilyOpts sym_fam;
    add_family_flags(sym, sym_fam);
    std::size_t sym_count = 0, sym_cap = somos::default_monomial_cap;
    std::string sym_format = "text", sym_out;
    sym->add_option("--count", sym_count, "total terms including the k initial variables")
        ->required();
    sym->add_option("--cap", sym_cap, "monomial-count cap");
    sym->add_option("--format", sym_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    sym->add_option("--out", sym_out, "write output here instead of stdout");

    // lift
    auto* lft = app.add_subcommand("lift", "evaluate the 2-D lifted table T(n, level)");
    FamilyOpts lft_fam;
    add_family_flags(lft, lft_fam);
    long lft_depth = 0;
    bool lft_allow = false;
    std::size_t lft_cap = somos::default_monomial_cap;
    std::string lft_format = "text", lft_out;
    lft->add_option("--depth", lft_depth, "base-row cells T(0..depth-1, k) to compute")
        ->required();
    lft->add_flag("--allow-unfaithful", lft_allow,
                  "permit the excluded k even, j=k/2 demonstration case");
    lft->add_option("--cap", lft_cap, "monomial-count cap");
    lft->add_option("--format", lft_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    lft->add_option("--out", lft_out, "write output here instead of stdout");

    // scan
    auto* scn = app.add_subcommand("scan", "classify admissible (k,i,j) cells by integrality");
    somos::ScanConfig scn_config;
    std::string scn_format = "json", scn_out;
    bool scn_timestamp = false;
    scn->add_option("--k-min", scn_config.k_min, "smallest k (default 3)");
    scn->add_option("--k-max", scn_config.k_max, "largest k (default 10)");
    scn->add_option("--i", scn_config.i_filter, "restrict to this i");
    scn->add_option("--j", scn_config.j_filter, "restrict to this j");
    scn->add_option("--terms-per-cell", scn_config.terms_per_cell,
                    "terms to test per cell (default 120)");
    scn->add_option("--max-order", scn_config.guess_max_order,
                    "guessing bound for integral cells (default 40)");
    scn->add_option("--bit-cap", scn_config.bit_cap, "term bit-length cap");
    scn->add_option("--jobs", scn_config.jobs, "worker threads (default 1)");
    scn->add_option("--format", scn_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    scn->add_option("--out", scn_out, "write the report here; summary stays on stdout");
    scn->add_flag("--with-timestamp", scn_timestamp,
                  "embed a generation timestamp (breaks byte-identical reruns)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code::usage;
    }

    if (gen->parsed()) {
        if (!gen_fam.given()) {
            std::cerr << "error: pass --K or --k/--i/--j\n";
            return exit_code::usage;
        }
        return guarded([&] {
            gen_fam.params().validate();
            return run_generate(gen_fam, gen_count, gen_format, gen_bit_cap, gen_out);
        });
    }
    if (ver->parsed()) return guarded([&] { return run_verify(ver_K, ver_count); });
    if (gss->parsed())
        return guarded(
            [&] { return run_guess(gss_fam, gss_terms, gss_file, gss_count, gss_max_order); });
    if (sym->parsed()) {
        if (!sym_fam.given()) {
            std::cerr << "error: pass --K or --k/--i/--j\n";
            return exit_code::usage;
        }
        return guarded([&] { return run_symbolic(sym_fam, sym_count, sym_cap, sym_format, sym_out); });
    }
    if (lft->parsed()) {
        if (!lft_fam.given()) {
            std::cerr << "error: pass --K or --k/--i/--j\n";
            return exit_code::usage;
        }
        return guarded(
            [&] { return run_lift(lft_fam, lft_depth, lft_allow, lft_cap, lft_format, lft_out); });
    }
    if (scn->parsed())
        return guarded([&] { return run_scan(scn_config, scn_format, scn_out, scn_timestamp); });
    return exit_code::usage;
}
