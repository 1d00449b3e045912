#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// stdout only; stderr is dropped so usage noise cannot leak into goldens
Run cli(const std::string& args) {
    const std::string cmd = std::string(SOMOS_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("generate") {
    auto r = cli("generate --K 1 --count 7");
    CHECK(r.code == 0);
    CHECK(r.out == "1 1 1 3 7 31 85\n");

    CHECK(cli("generate --k 3 --i 1 --j 1 --count 7").out == r.out);
    CHECK(cli("generate --K 1 --count 13").out ==
          "1 1 1 3 7 31 85 393 1093 5071 14119 65523 182449\n");

    auto frac = cli("generate --k 4 --i 1 --j 1 --count 10");
    CHECK(frac.code == 5); // ran to completion, but a term is not an integer
    CHECK(frac.out.find("511/3") != std::string::npos);

    auto capped = cli("generate --K 1 --count 50 --bit-cap 8");
    CHECK(capped.code == 4);

    auto j = nlohmann::json::parse(cli("generate --K 1 --count 8 --format json").out);
    CHECK(j["schema"] == "somos-generate/1");
    CHECK(j["params"]["k"] == 3);
    CHECK(j["integral"] == true);
    CHECK(j["stop"] == "none");
    REQUIRE(j["terms"].size() == 8);
    CHECK(j["terms"][7] == "393"); // decimal strings survive any bigint width
}

TEST_CASE("verify") {
    auto r = cli("verify --K 1 --count 60");
    CHECK(r.code == 0);
    CHECK(r.out.find("agree") != std::string::npos);
    CHECK(cli("verify --K 4 --count 120").code == 0);
}

TEST_CASE("guess") {
    auto r = cli("guess --K 1 --count 60");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "a(n) = 14*a(n-2) - 14*a(n-4) + a(n-6)\n"
          "order 6; fitted on 40 terms, verified on 20 held-out terms\n");

    auto tiny = cli("guess --terms 1,1,1,1 --max-order 1");
    CHECK(tiny.code == 0);
    CHECK(tiny.out.find("a(n) = a(n-1)") == 0);

    auto fact = cli("guess --terms 1,2,6,24,120,720,5040,40320,362880,3628800 "
                    "--max-order 3");
    CHECK(fact.code == 1); // a negative result, not an error
    CHECK(fact.out.find("no C-finite recurrence of order <= 3") != std::string::npos);

    const char* path = "/tmp/somos_test_guess_terms.txt";
    {
        std::ofstream f(path);
        f << "1 1\n2 3\n5 8 13 21 34 55\n"; // whitespace and newlines both split
    }
    auto file = cli(std::string("guess --file ") + path + " --max-order 4");
    CHECK(file.code == 0);
    CHECK(file.out.find("a(n) = a(n-1) + a(n-2)") == 0);
    std::remove(path);
}

TEST_CASE("symbolic") {
    auto r = cli("symbolic --K 1 --count 4");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "a(1) = x1\n"
          "a(2) = x2\n"
          "a(3) = x3\n"
          "a(4) = x1^-1*x2*x3 + x1^-1*x2 + x1^-1*x3\n");

    auto broken = cli("symbolic --k 4 --i 1 --j 1 --count 12");
    CHECK(broken.code == 6);
    CHECK(broken.out.find("stopped: not_divisible at term 9") != std::string::npos);

    CHECK(cli("symbolic --K 1 --count 14 --cap 50").code == 4);

    auto j = nlohmann::json::parse(cli("symbolic --K 1 --count 5 --format json").out);
    CHECK(j["schema"] == "somos-symbolic/1");
    CHECK(j["stop"] == "none");
    REQUIRE(j["terms"].size() == 5);
    CHECK(j["terms"][4]["monomial_count"] == 6);
}

TEST_CASE("lift") {
    auto r = cli("lift --K 1 --depth 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("T(0, 1): laurent=yes faithful=yes monomials=3") == 0);
    CHECK(r.out.find("T(2, 3): laurent=yes faithful=yes monomials=31") != std::string::npos);
    CHECK(r.out.find("11 cells over 24 initial variables") != std::string::npos);

    // the excluded case needs its override
    CHECK(cli("lift --k 4 --i 1 --j 2 --depth 2").code == 2);
    auto forced = cli("lift --k 4 --i 1 --j 2 --depth 5 --allow-unfaithful --format json");
    CHECK(forced.code == 0); // the report is the product; a failed cell is a finding
    auto j = nlohmann::json::parse(forced.out);
    CHECK(j["stop"] == "not_divisible");
    CHECK(j["stop_cell"]["n"] == 4);
    CHECK(j["stop_cell"]["level"] == 4);
    REQUIRE(j["cells"].size() == 26);
}

TEST_CASE("scan") {
    auto r = cli("scan --k-min 3 --k-max 4 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "k,i,j,predicted_integer,observed_integer,first_failure_index,"
          "guessed_order,agrees_with_conjecture,stop\n"
          "3,1,1,true,true,,6,true,none\n"
          "4,1,1,false,false,9,,true,none\n");

    // --out routes the payload to the file and the summary to stdout
    const char* path = "/tmp/somos_test_scan.json";
    auto filed = cli(std::string("scan --k-min 3 --k-max 4 --out ") + path);
    CHECK(filed.code == 0);
    CHECK(filed.out.find("scanned 2 cells") != std::string::npos);
    std::ifstream f(path);
    REQUIRE(f.good());
    nlohmann::json doc = nlohmann::json::parse(f);
    CHECK(doc["schema"] == "somos-scan-report/1");
    CHECK(doc["summary"]["cells"] == 2);
    CHECK(!doc.contains("generated_at")); // reruns stay byte-identical
    std::remove(path);

    auto stamped = cli(std::string("scan --k-min 3 --k-max 3 --with-timestamp --out ") + path);
    CHECK(stamped.code == 0);
    std::ifstream f2(path);
    nlohmann::json doc2 = nlohmann::json::parse(f2);
    CHECK(doc2.contains("generated_at"));
    std::remove(path);

    CHECK(cli("scan --k-min 3 --k-max 6 --jobs 4 --format csv").out ==
          cli("scan --k-min 3 --k-max 6 --format csv").out);
}

TEST_CASE("usage errors") {
    CHECK(cli("").code == 2);
    CHECK(cli("--bogus").code == 2);
    CHECK(cli("generate").code == 2);                      // --count is required
    CHECK(cli("generate --K 1 --k 3 --count 5").code == 2); // --K excludes --k
    CHECK(cli("generate --k 3 --count 5").code == 2);       // --k needs --i and --j
    CHECK(cli("generate --K 0 --count 5").code == 2);
    CHECK(cli("generate --k 4 --i 2 --j 1 --count 9").code == 2); // i = k-i
    CHECK(cli("scan --k-min 2 --k-max 4").code == 2);
    CHECK(cli("frobnicate").code == 2);

    // too little data is a negative answer with an explanation, not misuse
    auto short_guess = cli("guess --terms 1,1,1 --max-order 2");
    CHECK(short_guess.code == 1);
    CHECK(short_guess.out.find("at least 4 terms") != std::string::npos);

    auto help = cli("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("exit codes") != std::string::npos);
}
