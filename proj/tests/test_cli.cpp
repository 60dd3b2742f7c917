#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(LEXTAB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

const std::string kTable1Csv =
    "LexDual_to_M,4,3.1,2.2,2.1.1,1.3,1.2.1,1.1.2,1.1.1.1\n"
    "4,1,1,2,3,1,3,3,6\n"
    "3.1,0,1,1,2,1,3,3,6\n"
    "2.2,0,0,1,1,1,2,2,3\n"
    "2.1.1,0,0,0,1,0,1,1,3\n"
    "1.3,0,0,0,0,1,1,1,2\n"
    "1.2.1,0,0,0,0,0,1,1,2\n"
    "1.1.2,0,0,0,0,0,0,1,1\n"
    "1.1.1.1,0,0,0,0,0,0,0,1\n";

} // namespace

TEST_CASE("matrix csv equals the degree-4 K table") {
    const RunResult r = run_cli("matrix --kind LexDual_to_M --n 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == kTable1Csv);
}

TEST_CASE("output is byte-identical across runs and parallelism settings") {
    const RunResult a = run_cli("matrix --kind M_to_LexDual --n 5 --format csv");
    const RunResult b = run_cli("matrix --kind M_to_LexDual --n 5 --format csv");
    const RunResult c = run_cli("--parallel 2 matrix --kind M_to_LexDual --n 5 --format csv");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output == c.output);

    const RunResult v1 = run_cli("verify --identity kj --max-n 5");
    const RunResult v2 = run_cli("--parallel 2 verify --identity kj --max-n 5");
    CHECK(v1.output == v2.output);
}

TEST_CASE("expand emits the worked F-expansion") {
    const RunResult text = run_cli("expand --from Lstar --alpha 4 --to F");
    CHECK(text.exit_code == 0);
    CHECK(text.output == "F[4] + F[2.2] + F[2.1.1] + 2 F[1.2.1] + F[1.1.2]\n");

    const RunResult json = run_cli("expand --from Lstar --alpha 4 --to F --format json");
    CHECK(json.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(json.output);
    CHECK(j["basis"] == "F");
    REQUIRE(j["terms"].size() == 5);
    CHECK(j["terms"][0]["alpha"] == nlohmann::json::array({4}));
    CHECK(j["terms"][0]["coeff"] == "1");
    CHECK(j["terms"][3]["alpha"] == nlohmann::json::array({1, 2, 1}));
    CHECK(j["terms"][3]["coeff"] == "2");
}

TEST_CASE("count and enumerate") {
    CHECK(run_cli("count --kind lexical --shape 3.1 --standard").output == "6\n");
    CHECK(run_cli("count --kind lexical --shape 4 --content 2.1.1").output == "3\n");
    const RunResult e = run_cli("enumerate --kind lexical --shape 3.1 --content 2.2");
    CHECK(e.exit_code == 0);
    CHECK(e.output == "2\n1 1 2\n1 tableaux\n");
    const RunResult ej = run_cli("enumerate --kind immaculate --shape 1.2.2 --standard --format json");
    const nlohmann::json j = nlohmann::json::parse(ej.output);
    CHECK(j.size() == 3);
    CHECK(j[0]["shape"] == nlohmann::json::array({1, 2, 2}));
    // bottom row first in the serialized form
    CHECK(j[0]["rows"] == nlohmann::json::parse("[[1],[2,5],[3,4]]"));
}

TEST_CASE("antipode methods agree") {
    const RunResult formula = run_cli("antipode --alpha 4,2 --method formula");
    const RunResult generic = run_cli("antipode --alpha 4,2 --method generic");
    CHECK(formula.exit_code == 0);
    CHECK(formula.output == generic.output);
    CHECK(formula.output == "- 2 E[6] + E[2.4] - E[1.5]\n");
    // three-row compositions take the generic route automatically
    CHECK(run_cli("antipode --alpha 2.1.1").exit_code == 0);
    CHECK(run_cli("antipode --alpha 2.1.1 --method formula").exit_code == 2);
}

TEST_CASE("product") {
    const RunResult r = run_cli("product --left H:2 --right H:1.3");
    CHECK(r.output == "H[2.1.3]\n");
    const RunResult lex = run_cli("product --left Lex:2.1 --right H:2");
    CHECK(lex.output.find("4 Lex[5]") != std::string::npos);
    CHECK(lex.output.find("4 Lex[4.1]") != std::string::npos);
    const RunResult to = run_cli("product --left H:1 --right H:1 --to E");
    CHECK(to.output == "E[1.1]\n");  // H_1 H_1 = E_1 E_1
    CHECK(run_cli("product --left H:2 --right M:2").exit_code == 2);
}

TEST_CASE("the environment variable sets the default cap") {
    const std::string save = []() {
        const char* v = getenv("LEXTAB_MAX_DEGREE");
        return v ? std::string(v) : std::string();
    }();
    setenv("LEXTAB_MAX_DEGREE", "5", 1);
    CHECK(run_cli("matrix --kind F_to_M --n 6").exit_code == 2);
    CHECK(run_cli("matrix --kind F_to_M --n 5").exit_code == 0);
    if (save.empty())
        unsetenv("LEXTAB_MAX_DEGREE");
    else
        setenv("LEXTAB_MAX_DEGREE", save.c_str(), 1);
}

TEST_CASE("verify subcommand exit codes") {
    const RunResult ok = run_cli("verify --identity stirling --max-n 4");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("pass") != std::string::npos);
    const RunResult all = run_cli("verify --max-n 4");
    CHECK(all.exit_code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("expand --from Lstar --alpha 4 --to H").exit_code == 2);   // cross-algebra
    CHECK(run_cli("expand --from Q --alpha 4 --to F").exit_code == 2);       // unknown basis
    CHECK(run_cli("count --kind lexical --shape 2x").exit_code == 2);        // malformed
    CHECK(run_cli("count --kind lexical --shape 3.1").exit_code == 2);       // no content
    CHECK(run_cli("matrix --kind F_to_M --n 14").exit_code == 2);            // above cap
    CHECK(run_cli("--max-degree 14 matrix --kind F_to_M --n 13").exit_code == 2);  // no ack
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("the degree cap can be raised with acknowledgment") {
    const RunResult r =
        run_cli("--max-degree 13 --allow-large verify --identity stirling --max-n 13");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("pass") != std::string::npos);
}
