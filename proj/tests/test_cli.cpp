#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "chocolate/dyadic.hpp"
#include "chocolate/verify.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(CHOCOLATE_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("value") {
    CHECK(run("value '+(2,3)'").out == "11/2^4\n");
    CHECK(run("value '-(1,3)'").out == "-1/2^1\n");
    CHECK(run("value '+(0,0)'").out == "0\n");
    const Run bad = run("value '+(2;3)'");
    CHECK(bad.code == 2);
    const auto j = nlohmann::json::parse(run("value '(9,9)' --json").out);
    CHECK(j["value"] == "21845/2^15");
}

TEST_CASE("table") {
    CHECK(run("table 0 0").out == "0\n");
    CHECK(run("table 3 0").out == "0, 1, 1/2^1, 3/2^2\n");
    const Run full = run("table 9 9 --csv");
    CHECK(full.code == 0);
    const auto rows = lines(full.out);
    REQUIRE(rows.size() == 10);
    const auto& published = chocolate::published_table();
    for (std::size_t r = 0; r < 10; ++r) {
        std::vector<std::string> cells;
        std::istringstream in(rows[r]);
        for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
        REQUIRE(cells.size() == 10);
        const std::size_t m = 9 - r;  // first printed row is m = 9
        for (std::size_t n = 0; n < 10; ++n) {
            const auto& text = published[m][n];
            const auto slash = text.find('/');
            const chocolate::Dyadic cell = chocolate::Dyadic::parse(cells[n]);
            if (slash == std::string::npos) {
                CHECK(cell == chocolate::Dyadic::parse(text));
            } else {
                CHECK(std::to_string(cell.numerator()) == text.substr(0, slash));
                CHECK((std::int64_t{1} << cell.exponent()) == std::stoll(text.substr(slash + 1)));
            }
        }
    }
}

TEST_CASE("analyze and best-move") {
    const Run endgame = run("analyze '-(2,4) -(1,3) +(2,3) +(2,0)' --mover L");
    CHECK(endgame.code == 0);
    CHECK(endgame.out.find("value: 1/2^5\n") != std::string::npos);
    CHECK(endgame.out.find("outcome: L\n") != std::string::npos);
    CHECK(endgame.out.find("component 0: vertical, keep 1") != std::string::npos);

    const Run stuck = run("analyze '+(1,1)' --mover L");
    CHECK(stuck.out.find("outcome: P\n") != std::string::npos);
    CHECK(stuck.out.find("best move for L: none") != std::string::npos);

    const Run empty = run("analyze ''");
    CHECK(empty.out.find("value: 0\n") != std::string::npos);
    CHECK(empty.out.find("outcome: P\n") != std::string::npos);

    CHECK(run("best-move '-(2,4) -(1,3) +(2,3) +(2,0)'").out == "component 0: vertical, keep 1 -> 0\n");
    const auto j = nlohmann::json::parse(run("best-move '+(0,2)' --mover R --json").out);
    CHECK(j["best_move"]["keep"] == 1);
    CHECK(j["best_move"]["result"] == "1");
    CHECK(run("analyze '+(1,1' ").code == 2);
    CHECK(run("analyze '+(1,1)' --mover X").code == 2);
}

TEST_CASE("verify") {
    const Run table = run("verify table 9");
    CHECK(table.code == 0);
    CHECK(table.out.rfind("PASS table", 0) == 0);
    CHECK(run("verify oracle 6").code == 0);
    CHECK(run("verify claim --bound 4").code == 0);
    CHECK(run("verify nonsense 3").code == 2);
    const Run starved = run("verify oracle 6 --node-budget 10");
    CHECK(starved.code == 1);
    CHECK(starved.out.find("counterexample:") != std::string::npos);
    const auto j = nlohmann::json::parse(run("verify iso 5 --json").out);
    CHECK(j[0]["passed"] == true);
}

TEST_CASE("output is deterministic") {
    for (const char* args : {"verify all 2", "table 9 9", "analyze '-(2,4) -(1,3) +(2,3) +(2,0)' --json"}) {
        CAPTURE(args);
        CHECK(run(args).out == run(args).out);
    }
}

TEST_CASE("usage errors") {
    CHECK(run("").code == 2);
    CHECK(run("table").code == 2);
    CHECK(run("frobnicate").code == 2);
}
