// chocolate: values, tables, sum analysis and verification sweeps for the
// partisan chocolate game.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chocolate/chocolate.hpp"
#include "chocolate/errors.hpp"
#include "chocolate/service.hpp"
#include "chocolate/solver.hpp"
#include "chocolate/verify.hpp"

namespace {

using namespace chocolate;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

int cmd_value(const std::string& notation, bool as_json) {
    const Bar bar = parse_bar(notation);
    const Dyadic v = value(bar);
    if (as_json) {
        std::cout << json{{"bar", to_string(bar)}, {"value", v.to_string()}}.dump() << '\n';
    } else {
        std::cout << v << '\n';
    }
    return kPass;
}

int cmd_table(std::uint32_t max_n, std::uint32_t max_m, bool csv, bool as_json) {
    const auto grid = value_table(max_n, max_m);
    if (as_json) {
        json rows = json::array();
        for (const auto& row : grid) {
            json r = json::array();
            for (const Dyadic& d : row) r.push_back(d.to_string());
            rows.push_back(r);
        }
        std::cout << json{{"max_n", max_n}, {"max_m", max_m}, {"rows_by_m", rows}}.dump() << '\n';
        return kPass;
    }
    const char* sep = csv ? "," : ", ";
    // Largest m first so the poisoned corner ends up bottom-left.
    for (std::size_t r = grid.size(); r-- > 0;) {
        for (std::size_t n = 0; n < grid[r].size(); ++n) {
            if (n) std::cout << sep;
            std::cout << grid[r][n];
        }
        std::cout << '\n';
    }
    return kPass;
}

int cmd_analyze(const std::string& notation, const std::string& mover_text, bool as_json, bool move_only) {
    const SumGame game = parse_sum(notation);
    const Player mover = parse_player(mover_text);
    const Dyadic total = sum_value(game);
    const auto move = best_move(game, mover);
    const std::optional<Dyadic> after = move ? std::optional<Dyadic>(value_after(game, *move)) : std::nullopt;

    if (as_json) {
        json body = {{"sum", to_string(game)}, {"mover", to_string(mover)}};
        if (!move_only) {
            body["value"] = total.to_string();
            body["outcome"] = to_string(sum_outcome(game));
        }
        if (move) {
            body["best_move"] = to_json(*move);
            body["best_move"]["result"] = after->to_string();
        } else {
            body["best_move"] = nullptr;
        }
        std::cout << body.dump() << '\n';
        return kPass;
    }
    if (move_only) {
        std::cout << (move ? to_string(*move) + " -> " + after->to_string() : std::string("none")) << '\n';
        return kPass;
    }
    std::cout << "sum: " << to_string(game) << '\n'
              << "value: " << total << '\n'
              << "outcome: " << to_string(sum_outcome(game)) << '\n'
              << "best move for " << to_string(mover) << ": "
              << (move ? to_string(*move) + " (result " + after->to_string() + ")" : std::string("none")) << '\n';
    return kPass;
}

int cmd_verify(const std::string& suite, const VerifyOptions& options, bool as_json, bool timing) {
    if (!is_suite(suite)) {
        std::cerr << "unknown suite \"" << suite << "\"\n";
        return kUsage;
    }
    const auto reports = run_suite(suite, options);
    std::size_t failed = 0;
    json out = json::array();
    for (const VerifyReport& r : reports) {
        if (!r.passed) ++failed;
        if (as_json) {
            json j = {{"check", r.check}, {"range", r.range}, {"passed", r.passed}, {"cases", r.cases},
                      {"notes", r.notes}};
            j["counterexample"] = r.passed ? json(nullptr) : json(r.counterexample);
            if (timing) j["elapsed_ms"] = r.elapsed_ms;
            out.push_back(j);
            continue;
        }
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.check << " [" << r.range << "] " << r.cases << " cases";
        if (timing) std::cout << " " << r.elapsed_ms << " ms";
        std::cout << '\n';
        for (const auto& note : r.notes) std::cout << "  note: " << note << '\n';
        if (!r.passed) std::cout << "  counterexample: " << r.counterexample << '\n';
    }
    if (as_json) {
        std::cout << out.dump() << '\n';
    } else {
        std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << '\n';
    }
    return failed == 0 ? kPass : kFail;
}

int cmd_serve(const std::string& listen, const std::string& journal) {
    const auto colon = listen.rfind(':');
    if (colon == std::string::npos) {
        std::cerr << "--listen expects host:port\n";
        return kUsage;
    }
    const std::string host = listen.substr(0, colon);
    const int port = std::stoi(listen.substr(colon + 1));
    GameService service(journal.empty() ? std::nullopt : std::optional<std::filesystem::path>(journal));
    std::cerr << "listening on " << host << ":" << port << '\n';
    return serve(service, host, port) ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact values and optimal play for the partisan chocolate game"};
    app.require_subcommand(1);

    bool as_json = false;
    bool csv = false;
    bool timing = false;
    std::string notation;
    std::string mover = "L";
    std::uint32_t max_n = 9;
    std::uint32_t max_m = 9;
    std::string suite;
    std::optional<std::uint32_t> positional_bound;
    std::uint32_t bound = 4;
    std::size_t node_budget = Engine::kDefaultNodeBudget;
    std::string listen = "127.0.0.1:8080";
    std::string journal;

    auto* value_cmd = app.add_subcommand("value", "Exact value of a bar, e.g. \"+(2,3)\"");
    value_cmd->add_option("bar", notation, "Bar notation")->required();
    value_cmd->add_flag("--json", as_json, "JSON output");

    auto* table_cmd = app.add_subcommand("table", "Value table for +(n,m), largest m first");
    table_cmd->add_option("max_n", max_n, "Largest n")->required();
    table_cmd->add_option("max_m", max_m, "Largest m")->required();
    table_cmd->add_flag("--csv", csv, "Comma-separated output");
    table_cmd->add_flag("--json", as_json, "JSON output");

    auto* analyze_cmd = app.add_subcommand("analyze", "Value, outcome and best move of a sum");
    analyze_cmd->add_option("sum", notation, "Sum notation, e.g. \"-(2,4) +(2,3)\"")->required();
    analyze_cmd->add_option("--mover", mover, "Side to move: L or R")->capture_default_str();
    analyze_cmd->add_flag("--json", as_json, "JSON output");

    auto* best_cmd = app.add_subcommand("best-move", "Best move of a sum for one side");
    best_cmd->add_option("sum", notation, "Sum notation")->required();
    best_cmd->add_option("--mover", mover, "Side to move: L or R")->capture_default_str();
    best_cmd->add_flag("--json", as_json, "JSON output");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification sweep");
    verify_cmd->add_option("suite", suite, "table, oracle, patterns, floss, iso, lemmas, claim, strategy or all")
        ->required();
    verify_cmd->add_option("bound_pos", positional_bound, "Parameter bound (same as --bound)");
    verify_cmd->add_option("--bound", bound, "Parameter bound")->capture_default_str();
    verify_cmd->add_option("--node-budget", node_budget, "Engine node budget")->capture_default_str();
    verify_cmd->add_flag("--json", as_json, "JSON output");
    verify_cmd->add_flag("--timing", timing, "Include elapsed times (output no longer reproducible)");

    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP game service");
    serve_cmd->add_option("--listen", listen, "host:port")->capture_default_str();
    serve_cmd->add_option("--journal", journal, "JSON-lines journal path (replayed on start)");

    try {
        // CLI11 reads "-(1,3)" as a short option. A leading space keeps it
        // positional, and the notation parser skips whitespace anyway.
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) {
            std::string arg = argv[i];
            if (arg.size() > 1 && arg[0] == '-' && arg[1] == '(') arg.insert(arg.begin(), ' ');
            args.push_back(std::move(arg));
        }
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*value_cmd) return cmd_value(notation, as_json);
        if (*table_cmd) return cmd_table(max_n, max_m, csv, as_json);
        if (*analyze_cmd) return cmd_analyze(notation, mover, as_json, false);
        if (*best_cmd) return cmd_analyze(notation, mover, as_json, true);
        if (*verify_cmd) {
            VerifyOptions options{positional_bound.value_or(bound), node_budget};
            return cmd_verify(suite, options, as_json, timing);
        }
        if (*serve_cmd) return cmd_serve(listen, journal);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
