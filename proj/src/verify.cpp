#include "chocolate/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <stdexcept>

#include "chocolate/chocolate.hpp"
#include "chocolate/errors.hpp"
#include "chocolate/hackenbush.hpp"
#include "chocolate/solver.hpp"

namespace chocolate {
namespace {

using Clock = std::chrono::steady_clock;

std::string bar_name(std::uint32_t n, std::uint32_t m) { return to_string(Bar{n, m, +1}); }

// p / q with q a power of two.
Dyadic from_fraction(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Dyadic::parse(text);
    const auto p = std::stoll(std::string(text.substr(0, slash)));
    const auto q = std::stoull(std::string(text.substr(slash + 1)));
    if (!std::has_single_bit(q)) throw std::invalid_argument("denominator is not a power of two");
    return Dyadic::make(p, static_cast<std::uint32_t>(std::countr_zero(q)));
}

// Rational identity a == p / q checked exactly; q > 0.
bool equals_fraction(const Dyadic& a, __int128 p, __int128 q) {
    return static_cast<__int128>(a.numerator()) * q == p * (static_cast<__int128>(1) << a.exponent());
}

class Suite {
public:
    Suite(std::string check, std::string range) {
        report_.check = std::move(check);
        report_.range = std::move(range);
        start_ = Clock::now();
    }

    // Records one case; keeps the first failure.
    void expect(bool ok, const std::string& what) {
        ++report_.cases;
        if (!ok && report_.passed) {
            report_.passed = false;
            report_.counterexample = what;
        }
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }

    // Runs fn, converting engine failures into a counterexample naming `where`.
    template <class Fn>
    void guarded(const std::string& where, Fn&& fn) {
        try {
            fn();
        } catch (const ResourceLimit& e) {
            expect(false, where + ": " + e.what());
        } catch (const NotANumber& e) {
            expect(false, where + ": " + e.what());
        } catch (const OverflowError& e) {
            expect(false, where + ": " + e.what());
        }
    }

    VerifyReport finish() {
        report_.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        return std::move(report_);
    }

private:
    VerifyReport report_;
    Clock::time_point start_;
};

VerifyReport verify_table(const VerifyOptions& opt) {
    Suite s("table", "n,m <= " + std::to_string(opt.bound));
    const auto grid = value_table(opt.bound, opt.bound);
    const auto& published = published_table();
    Engine engine(opt.node_budget);
    for (std::uint32_t m = 0; m <= opt.bound; ++m) {
        for (std::uint32_t n = 0; n <= opt.bound; ++n) {
            const std::string where = bar_name(n, m);
            if (n < 10 && m < 10) {
                const Dyadic expected = from_fraction(published[m][n]);
                s.expect(grid[m][n] == expected,
                         where + ": table " + grid[m][n].to_string() + ", published " + expected.to_string());
            } else {
                // Outside the published range the oracle is the reference.
                s.guarded(where, [&] {
                    const Dyadic oracle = engine.value(bar_tree(engine, Bar{n, m, +1}));
                    s.expect(grid[m][n] == oracle,
                             where + ": table " + grid[m][n].to_string() + ", oracle " + oracle.to_string());
                });
            }
        }
    }
    return s.finish();
}

VerifyReport verify_oracle(const VerifyOptions& opt) {
    Suite s("oracle", "n,m <= " + std::to_string(opt.bound) + ", both signs");
    Engine engine(opt.node_budget);
    for (int sign : {+1, -1}) {
        for (std::uint32_t n = 0; n <= opt.bound; ++n) {
            for (std::uint32_t m = 0; m <= opt.bound; ++m) {
                const Bar bar{n, m, sign};
                const std::string where = to_string(bar);
                s.guarded(where, [&] {
                    const GameTree g = bar_tree(engine, bar);
                    const Dyadic oracle = engine.value(g);
                    const Dyadic closed = value(bar);
                    s.expect(oracle == closed,
                             where + ": oracle " + oracle.to_string() + ", closed form " + closed.to_string());
                    const Outcome o = engine.outcome(g);
                    s.expect(o == outcome_of_number(oracle),
                             where + ": outcome " + to_string(o) + " disagrees with value " + oracle.to_string());
                });
            }
        }
    }
    return s.finish();
}

VerifyReport verify_patterns(const VerifyOptions& opt) {
    Suite s("patterns", "all parameters <= " + std::to_string(opt.bound));
    Engine engine(opt.node_budget);
    const std::uint32_t b = opt.bound;
    std::map<std::string, std::pair<std::size_t, std::size_t>> strict;  // item -> (strict, total)

    auto tree = [&](std::uint32_t n, std::uint32_t m) { return bar_tree(engine, Bar{n, m, +1}); };
    // want: Greater means ">=", Less means "<=", Equal means "=".
    auto check = [&](const char* item, std::uint32_t n, std::uint32_t m, std::uint32_t n2, std::uint32_t m2,
                     Relation want) {
        const std::string where = std::string(item) + " " + bar_name(n, m) + " vs " + bar_name(n2, m2);
        s.guarded(where, [&] {
            const Relation r = engine.compare(tree(n, m), tree(n2, m2));
            const bool ok = want == Relation::Equal ? r == Relation::Equal : (r == want || r == Relation::Equal);
            s.expect(ok, where + ": got " + to_string(r) + ", want " +
                             (want == Relation::Equal ? "Equal" : want == Relation::Greater ? ">=" : "<="));
            auto& [strict_count, total] = strict[item];
            ++total;
            if (r != Relation::Equal) ++strict_count;
        });
    };

    for (std::uint32_t n = 0; n <= b; ++n) {
        for (std::uint32_t m = 0; m <= b; ++m) {
            for (std::uint32_t k = 0; k <= b; ++k) {
                // k plays m' in the "a" items and n' in the "b" items.
                if ((n + m) % 2 == 0 && (n + k) % 2 == 0 && m >= k) check("i1a", n, m, n, k, Relation::Greater);
                if ((n + m) % 2 == 0 && (k + m) % 2 == 0 && n >= k) check("i1b", n, m, k, m, Relation::Greater);
                if ((n + m) % 2 == 1 && (n + k) % 2 == 1 && m >= k) check("i2a", n, m, n, k, Relation::Less);
                if ((n + m) % 2 == 1 && (k + m) % 2 == 1 && n >= k) check("i2b", n, m, k, m, Relation::Less);
                if ((n + m) % 2 == 1 && (n + k) % 2 == 0) check("iia", n, m, n, k, Relation::Greater);
                if ((n + m) % 2 == 1 && (k + m) % 2 == 0) check("iib", n, m, k, m, Relation::Greater);
            }
            for (std::uint32_t n2 = 0; n2 <= b; ++n2) {
                if (n + m < n2) continue;
                const std::uint32_t m2 = n + m - n2;
                if (m2 > b) continue;
                const std::uint32_t gap = n > n2 ? n - n2 : n2 - n;
                if ((n + m) % 2 == 1) check("iiia", n, m, n2, m2, Relation::Equal);
                if ((n + m) % 2 == 0 && gap % 2 == 0) check("iiib", n, m, n2, m2, Relation::Equal);
            }
        }
    }
    for (const auto& [item, counts] : strict) {
        s.note(item + ": " + std::to_string(counts.first) + " of " + std::to_string(counts.second) +
               " comparisons strict");
    }
    return s.finish();
}

VerifyReport verify_floss(const VerifyOptions& opt) {
    Suite s("floss", "every position reachable from n,m <= " + std::to_string(opt.bound) + ", both signs");
    Engine engine(opt.node_budget);
    // Options of a bar are smaller bars of the same sign, so this set is
    // hereditarily closed.
    for (int sign : {+1, -1}) {
        for (std::uint32_t n = 0; n <= opt.bound; ++n) {
            for (std::uint32_t m = 0; m <= opt.bound; ++m) {
                const Bar bar{n, m, sign};
                const std::string where = to_string(bar);
                s.guarded(where, [&] {
                    const GameTree g = bar_tree(engine, bar);
                    s.expect(engine.f_loss_holds(g), where + ": F-loss property fails");
                    engine.value(g);  // throws NotANumber if some node is not a number
                    s.expect(true, where);
                });
            }
        }
    }
    return s.finish();
}

VerifyReport verify_iso(const VerifyOptions& opt) {
    Suite s("iso", "m <= " + std::to_string(opt.bound));
    Engine engine(opt.node_budget);
    for (std::uint32_t m = 0; m <= opt.bound; ++m) {
        s.guarded("m=" + std::to_string(m), [&] {
            const GameTree str = string_tree(engine, AlternatingString{m});
            s.expect(engine.iso(bar_tree(engine, Bar{0, m, +1}), str), bar_name(0, m) + " not isomorphic to string");
            s.expect(engine.iso(bar_tree(engine, Bar{m, 0, +1}), str), bar_name(m, 0) + " not isomorphic to string");
            s.expect(engine.value(str) == hackenbush_value(m), "string " + std::to_string(m) + " oracle value");
        });
    }
    return s.finish();
}

VerifyReport verify_lemmas(const VerifyOptions& opt) {
    Suite s("lemmas", "n <= " + std::to_string(opt.bound));
    const std::uint32_t b = opt.bound;
    s.guarded("hackenbush", [&] {
        for (std::uint32_t n = 0; n <= b; ++n) {
            const std::string at = "n=" + std::to_string(n);
            s.expect(jacobsthal(n) == jacobsthal_closed_form(n), at + ": Jacobsthal recursion vs closed form");
            Dyadic partial;
            for (std::uint32_t k = 0; k < n; ++k) partial += Dyadic::make(k % 2 == 0 ? 1 : -1, k);
            s.expect(hackenbush_value(n) == partial, at + ": H_n vs alternating partial sum");
            const __int128 four_n = static_cast<__int128>(1) << (2 * n);
            s.expect(equals_fraction(hackenbush_value(2 * n), 4 * four_n - 4, 6 * four_n), at + ": even form");
            s.expect(equals_fraction(hackenbush_value(2 * n + 1), 2 * four_n + 1, 3 * four_n), at + ": odd form");
            s.expect(hackenbush_value(2 * n) < hackenbush_value(2 * n + 2), at + ": H_2n < H_2n+2");
            s.expect(hackenbush_value(2 * n + 1) > hackenbush_value(2 * n + 3), at + ": H_2n+1 > H_2n+3");
            s.expect(simplest_between(hackenbush_value(2 * n), hackenbush_value(2 * n + 1)) ==
                         hackenbush_value(2 * n + 2),
                     at + ": {H_2n | H_2n+1} = H_2n+2");
            s.expect(simplest_between(hackenbush_value(2 * n + 2), hackenbush_value(2 * n + 1)) ==
                         hackenbush_value(2 * n + 3),
                     at + ": {H_2n+2 | H_2n+1} = H_2n+3");
            s.expect(simplest_between(hackenbush_value(2 * n), hackenbush_value(2 * n + 3)) ==
                         hackenbush_value(2 * n + 2),
                     at + ": {H_2n | H_2n+3} = H_2n+2");
        }
    });
    return s.finish();
}

VerifyReport verify_claim(const VerifyOptions& opt) {
    Suite s("claim", "(2n,0) = (2n+1,1) for n <= " + std::to_string(opt.bound));
    Engine engine(opt.node_budget);
    for (std::uint32_t n = 0; n <= opt.bound; ++n) {
        const std::string where = bar_name(2 * n, 0) + " vs " + bar_name(2 * n + 1, 1);
        s.guarded(where, [&] {
            const Relation r =
                engine.compare(bar_tree(engine, Bar{2 * n, 0, +1}), bar_tree(engine, Bar{2 * n + 1, 1, +1}));
            s.expect(r == Relation::Equal, where + ": " + to_string(r));
        });
    }
    return s.finish();
}

// Does `winner`, always playing best_move, win from s against every reply?
class StrategyChecker {
public:
    explicit StrategyChecker(Player winner) : winner_(winner) {}

    bool wins(const SumGame& s) {
        const std::string key = to_string(s) + (*s.to_move == Player::Left ? "L" : "R");
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool result = true;
        if (*s.to_move == winner_) {
            const auto move = best_move(s, winner_);
            result = move && wins(play(s, *move));
        } else {
            for (const SumMove& reply : legal_sum_moves(s, *s.to_move)) {
                if (!wins(play(s, reply))) {
                    result = false;
                    break;
                }
            }
        }
        memo_.emplace(key, result);
        return result;
    }

private:
    Player winner_;
    std::map<std::string, bool> memo_;
};

VerifyReport verify_strategy(const VerifyOptions& opt) {
    Suite s("strategy", "sums of <= 3 bars, n,m <= " + std::to_string(opt.bound) + ", both signs");
    std::vector<Bar> kinds;
    for (int sign : {+1, -1}) {
        for (std::uint32_t n = 0; n <= opt.bound; ++n) {
            for (std::uint32_t m = 0; m <= opt.bound; ++m) kinds.push_back(Bar{n, m, sign});
        }
    }
    StrategyChecker left(Player::Left);
    StrategyChecker right(Player::Right);
    std::size_t decided = 0;
    auto run = [&](const std::vector<Bar>& bars) {
        SumGame g{bars, std::nullopt};
        const int sign = sum_value(g).sign();
        if (sign == 0) return;
        ++decided;
        StrategyChecker& checker = sign > 0 ? left : right;
        for (Player first : {Player::Left, Player::Right}) {
            g.to_move = first;
            s.expect(checker.wins(g), to_string(g) + " with " + to_string(first) + " to move: " +
                                          (sign > 0 ? "Left" : "Right") + " strategy loses");
        }
    };
    const std::size_t k = kinds.size();
    for (std::size_t a = 0; a < k; ++a) {
        run({kinds[a]});
        for (std::size_t b = a; b < k; ++b) {
            run({kinds[a], kinds[b]});
            for (std::size_t c = b; c < k; ++c) run({kinds[a], kinds[b], kinds[c]});
        }
    }
    s.note(std::to_string(decided) + " nonzero sums played out");
    return s.finish();
}

}  // namespace

const std::vector<std::vector<std::string>>& published_table() {
    static const std::vector<std::vector<std::string>> table = {
        {"0", "1", "1/2", "3/4", "5/8", "11/16", "21/32", "43/64", "85/128", "171/256"},
        {"1", "0", "3/4", "1/2", "11/16", "5/8", "43/64", "21/32", "171/256", "85/128"},
        {"1/2", "3/4", "5/8", "11/16", "21/32", "43/64", "85/128", "171/256", "341/512", "683/1024"},
        {"3/4", "1/2", "11/16", "5/8", "43/64", "21/32", "171/256", "85/128", "683/1024", "341/512"},
        {"5/8", "11/16", "21/32", "43/64", "85/128", "171/256", "341/512", "683/1024", "1365/2048", "2731/4096"},
        {"11/16", "5/8", "43/64", "21/32", "171/256", "85/128", "683/1024", "341/512", "2731/4096", "1365/2048"},
        {"21/32", "43/64", "85/128", "171/256", "341/512", "683/1024", "1365/2048", "2731/4096", "5461/8192",
         "10923/16384"},
        {"43/64", "21/32", "171/256", "85/128", "683/1024", "341/512", "2731/4096", "1365/2048", "10923/16384",
         "5461/8192"},
        {"85/128", "171/256", "341/512", "683/1024", "1365/2048", "2731/4096", "5461/8192", "10923/16384",
         "21845/32768", "43691/65536"},
        {"171/256", "85/128", "683/1024", "341/512", "2731/4096", "1365/2048", "10923/16384", "5461/8192",
         "43691/65536", "21845/32768"},
    };
    return table;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"table", "oracle", "patterns", "floss",
                                                   "iso",   "lemmas", "claim",    "strategy"};
    return names;
}

bool is_suite(std::string_view name) {
    return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<VerifyReport> run_suite(std::string_view name, const VerifyOptions& options) {
    if (name == "all") {
        std::vector<VerifyReport> all;
        for (const auto& n : suite_names()) {
            auto r = run_suite(n, options);
            all.insert(all.end(), r.begin(), r.end());
        }
        return all;
    }
    if (name == "table") return {verify_table(options)};
    if (name == "oracle") return {verify_oracle(options)};
    if (name == "patterns") return {verify_patterns(options)};
    if (name == "floss") return {verify_floss(options)};
    if (name == "iso") return {verify_iso(options)};
    if (name == "lemmas") return {verify_lemmas(options)};
    if (name == "claim") return {verify_claim(options)};
    if (name == "strategy") return {verify_strategy(options)};
    throw std::invalid_argument("unknown suite \"" + std::string(name) + "\"");
}

}  // namespace chocolate
