#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chocolate/dyadic.hpp"

namespace chocolate {

enum class Player { Left, Right };

constexpr Player opponent(Player p) noexcept {
    return p == Player::Left ? Player::Right : Player::Left;
}

std::string to_string(Player p);  // "L" / "R"
Player parse_player(std::string_view text);

/// Outcome classes, partially ordered R < N < L and R < P < L; N and P are
/// incomparable.
enum class Outcome { L, N, P, R };

std::string to_string(Outcome o);

/// Partial order on outcomes from Left's point of view; (N, P) is unordered.
std::partial_ordering compare_outcomes(Outcome a, Outcome b);

/// Outcome of a number: positive -> L, negative -> R, zero -> P.
Outcome outcome_of_number(const Dyadic& value);

enum class Relation { Less, Equal, Greater, Confused };

std::string to_string(Relation r);

/// Handle to an interned game tree. Handles are only meaningful inside the
/// Engine that created them; two handles from one Engine are equal iff the
/// trees are structurally identical.
class GameTree {
public:
    constexpr GameTree() = default;

    std::uint32_t id() const noexcept { return id_; }
    friend bool operator==(GameTree, GameTree) = default;
    friend auto operator<=>(GameTree, GameTree) = default;

private:
    friend class Engine;
    constexpr explicit GameTree(std::uint32_t id) : id_(id) {}
    std::uint32_t id_ = 0;
};

/// Store and brute-force oracle for short partisan games.
///
/// Trees are hash-consed: option sets are sorted and deduplicated by
/// structural identity, so every distinct tree is stored exactly once. All
/// oracle results (outcome, value, sums, negations) are memoized per node.
///
/// An Engine is not thread-safe. Concurrent sweeps use one Engine per worker;
/// results are deterministic so independent stores always agree.
class Engine {
public:
    static constexpr std::size_t kDefaultNodeBudget = 10'000'000;

    explicit Engine(std::size_t node_budget = kDefaultNodeBudget);

    /// {left | right}. Throws ResourceLimit when a new node would exceed the
    /// budget.
    GameTree make(std::vector<GameTree> left, std::vector<GameTree> right);
    GameTree zero() { return make({}, {}); }

    std::span<const GameTree> options(GameTree g, Player side) const;
    std::span<const GameTree> left_options(GameTree g) const { return options(g, Player::Left); }
    std::span<const GameTree> right_options(GameTree g) const { return options(g, Player::Right); }

    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t node_budget() const noexcept { return node_budget_; }

    GameTree neg(GameTree g);
    GameTree sum(GameTree g, GameTree h);

    /// Normal-play minimax outcome.
    Outcome outcome(GameTree g);

    /// Outcome of g - h: P Equal, L Greater, R Less, N Confused.
    Relation compare(GameTree g, GameTree h);
    bool geq(GameTree g, GameTree h);  // g >= h (Greater or Equal)

    /// Recursive simplicity-rule value. Checks numberhood at every node and
    /// throws NotANumber on the first node whose best Left option value is
    /// not strictly below its best Right option value.
    Dyadic value(GameTree g);

    /// Removes every option dominated by another on the same side: for Left,
    /// any option <= another option; for Right, any option >= another. Of a
    /// group of equal options the earliest in input order survives.
    std::vector<GameTree> dominate(std::span<const GameTree> opts, Player side);

    /// True iff every (G^L, G^R) pair has some G^RL >= G^L or some
    /// G^LR <= G^R. Checks g itself only.
    bool f_loss_holds(GameTree g);

    /// Recursive bijection between option sets. Equivalent to handle
    /// equality inside one Engine; computed structurally regardless.
    bool iso(GameTree g, GameTree h);

    /// Caller-keyed cache for ruleset expansions (e.g. bars by dimensions).
    std::optional<GameTree> cached(std::uint64_t key) const;
    void remember(std::uint64_t key, GameTree g);

private:
    struct Node {
        std::vector<GameTree> left;
        std::vector<GameTree> right;
    };
    struct NodeKeyHash {
        std::size_t operator()(const Node& n) const noexcept;
    };
    struct NodeKeyEq {
        bool operator()(const Node& a, const Node& b) const noexcept {
            return a.left == b.left && a.right == b.right;
        }
    };
    struct PairHash {
        std::size_t operator()(std::uint64_t k) const noexcept { return std::hash<std::uint64_t>{}(k); }
    };

    static std::uint64_t pair_key(GameTree a, GameTree b) {
        return (static_cast<std::uint64_t>(a.id()) << 32) | b.id();
    }

    bool first_player_wins(GameTree g, Player mover);

    std::size_t node_budget_;
    std::vector<Node> nodes_;
    std::unordered_map<Node, std::uint32_t, NodeKeyHash, NodeKeyEq> intern_;

    std::vector<std::int8_t> left_first_wins_;   // -1 unknown
    std::vector<std::int8_t> right_first_wins_;  // -1 unknown
    std::vector<std::optional<Dyadic>> value_;
    std::vector<std::optional<GameTree>> neg_;
    std::unordered_map<std::uint64_t, GameTree, PairHash> sum_;
    std::unordered_map<std::uint64_t, bool, PairHash> iso_;
    std::unordered_map<std::uint64_t, GameTree, PairHash> external_;
};

}  // namespace chocolate
