#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chocolate/chocolate.hpp"
#include "chocolate/dyadic.hpp"
#include "chocolate/engine.hpp"

namespace chocolate {

/// Disjunctive sum of bars. Components keep their index for the whole game;
/// a component cut down to (0,0) stays in place with value 0 and no moves.
struct SumGame {
    std::vector<Bar> bars;
    std::optional<Player> to_move;

    friend bool operator==(const SumGame&, const SumGame&) = default;
};

struct SumMove {
    std::size_t component = 0;
    Cut cut;

    friend bool operator==(const SumMove&, const SumMove&) = default;
};

/// "component 0: vertical, keep 1"
std::string to_string(const SumMove& move);

enum class RookColor { Black, White };

struct Rook {
    RookColor color = RookColor::Black;
    std::int64_t x = 0;  // file
    std::int64_t y = 0;  // rank
};

/// Squares with x + y even are dark and play the role of blue. Rooks move
/// only left or down and never block each other.
struct RookBoard {
    std::vector<Rook> rooks;
    std::int64_t size = 8;
};

Dyadic sum_value(const SumGame& s);

/// L / R / P from the sign of sum_value. Never N: every component is a number.
Outcome sum_outcome(const SumGame& s);

/// Every legal move for `mover`, by component then in legal_moves order.
std::vector<SumMove> legal_sum_moves(const SumGame& s, Player mover);

/// sum_value after `move`, computed incrementally.
Dyadic value_after(const SumGame& s, const SumMove& move);

/// Best one-ply move for `mover`: maximizes (Left) or minimizes (Right) the
/// resulting sum value. Equal-value moves are ordered by
///   1. larger denominator exponent of the component's current value,
///   2. more unit squares eaten,
///   3. lower component index,
///   4. vertical before horizontal,
///   5. smaller keep.
/// nullopt iff `mover` has no legal move in any component.
std::optional<SumMove> best_move(const SumGame& s, Player mover);

/// Black rook at (x, y) -> +(x, y); white rook -> -(x, y). Throws OutOfBounds
/// for coordinates outside [0, size).
SumGame rooks_to_sum(const RookBoard& board);

/// Applies `move` for s.to_move and flips the turn. Throws WrongTurn when
/// s.to_move is unset, IllegalMove when the component index or cut is not
/// legal for the mover.
SumGame play(const SumGame& s, const SumMove& move);

/// As above for an explicit mover; WrongTurn if s.to_move is set and differs.
SumGame play(const SumGame& s, Player mover, const SumMove& move);

/// Whitespace-separated signed bars, e.g. "-(2,4) -(1,3) +(2,3) +(2,0)".
SumGame parse_sum(std::string_view text);
std::string to_string(const SumGame& s);

/// Lines of "B x y" / "W x y"; blank lines and '#' comments ignored.
RookBoard parse_rooks(std::string_view text, std::int64_t size = 8);

/// Disjunctive sum of the components' trees.
GameTree sum_tree(Engine& engine, const SumGame& s);

}  // namespace chocolate
