#include "chocolate/solver.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <tuple>

#include "chocolate/errors.hpp"

namespace chocolate {

std::string to_string(const SumMove& move) {
    return "component " + std::to_string(move.component) + ": " + to_string(move.cut.axis) + ", keep " +
           std::to_string(move.cut.keep);
}

Dyadic sum_value(const SumGame& s) {
    Dyadic total;
    for (const Bar& b : s.bars) total += value(b);
    return total;
}

Outcome sum_outcome(const SumGame& s) { return outcome_of_number(sum_value(s)); }

std::vector<SumMove> legal_sum_moves(const SumGame& s, Player mover) {
    std::vector<SumMove> moves;
    for (std::size_t i = 0; i < s.bars.size(); ++i) {
        for (const Cut& c : legal_moves(s.bars[i], mover)) moves.push_back({i, c});
    }
    return moves;
}

Dyadic value_after(const SumGame& s, const SumMove& move) {
    const Bar& before = s.bars.at(move.component);
    return sum_value(s) - value(before) + value(apply_cut(before, move.cut));
}

std::optional<SumMove> best_move(const SumGame& s, Player mover) {
    const Dyadic total = sum_value(s);
    std::optional<SumMove> best;
    // Sort key; larger is better. Value is negated for Right.
    using Key = std::tuple<Dyadic, std::uint32_t, std::uint64_t, std::int64_t, int, std::int64_t>;
    std::optional<Key> best_key;
    for (std::size_t i = 0; i < s.bars.size(); ++i) {
        const Bar& bar = s.bars[i];
        const Dyadic current = value(bar);
        const Dyadic rest = total - current;
        for (const Cut& cut : legal_moves(bar, mover)) {
            const Dyadic after = rest + value(apply_cut(bar, cut));
            Key key{mover == Player::Left ? after : -after,
                    current.exponent(),
                    squares_eaten(bar, cut),
                    -static_cast<std::int64_t>(i),
                    cut.axis == Axis::Vertical ? 1 : 0,
                    -static_cast<std::int64_t>(cut.keep)};
            if (!best_key || key > *best_key) {
                best_key = key;
                best = SumMove{i, cut};
            }
        }
    }
    return best;
}

SumGame rooks_to_sum(const RookBoard& board) {
    SumGame s;
    for (const Rook& r : board.rooks) {
        if (r.x < 0 || r.y < 0 || r.x >= board.size || r.y >= board.size) {
            throw OutOfBounds("rook at (" + std::to_string(r.x) + "," + std::to_string(r.y) + ") outside a " +
                              std::to_string(board.size) + "x" + std::to_string(board.size) + " board");
        }
        s.bars.push_back(Bar{static_cast<std::uint32_t>(r.x), static_cast<std::uint32_t>(r.y),
                             r.color == RookColor::Black ? +1 : -1});
    }
    return s;
}

SumGame play(const SumGame& s, const SumMove& move) {
    if (!s.to_move) throw WrongTurn("sum has no side to move");
    return play(s, *s.to_move, move);
}

SumGame play(const SumGame& s, Player mover, const SumMove& move) {
    if (s.to_move && *s.to_move != mover) {
        throw WrongTurn("it is " + to_string(*s.to_move) + "'s turn, not " + to_string(mover) + "'s");
    }
    if (move.component >= s.bars.size()) {
        throw IllegalMove("no component " + std::to_string(move.component) + " in a sum of " +
                          std::to_string(s.bars.size()));
    }
    const Bar& bar = s.bars[move.component];
    if (auto reason = illegal_reason(bar, mover, move.cut)) throw IllegalMove(*reason);
    SumGame next = s;
    next.bars[move.component] = apply_cut(bar, move.cut);
    next.to_move = opponent(mover);
    return next;
}

SumGame parse_sum(std::string_view text) {
    SumGame s;
    std::size_t pos = 0;
    for (;;) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == text.size()) break;
        s.bars.push_back(parse_bar_at(text, pos));
        if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
            throw ParseError("expected whitespace between bars", pos);
        }
    }
    return s;
}

std::string to_string(const SumGame& s) {
    std::string out;
    for (std::size_t i = 0; i < s.bars.size(); ++i) {
        if (i) out += ' ';
        out += to_string(s.bars[i]);
    }
    return out;
}

RookBoard parse_rooks(std::string_view text, std::int64_t size) {
    RookBoard board;
    board.size = size;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string line(text.substr(line_start, line_end - line_start));
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream in(line);
        std::string color;
        if (in >> color) {
            Rook r;
            if (color == "B" || color == "b") {
                r.color = RookColor::Black;
            } else if (color == "W" || color == "w") {
                r.color = RookColor::White;
            } else {
                throw ParseError("expected rook color B or W", line_start + line.find(color));
            }
            std::string extra;
            if (!(in >> r.x >> r.y)) throw ParseError("expected two integer coordinates", line_start);
            if (in >> extra) throw ParseError("trailing characters in rook line", line_start);
            board.rooks.push_back(r);
        }
        line_start = line_end + 1;
    }
    return board;
}

GameTree sum_tree(Engine& engine, const SumGame& s) {
    GameTree total = engine.zero();
    for (const Bar& b : s.bars) total = engine.sum(total, bar_tree(engine, b));
    return total;
}

}  // namespace chocolate
