#include <doctest.h>

#include <random>

#include "chocolate/errors.hpp"
#include "chocolate/solver.hpp"

using namespace chocolate;

namespace {

const char* kEndgame = "-(2,4) -(1,3) +(2,3) +(2,0)";

std::vector<Bar> all_bars(std::uint32_t bound) {
    std::vector<Bar> bars;
    for (int sign : {+1, -1}) {
        for (std::uint32_t n = 0; n <= bound; ++n) {
            for (std::uint32_t m = 0; m <= bound; ++m) bars.push_back(Bar{n, m, sign});
        }
    }
    return bars;
}

}  // namespace

TEST_CASE("sum values") {
    CHECK(sum_value(parse_sum(kEndgame)) == Dyadic::make(1, 5));
    CHECK(sum_value(SumGame{}) == Dyadic{0});
    CHECK(sum_value(parse_sum("+(2,3) -(2,3)")) == Dyadic{0});
}

TEST_CASE("sum outcomes") {
    CHECK(sum_outcome(parse_sum(kEndgame)) == Outcome::L);
    CHECK(sum_outcome(parse_sum("+(1,1)")) == Outcome::P);
    CHECK(sum_outcome(parse_sum("-(0,1)")) == Outcome::R);
    CHECK(sum_outcome(SumGame{}) == Outcome::P);
}

TEST_CASE("best move in the four-bar endgame") {
    const SumGame g = parse_sum(kEndgame);
    const auto move = best_move(g, Player::Left);
    REQUIRE(move);
    CHECK(move->component == 0);
    CHECK(move->cut == Cut{Axis::Vertical, 1});
    CHECK(value_after(g, *move) == Dyadic{0});
    // The row cut ties on value; the column is chosen for eating more squares.
    const SumMove row{0, {Axis::Horizontal, 3}};
    CHECK(value_after(g, row) == Dyadic{0});
    CHECK(squares_eaten(g.bars[0], move->cut) == 5);
    CHECK(squares_eaten(g.bars[0], row.cut) == 3);
    CHECK(to_string(*move) == "component 0: vertical, keep 1");
}

TEST_CASE("best move edge cases") {
    CHECK_FALSE(best_move(parse_sum("+(1,1)"), Player::Left));
    CHECK_FALSE(best_move(SumGame{}, Player::Right));

    // +(0,2): Left's only cut keeps row 0 and lands on (0,0).
    const SumGame g = parse_sum("+(0,2)");
    const auto left_moves = legal_sum_moves(g, Player::Left);
    REQUIRE(left_moves.size() == 1);
    const auto move = best_move(g, Player::Left);
    REQUIRE(move);
    CHECK(move->cut == Cut{Axis::Horizontal, 0});
    CHECK(value_after(g, *move) == Dyadic{0});
    // Right's only cut goes to (0,1) = 1.
    const auto right = best_move(g, Player::Right);
    REQUIRE(right);
    CHECK(value_after(g, *right) == Dyadic{1});
}

TEST_CASE("equal candidates fall back to squares, then component index") {
    // Both components are 1/2 and Left's only cut in each eats two squares.
    auto move = best_move(parse_sum("+(0,2) +(2,0)"), Player::Left);
    REQUIRE(move);
    CHECK(*move == SumMove{0, {Axis::Horizontal, 0}});
    move = best_move(parse_sum("+(2,0) +(0,2)"), Player::Left);
    REQUIRE(move);
    CHECK(*move == SumMove{0, {Axis::Vertical, 0}});
    // Right in -(2,4)... mirrored endgame: same choice for the opposite side.
    move = best_move(parse_sum("+(2,4) +(1,3) -(2,3) -(2,0)"), Player::Right);
    REQUIRE(move);
    CHECK(*move == SumMove{0, {Axis::Vertical, 1}});
}

TEST_CASE("best move matches one-ply enumeration") {
    const auto kinds = all_bars(4);
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, kinds.size() - 1);
    std::uniform_int_distribution<int> count(1, 3);
    for (int i = 0; i < 2000; ++i) {
        SumGame g;
        for (int k = count(rng); k > 0; --k) g.bars.push_back(kinds[pick(rng)]);
        for (Player p : {Player::Left, Player::Right}) {
            const auto moves = legal_sum_moves(g, p);
            const auto best = best_move(g, p);
            CHECK(best.has_value() == !moves.empty());
            if (!best) continue;
            Dyadic extreme = value_after(g, moves.front());
            for (const SumMove& m : moves) {
                const Dyadic v = value_after(g, m);
                extreme = p == Player::Left ? std::max(extreme, v) : std::min(extreme, v);
            }
            CAPTURE(to_string(g));
            CHECK(value_after(g, *best) == extreme);
            // Winning guarantee.
            const Dyadic total = sum_value(g);
            if (p == Player::Left && total > Dyadic{0}) CHECK(extreme >= Dyadic{0});
            if (p == Player::Right && total < Dyadic{0}) CHECK(extreme <= Dyadic{0});
        }
    }
}

TEST_CASE("sum outcome agrees with the oracle on two-bar sums") {
    Engine e;
    const auto kinds = all_bars(4);
    for (std::size_t a = 0; a < kinds.size(); ++a) {
        for (std::size_t b = a; b < kinds.size(); ++b) {
            const SumGame g{{kinds[a], kinds[b]}, std::nullopt};
            CAPTURE(to_string(g));
            CHECK(sum_outcome(g) == e.outcome(sum_tree(e, g)));
        }
    }
}

TEST_CASE("rooks") {
    const SumGame corner = rooks_to_sum(parse_rooks("B 0 0"));
    REQUIRE(corner.bars.size() == 1);
    CHECK(corner.bars[0] == Bar{0, 0, +1});
    CHECK(legal_sum_moves(corner, Player::Left).empty());

    const SumGame pair = rooks_to_sum(parse_rooks("B 3 5\nW 3 5\n"));
    REQUIRE(pair.bars.size() == 2);
    CHECK(value(pair.bars[0]) == -value(pair.bars[1]));
    CHECK(sum_value(pair) == Dyadic{0});

    const SumGame single = rooks_to_sum(parse_rooks("B 2 3"));
    CHECK(sum_value(single) == Dyadic::make(11, 4));

    CHECK_THROWS_AS(rooks_to_sum(RookBoard{{Rook{RookColor::Black, -1, 0}}, 8}), OutOfBounds);
    CHECK_THROWS_AS(rooks_to_sum(RookBoard{{Rook{RookColor::White, 0, 8}}, 8}), OutOfBounds);
    CHECK_THROWS_AS(parse_rooks("X 1 1"), ParseError);
    CHECK_THROWS_AS(parse_rooks("B 1"), ParseError);
    CHECK(parse_rooks("# comment\n\nW 1 2 # trailing\n").rooks.size() == 1);
}

TEST_CASE("rook moves are cuts") {
    // A black rook moves to dark squares (x+y even) for Left: exactly the +1 bar's Left cuts.
    for (std::int64_t x = 0; x < 8; ++x) {
        for (std::int64_t y = 0; y < 8; ++y) {
            for (RookColor color : {RookColor::Black, RookColor::White}) {
                const Bar b = rooks_to_sum(RookBoard{{Rook{color, x, y}}, 8}).bars[0];
                for (Player p : {Player::Left, Player::Right}) {
                    // Left moves black rooks to dark squares and white rooks to light squares.
                    const bool wants_dark = (p == Player::Left) == (color == RookColor::Black);
                    std::vector<Cut> expected;
                    for (std::int64_t nx = 0; nx < x; ++nx) {
                        if (((nx + y) % 2 == 0) == wants_dark) expected.push_back({Axis::Vertical, std::uint32_t(nx)});
                    }
                    for (std::int64_t ny = 0; ny < y; ++ny) {
                        if (((x + ny) % 2 == 0) == wants_dark) expected.push_back({Axis::Horizontal, std::uint32_t(ny)});
                    }
                    CHECK(legal_moves(b, p) == expected);
                }
            }
        }
    }
}

TEST_CASE("adding a black/white pair on one square leaves the value unchanged") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::int64_t> coord(0, 7);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 200; ++i) {
        RookBoard board;
        for (int k = 0; k < 3; ++k) {
            board.rooks.push_back({coin(rng) ? RookColor::Black : RookColor::White, coord(rng), coord(rng)});
        }
        const Dyadic before = sum_value(rooks_to_sum(board));
        const std::int64_t x = coord(rng);
        const std::int64_t y = coord(rng);
        board.rooks.push_back({RookColor::Black, x, y});
        board.rooks.push_back({RookColor::White, x, y});
        CHECK(sum_value(rooks_to_sum(board)) == before);
    }
}

TEST_CASE("play") {
    SumGame g = parse_sum(kEndgame);
    g.to_move = Player::Left;
    const SumGame next = play(g, SumMove{0, {Axis::Vertical, 1}});
    CHECK(sum_value(next) == Dyadic{0});
    CHECK(next.bars[0] == Bar{1, 4, -1});
    CHECK(next.to_move == Player::Right);
    CHECK(g.bars[0] == Bar{2, 4, -1});
    CHECK(sum_value(g) == Dyadic::make(1, 5));

    CHECK_THROWS_AS(play(next, Player::Left, SumMove{1, {Axis::Vertical, 0}}), WrongTurn);
    CHECK_THROWS_AS(play(parse_sum(kEndgame), SumMove{0, {Axis::Vertical, 1}}), WrongTurn);

    SumGame poisoned = parse_sum("+(0,0)");
    poisoned.to_move = Player::Left;
    CHECK_THROWS_AS(play(poisoned, SumMove{0, {Axis::Vertical, 0}}), IllegalMove);
    CHECK_THROWS_AS(play(g, SumMove{7, {Axis::Vertical, 0}}), IllegalMove);
    // Right's cut in the first component is not Left's to make.
    CHECK_THROWS_AS(play(g, SumMove{0, {Axis::Horizontal, 2}}), IllegalMove);
}

TEST_CASE("sum notation") {
    const SumGame g = parse_sum(kEndgame);
    CHECK(g.bars.size() == 4);
    CHECK(to_string(g) == kEndgame);
    CHECK(parse_sum("").bars.empty());
    CHECK(parse_sum("  \t ").bars.empty());
    CHECK_THROWS_AS(parse_sum("+(1,2)+(3,4)"), ParseError);
    CHECK_THROWS_AS(parse_sum("+(1,2) junk"), ParseError);
}
