#include "chocolate/chocolate.hpp"

#include <cctype>
#include <charconv>

#include "chocolate/errors.hpp"
#include "chocolate/hackenbush.hpp"

namespace chocolate {
namespace {

bool left_parity(const Bar& bar, Player player) {
    // For a +1 bar Left cuts where the resulting coordinate sum is even.
    const bool plays_as_left = (player == Player::Left) == (bar.sign > 0);
    return plays_as_left;
}

// Square whose color governs the cut.
std::pair<std::uint32_t, std::uint32_t> governing_square(const Bar& bar, const Cut& cut) {
    if (cut.axis == Axis::Vertical) return {cut.keep + 1, bar.m};
    return {bar.n, cut.keep + 1};
}

std::uint32_t dimension(const Bar& bar, Axis axis) { return axis == Axis::Vertical ? bar.n : bar.m; }

void check_sign(const Bar& bar) {
    if (bar.sign != 1 && bar.sign != -1) {
        throw std::invalid_argument("bar sign must be +1 or -1, got " + std::to_string(bar.sign));
    }
}

void skip_spaces(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

void expect(std::string_view text, std::size_t& pos, char c) {
    skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != c) {
        throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
}

std::uint32_t parse_uint(std::string_view text, std::size_t& pos) {
    skip_spaces(text, pos);
    std::uint32_t v = 0;
    const char* begin = text.data() + pos;
    auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), v);
    if (ec == std::errc::result_out_of_range) throw ParseError("dimension out of range", pos);
    if (ec != std::errc{} || ptr == begin) throw ParseError("expected a nonnegative integer", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return v;
}

}  // namespace

std::string to_string(CellColor c) {
    switch (c) {
        case CellColor::Black: return "black";
        case CellColor::Blue: return "blue";
        case CellColor::Red: return "red";
    }
    return "?";
}

std::string to_string(Axis a) { return a == Axis::Vertical ? "vertical" : "horizontal"; }

Axis parse_axis(std::string_view text) {
    if (text == "vertical" || text == "V" || text == "v") return Axis::Vertical;
    if (text == "horizontal" || text == "H" || text == "h") return Axis::Horizontal;
    throw ParseError("expected axis vertical or horizontal, got \"" + std::string(text) + "\"", 0);
}

CellColor cell_color(const Bar& bar, std::uint32_t i, std::uint32_t j) {
    check_sign(bar);
    if (i > bar.n || j > bar.m) {
        throw OutOfBounds("cell (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                          to_string(bar));
    }
    if (i == 0 && j == 0) return CellColor::Black;
    const bool odd = (i + j) % 2 == 1;
    const bool blue = bar.sign > 0 ? odd : !odd;
    return blue ? CellColor::Blue : CellColor::Red;
}

std::vector<Cut> legal_moves(const Bar& bar, Player player) {
    check_sign(bar);
    // Left on a +1 bar keeps an even coordinate sum; everyone else keeps odd.
    const std::uint32_t parity = left_parity(bar, player) ? 0 : 1;
    std::vector<Cut> cuts;
    for (std::uint32_t k = 0; k < bar.n; ++k) {
        if ((k + bar.m) % 2 == parity) cuts.push_back({Axis::Vertical, k});
    }
    for (std::uint32_t k = 0; k < bar.m; ++k) {
        if ((bar.n + k) % 2 == parity) cuts.push_back({Axis::Horizontal, k});
    }
    return cuts;
}

std::optional<std::string> illegal_reason(const Bar& bar, Player player, const Cut& cut) {
    check_sign(bar);
    const std::uint32_t dim = dimension(bar, cut.axis);
    if (cut.keep >= dim) {
        return to_string(cut.axis) + " cut keeping " + std::to_string(cut.keep) + " must keep less than the current " +
               (cut.axis == Axis::Vertical ? "n" : "m") + " = " + std::to_string(dim) + " of " + to_string(bar);
    }
    const auto [i, j] = governing_square(bar, cut);
    const CellColor have = cell_color(bar, i, j);
    const CellColor need = player == Player::Left ? CellColor::Blue : CellColor::Red;
    if (have == need) return std::nullopt;
    const std::string who = player == Player::Left ? "Left" : "Right";
    const std::string where = cut.axis == Axis::Vertical ? "top square of the column right of the line"
                                                         : "rightmost square of the row above the line";
    return who + " may only cut where the " + where + " is " + to_string(need) + "; square (" + std::to_string(i) +
           "," + std::to_string(j) + ") of " + to_string(bar) + " is " + to_string(have);
}

Bar apply_cut(const Bar& bar, const Cut& cut) {
    check_sign(bar);
    const std::uint32_t dim = dimension(bar, cut.axis);
    if (cut.keep >= dim) {
        throw IllegalCut("cannot keep " + std::to_string(cut.keep) + " of dimension " + std::to_string(dim) +
                         " in " + to_string(bar));
    }
    Bar next = bar;
    (cut.axis == Axis::Vertical ? next.n : next.m) = cut.keep;
    return next;
}

std::uint64_t squares_eaten(const Bar& bar, const Cut& cut) {
    const std::uint64_t cols = bar.n + 1ull;
    const std::uint64_t rows = bar.m + 1ull;
    if (cut.axis == Axis::Vertical) return (bar.n - static_cast<std::uint64_t>(cut.keep)) * rows;
    return (bar.m - static_cast<std::uint64_t>(cut.keep)) * cols;
}

GameTree bar_tree(Engine& engine, const Bar& bar) {
    check_sign(bar);
    const std::uint64_t key = (std::uint64_t{bar.sign > 0 ? 1u : 2u} << 62) |
                              (static_cast<std::uint64_t>(bar.n) << 31) | bar.m;
    if (auto g = engine.cached(key)) return *g;
    std::vector<GameTree> left;
    std::vector<GameTree> right;
    for (const Cut& c : legal_moves(bar, Player::Left)) left.push_back(bar_tree(engine, apply_cut(bar, c)));
    for (const Cut& c : legal_moves(bar, Player::Right)) right.push_back(bar_tree(engine, apply_cut(bar, c)));
    const GameTree g = engine.make(std::move(left), std::move(right));
    engine.remember(key, g);
    return g;
}

Dyadic value(const Bar& bar) {
    check_sign(bar);
    const std::uint64_t total = static_cast<std::uint64_t>(bar.n) + bar.m;
    const bool both_odd = bar.n % 2 == 1 && bar.m % 2 == 1;
    const std::uint64_t index = both_odd ? total - 2 : total;
    if (index > Dyadic::kMaxExponent) throw OverflowError("value of " + to_string(bar) + " exceeds 64 bits");
    const Dyadic h = hackenbush_value(static_cast<std::uint32_t>(index));
    return bar.sign > 0 ? h : -h;
}

std::vector<std::vector<Dyadic>> value_table(std::uint32_t max_n, std::uint32_t max_m) {
    std::vector<std::vector<Dyadic>> grid(max_m + 1ull, std::vector<Dyadic>(max_n + 1ull));
    for (std::uint32_t m = 0; m <= max_m; ++m) {
        for (std::uint32_t n = 0; n <= max_n; ++n) grid[m][n] = value(Bar{n, m, +1});
    }
    return grid;
}

std::string to_string(const Bar& bar) {
    return std::string(bar.sign > 0 ? "+" : "-") + "(" + std::to_string(bar.n) + "," + std::to_string(bar.m) + ")";
}

Bar parse_bar_at(std::string_view text, std::size_t& pos) {
    skip_spaces(text, pos);
    Bar bar;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        bar.sign = text[pos] == '-' ? -1 : +1;
        ++pos;
    }
    expect(text, pos, '(');
    bar.n = parse_uint(text, pos);
    expect(text, pos, ',');
    bar.m = parse_uint(text, pos);
    expect(text, pos, ')');
    return bar;
}

Bar parse_bar(std::string_view text) {
    std::size_t pos = 0;
    Bar bar = parse_bar_at(text, pos);
    skip_spaces(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters after bar", pos);
    return bar;
}

}  // namespace chocolate
