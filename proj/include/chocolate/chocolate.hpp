#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chocolate/dyadic.hpp"
#include "chocolate/engine.hpp"

namespace chocolate {

enum class CellColor { Black, Blue, Red };
enum class Axis { Vertical, Horizontal };

std::string to_string(CellColor c);
std::string to_string(Axis a);  // "vertical" / "horizontal"
Axis parse_axis(std::string_view text);

/// An (n+1) x (m+1) bar written (n, m). Column i grows rightward, row j
/// upward, poisoned square at (0, 0). sign = -1 is the mirrored coloring
/// (red squares next to the poison), i.e. the negative of the +1 bar.
struct Bar {
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    int sign = +1;

    friend bool operator==(const Bar&, const Bar&) = default;
};

/// A cut leaves `keep` as the new n (Vertical) or new m (Horizontal).
struct Cut {
    Axis axis = Axis::Vertical;
    std::uint32_t keep = 0;

    friend bool operator==(const Cut&, const Cut&) = default;
};

/// Throws OutOfBounds unless 0 <= i <= n and 0 <= j <= m.
CellColor cell_color(const Bar& bar, std::uint32_t i, std::uint32_t j);

/// Cuts available to `player`, vertical cuts first, each axis by ascending keep.
std::vector<Cut> legal_moves(const Bar& bar, Player player);

/// nullopt if the cut is legal for `player`; otherwise a sentence naming the
/// violated rule (dimension or square color).
std::optional<std::string> illegal_reason(const Bar& bar, Player player, const Cut& cut);

/// Throws IllegalCut if keep is not below the current dimension.
Bar apply_cut(const Bar& bar, const Cut& cut);

/// Unit squares removed by the cut.
std::uint64_t squares_eaten(const Bar& bar, const Cut& cut);

/// Full expansion into the engine. Memoized per (n, m, sign).
GameTree bar_tree(Engine& engine, const Bar& bar);

/// Closed form: sign * H_{n+m} unless n and m are both odd, then sign * H_{n+m-2}.
Dyadic value(const Bar& bar);

/// grid[m][n] = value(+(n, m)) for n <= max_n, m <= max_m.
std::vector<std::vector<Dyadic>> value_table(std::uint32_t max_n, std::uint32_t max_m);

/// "+(2,3)" / "-(1,3)".
std::string to_string(const Bar& bar);

/// Accepts an optional '+' or '-' followed by "(n,m)"; whitespace allowed
/// around tokens. The whole input must be consumed.
Bar parse_bar(std::string_view text);

/// Parses one bar starting at `pos`, advancing it. Errors report absolute
/// offsets into `text`.
Bar parse_bar_at(std::string_view text, std::size_t& pos);

}  // namespace chocolate
