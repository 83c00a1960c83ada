#pragma once

#include <cstdint>

#include "chocolate/dyadic.hpp"
#include "chocolate/engine.hpp"

namespace chocolate {

/// Alternating blue-red Hackenbush string, blue edge at the ground.
struct AlternatingString {
    std::uint32_t length = 0;
};

/// J_n via J_{n+1} = 2 J_n + (-1)^n from J_0 = 0. Throws OverflowError past 64 bits.
std::int64_t jacobsthal(std::uint32_t n);

/// J_n via (2^n - (-1)^n) / 3.
std::int64_t jacobsthal_closed_form(std::uint32_t n);

/// H_n = (2^n - (-1)^n) / (3 * 2^(n-1)), with H_0 = 0.
Dyadic hackenbush_value(std::uint32_t n);

/// Left options: every even length below s.length. Right: every odd length.
GameTree string_tree(Engine& engine, AlternatingString s);

}  // namespace chocolate
