#include "chocolate/hackenbush.hpp"

#include <string>
#include <vector>

#include "chocolate/errors.hpp"

namespace chocolate {

std::int64_t jacobsthal(std::uint32_t n) {
    std::int64_t j = 0;
    for (std::uint32_t k = 0; k < n; ++k) {
        const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
        std::int64_t next = 0;
        if (__builtin_mul_overflow(j, 2, &next) || __builtin_add_overflow(next, sign, &next)) {
            throw OverflowError("jacobsthal(" + std::to_string(n) + ") exceeds 64 bits");
        }
        j = next;
    }
    return j;
}

std::int64_t jacobsthal_closed_form(std::uint32_t n) {
    if (n > 62) throw OverflowError("jacobsthal closed form limited to n <= 62");
    const std::int64_t pow2 = std::int64_t{1} << n;
    const std::int64_t alt = (n % 2 == 0) ? 1 : -1;
    return (pow2 - alt) / 3;
}

Dyadic hackenbush_value(std::uint32_t n) {
    if (n == 0) return Dyadic{0};
    return Dyadic::make(jacobsthal(n), n - 1);
}

GameTree string_tree(Engine& engine, AlternatingString s) {
    std::vector<GameTree> strings;
    strings.reserve(s.length);
    for (std::uint32_t len = 0; len < s.length; ++len) {
        std::vector<GameTree> left;
        std::vector<GameTree> right;
        for (std::uint32_t k = 0; k < len; ++k) (k % 2 == 0 ? left : right).push_back(strings[k]);
        strings.push_back(engine.make(std::move(left), std::move(right)));
    }
    std::vector<GameTree> left;
    std::vector<GameTree> right;
    for (std::uint32_t k = 0; k < s.length; ++k) (k % 2 == 0 ? left : right).push_back(strings[k]);
    return engine.make(std::move(left), std::move(right));
}

}  // namespace chocolate
