#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace chocolate {

/// Exact dyadic rational numerator / 2^exponent, always kept in reduced form
/// (exponent == 0 or numerator odd).
class Dyadic {
public:
    static constexpr std::uint32_t kMaxExponent = 62;

    constexpr Dyadic() = default;
    constexpr Dyadic(std::int64_t integer) : numerator_(integer) {}  // NOLINT: implicit by design of integers as dyadics

    /// Normalizing constructor. Throws OverflowError when the reduced exponent
    /// exceeds kMaxExponent.
    static Dyadic make(std::int64_t numerator, std::uint32_t exponent);

    std::int64_t numerator() const noexcept { return numerator_; }
    std::uint32_t exponent() const noexcept { return exponent_; }

    bool is_integer() const noexcept { return exponent_ == 0; }
    int sign() const noexcept { return (numerator_ > 0) - (numerator_ < 0); }

    std::int64_t floor() const noexcept;
    std::int64_t ceil() const noexcept;

    // Approximate; for display only.
    double to_double() const noexcept;

    /// "p" for integers, "p/2^j" otherwise.
    std::string to_string() const;

    /// Inverse of to_string. Also accepts a leading '+' and non-reduced input
    /// such as "6/2^3".
    static Dyadic parse(std::string_view text);

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    Dyadic& operator+=(const Dyadic& other) { return *this = *this + other; }
    Dyadic& operator-=(const Dyadic& other) { return *this = *this - other; }

    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) noexcept;
    friend bool operator==(const Dyadic& a, const Dyadic& b) noexcept = default;

private:
    std::int64_t numerator_ = 0;
    std::uint32_t exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

inline Dyadic add(const Dyadic& a, const Dyadic& b) { return a + b; }
inline Dyadic neg(const Dyadic& a) { return -a; }
inline std::strong_ordering cmp(const Dyadic& a, const Dyadic& b) { return a <=> b; }

/// The simplest number strictly between lo and hi. An absent bound is
/// unbounded on that side, so (nullopt, nullopt) is 0 and (nullopt, 1) is 0.
/// Throws BoundsViolation if both bounds are present and lo >= hi.
Dyadic simplest_between(std::optional<Dyadic> lo, std::optional<Dyadic> hi);

}  // namespace chocolate

template <>
struct std::hash<chocolate::Dyadic> {
    std::size_t operator()(const chocolate::Dyadic& d) const noexcept {
        return std::hash<std::int64_t>{}(d.numerator()) * 31u + d.exponent();
    }
};
