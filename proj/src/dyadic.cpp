#include "chocolate/dyadic.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <ostream>

#include "chocolate/errors.hpp"

namespace chocolate {
namespace {

using Wide = __int128;

constexpr Wide kInt64Min = std::numeric_limits<std::int64_t>::min();
constexpr Wide kInt64Max = std::numeric_limits<std::int64_t>::max();

// Reduce a wide numerator/exponent pair and narrow it back to 64 bits.
Dyadic narrow(Wide numerator, std::uint32_t exponent) {
    if (numerator == 0) return Dyadic{};
    while (exponent > 0 && (numerator & 1) == 0) {
        numerator /= 2;
        --exponent;
    }
    if (numerator < kInt64Min || numerator > kInt64Max) {
        throw OverflowError("dyadic numerator exceeds 64 bits");
    }
    return Dyadic::make(static_cast<std::int64_t>(numerator), exponent);
}

// numerator * 2^shift, shift small enough that the result fits 128 bits.
Wide scale(std::int64_t numerator, std::uint32_t shift) {
    return static_cast<Wide>(numerator) * (static_cast<Wide>(1) << shift);
}

}  // namespace

Dyadic Dyadic::make(std::int64_t numerator, std::uint32_t exponent) {
    Dyadic d;
    if (numerator == 0) return d;
    while (exponent > 0 && (numerator & 1) == 0) {
        numerator /= 2;
        --exponent;
    }
    if (exponent > kMaxExponent) {
        throw OverflowError("dyadic exponent " + std::to_string(exponent) + " exceeds " +
                            std::to_string(kMaxExponent));
    }
    d.numerator_ = numerator;
    d.exponent_ = exponent;
    return d;
}

std::int64_t Dyadic::floor() const noexcept {
    // Arithmetic shift rounds toward negative infinity.
    return exponent_ == 0 ? numerator_ : (numerator_ >> exponent_);
}

std::int64_t Dyadic::ceil() const noexcept {
    return is_integer() ? numerator_ : floor() + 1;
}

double Dyadic::to_double() const noexcept {
    double v = static_cast<double>(numerator_);
    for (std::uint32_t i = 0; i < exponent_; ++i) v /= 2.0;
    return v;
}

std::string Dyadic::to_string() const {
    std::string s = std::to_string(numerator_);
    if (exponent_ != 0) s += "/2^" + std::to_string(exponent_);
    return s;
}

Dyadic Dyadic::parse(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::uint64_t magnitude = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, magnitude);
    if (ec == std::errc::result_out_of_range) throw OverflowError("dyadic numerator out of range");
    if (ec != std::errc{} || ptr == begin) throw ParseError("expected digits", pos);
    pos = static_cast<std::size_t>(ptr - text.data());

    std::uint32_t exponent = 0;
    if (pos < text.size()) {
        if (text.substr(pos, 3) != "/2^") throw ParseError("expected \"/2^\"", pos);
        pos += 3;
        begin = text.data() + pos;
        auto [eptr, eec] = std::from_chars(begin, end, exponent);
        if (eec != std::errc{} || eptr == begin) throw ParseError("expected exponent digits", pos);
        pos = static_cast<std::size_t>(eptr - text.data());
        if (pos != text.size()) throw ParseError("trailing characters", pos);
    }
    Wide value = negative ? -static_cast<Wide>(magnitude) : static_cast<Wide>(magnitude);
    if (value < kInt64Min || value > kInt64Max) throw OverflowError("dyadic numerator out of range");
    return make(static_cast<std::int64_t>(value), exponent);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    const std::uint32_t e = std::max(a.exponent_, b.exponent_);
    // Both shifts are at most 62, so the sum fits comfortably in 128 bits.
    const Wide sum = scale(a.numerator_, e - a.exponent_) + scale(b.numerator_, e - b.exponent_);
    return narrow(sum, e);
}

Dyadic operator-(const Dyadic& a) {
    if (a.numerator_ == std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError("negation of minimum dyadic numerator");
    }
    Dyadic r = a;
    r.numerator_ = -a.numerator_;
    return r;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) noexcept {
    const std::uint32_t e = std::max(a.exponent_, b.exponent_);
    const Wide lhs = scale(a.numerator_, e - a.exponent_);
    const Wide rhs = scale(b.numerator_, e - b.exponent_);
    return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.to_string(); }

Dyadic simplest_between(std::optional<Dyadic> lo, std::optional<Dyadic> hi) {
    if (lo && hi && *lo >= *hi) {
        throw BoundsViolation("simplest_between requires lo < hi, got " + lo->to_string() +
                              " >= " + hi->to_string());
    }
    // Integer range strictly inside (lo, hi).
    const std::optional<std::int64_t> first =
        lo ? std::optional<std::int64_t>(lo->floor() + 1) : std::nullopt;
    const std::optional<std::int64_t> last =
        hi ? std::optional<std::int64_t>(hi->ceil() - 1) : std::nullopt;
    const bool has_integer = !first || !last || *first <= *last;
    if (has_integer) {
        if ((!first || *first <= 0) && (!last || *last >= 0)) return Dyadic{0};
        if (first && *first > 0) return Dyadic{*first};
        return Dyadic{*last};
    }

    // No integer between: both bounds present and inside one unit interval.
    // The first exponent admitting a grid point strictly above lo that is also
    // below hi gives the unique simplest number.
    for (std::uint32_t j = 1; j <= Dyadic::kMaxExponent; ++j) {
        const std::uint32_t e = std::max(j, lo->exponent());
        // floor(lo * 2^j)
        Wide scaled_lo = scale(lo->numerator(), e - lo->exponent());
        const std::uint32_t drop = e - j;
        Wide below = scaled_lo >= 0 ? scaled_lo / (static_cast<Wide>(1) << drop)
                                    : -((-scaled_lo + (static_cast<Wide>(1) << drop) - 1) /
                                        (static_cast<Wide>(1) << drop));
        const Wide candidate = below + 1;
        if (candidate < kInt64Min || candidate > kInt64Max) {
            throw OverflowError("simplest_between candidate exceeds 64 bits");
        }
        const Dyadic d = Dyadic::make(static_cast<std::int64_t>(candidate), j);
        if (d < *hi) return d;
    }
    throw OverflowError("simplest number between " + lo->to_string() + " and " + hi->to_string() +
                        " needs exponent above " + std::to_string(Dyadic::kMaxExponent));
}

}  // namespace chocolate
