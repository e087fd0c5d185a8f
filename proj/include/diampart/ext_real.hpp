#pragma once

#include <charconv>
#include <cmath>
#include <compare>
#include <limits>
#include <ostream>
#include <string>
#include <system_error>

#include "errors.hpp"

namespace diampart {

/// Extended real: -inf < finite doubles < +inf.
///
/// Backed by an IEEE double whose infinities serve as the two sentinels, so
/// the total order is the native floating-point order. NaN is never admitted.
class ExtReal {
public:
    constexpr ExtReal() noexcept = default;
    constexpr explicit ExtReal(double v) : value_(v) {
        if (v != v) throw ContractViolation("ExtReal: NaN is not an extended real");
    }

    static constexpr ExtReal neg_inf() noexcept { return ExtReal(Raw{}, -std::numeric_limits<double>::infinity()); }
    static constexpr ExtReal pos_inf() noexcept { return ExtReal(Raw{}, std::numeric_limits<double>::infinity()); }
    static constexpr ExtReal finite(double v) { return ExtReal(v); }

    constexpr double value() const noexcept { return value_; }
    constexpr bool is_neg_inf() const noexcept { return value_ == -std::numeric_limits<double>::infinity(); }
    constexpr bool is_pos_inf() const noexcept { return value_ == std::numeric_limits<double>::infinity(); }
    constexpr bool is_finite() const noexcept { return !is_neg_inf() && !is_pos_inf(); }

    constexpr ExtReal operator-() const noexcept { return ExtReal(Raw{}, -value_); }

    friend constexpr bool operator==(ExtReal a, ExtReal b) noexcept { return a.value_ == b.value_; }
    friend constexpr std::strong_ordering operator<=>(ExtReal a, ExtReal b) noexcept {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Applies `f` to finite values and leaves the sentinels alone.
    template <class F>
    ExtReal map_finite(F&& f) const {
        return is_finite() ? ExtReal(f(value_)) : *this;
    }

private:
    struct Raw {};
    constexpr ExtReal(Raw, double v) noexcept : value_(v) {}

    double value_ = -std::numeric_limits<double>::infinity();
};

inline constexpr ExtReal kNegInf = ExtReal::neg_inf();
inline constexpr ExtReal kPosInf = ExtReal::pos_inf();

inline constexpr ExtReal max(ExtReal a, ExtReal b) noexcept { return a < b ? b : a; }
inline constexpr ExtReal min(ExtReal a, ExtReal b) noexcept { return b < a ? b : a; }

/// Shortest round-trip decimal for a double.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

/// Serializes with the literal tokens `-inf` / `+inf` for the sentinels.
inline std::string to_string(ExtReal x) {
    if (x.is_neg_inf()) return "-inf";
    if (x.is_pos_inf()) return "+inf";
    return format_double(x.value());
}

inline ExtReal parse_ext_real(const std::string& token) {
    if (token == "-inf") return kNegInf;
    if (token == "+inf" || token == "inf") return kPosInf;
    double v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(v))
        throw ParseError(0, "not an extended real: '" + token + "'");
    return ExtReal(v);
}

inline std::ostream& operator<<(std::ostream& os, ExtReal x) { return os << to_string(x); }

}  // namespace diampart
