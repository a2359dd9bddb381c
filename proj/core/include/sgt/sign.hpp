#ifndef SGT_SIGN_HPP
#define SGT_SIGN_HPP

#include <cstdint>
#include <optional>

namespace sgt {

/// Edge sign. Kept as a two-valued enumeration in all public contracts;
/// never a bare bool, so that +/- polarity cannot be silently flipped.
enum class Sign : std::uint8_t { plus = 0, minus = 1 };

constexpr Sign operator*(Sign a, Sign b) {
    return static_cast<Sign>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr Sign& operator*=(Sign& a, Sign b) {
    a = a * b;
    return a;
}

constexpr Sign negated(Sign s) { return s * Sign::minus; }

constexpr bool is_negative(Sign s) { return s == Sign::minus; }

constexpr char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

constexpr std::optional<Sign> sign_from_char(char c) {
    if (c == '+') return Sign::plus;
    if (c == '-') return Sign::minus;
    return std::nullopt;
}

}  // namespace sgt

#endif
