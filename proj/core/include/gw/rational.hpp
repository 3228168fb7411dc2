#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gw {

/// Exact rational on int64, kept canonical (den > 0, gcd(num, den) = 1).
/// Used for all thresholds that enter exact comparisons (alpha, beta, gamma).
/// Comparisons cross-multiply in 128 bit, so any canonical value whose
/// numerator and denominator fit in int64 compares safely.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n, std::int64_t d);
    explicit Rat(std::int64_t n) : num(n), den(1) {}

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_integer() const { return den == 1; }

    std::int64_t floor() const;
    std::int64_t ceil() const;

    std::string str() const;

    friend bool operator==(const Rat&, const Rat&) = default;
};

std::strong_ordering operator<=>(const Rat& a, const Rat& b);
inline bool operator<(const Rat& a, const Rat& b) { return (a <=> b) < 0; }
inline bool operator<=(const Rat& a, const Rat& b) { return (a <=> b) <= 0; }
inline bool operator>(const Rat& a, const Rat& b) { return (a <=> b) > 0; }
inline bool operator>=(const Rat& a, const Rat& b) { return (a <=> b) >= 0; }

Rat operator+(const Rat& a, const Rat& b);
Rat operator-(const Rat& a, const Rat& b);
Rat operator*(const Rat& a, const Rat& b);
Rat operator/(const Rat& a, const Rat& b);

/// Parses "p/q", plain integers and decimal literals ("1.01" -> 101/100) exactly.
/// Throws std::invalid_argument on anything else.
Rat parse_rational(std::string_view text);

} // namespace gw
