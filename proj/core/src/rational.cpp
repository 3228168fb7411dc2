#include "gw/rational.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

namespace gw {

namespace {

using i128 = __int128;

std::int64_t checked_cast(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

Rat normalize(i128 n, i128 d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 a = n < 0 ? -n : n, b = d;
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    if (a == 0) a = 1;
    Rat r;
    r.num = checked_cast(n / a);
    r.den = checked_cast(d / a);
    return r;
}

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("bad integer literal: " + std::string(s));
    return v;
}

} // namespace

Rat::Rat(std::int64_t n, std::int64_t d) {
    Rat r = normalize(n, d);
    num = r.num;
    den = r.den;
}

std::int64_t Rat::floor() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

std::int64_t Rat::ceil() const {
    std::int64_t q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    i128 lhs = i128(a.num) * b.den;
    i128 rhs = i128(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rat operator+(const Rat& a, const Rat& b) {
    return normalize(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
}

Rat operator-(const Rat& a, const Rat& b) {
    return normalize(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
}

Rat operator*(const Rat& a, const Rat& b) {
    return normalize(i128(a.num) * b.num, i128(a.den) * b.den);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::invalid_argument("rational division by zero");
    return normalize(i128(a.num) * b.den, i128(a.den) * b.num);
}

Rat parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::int64_t p = parse_int(text.substr(0, slash));
        std::int64_t q = parse_int(text.substr(slash + 1));
        return Rat(p, q);
    }
    auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string_view ipart = text.substr(0, dot);
        std::string_view fpart = text.substr(dot + 1);
        if (fpart.empty() || fpart.size() > 18)
            throw std::invalid_argument("bad decimal literal: " + std::string(text));
        bool neg = !ipart.empty() && ipart.front() == '-';
        std::int64_t scale = 1;
        for (size_t i = 0; i < fpart.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(fpart[i])))
                throw std::invalid_argument("bad decimal literal: " + std::string(text));
            scale *= 10;
        }
        std::int64_t whole = ipart.empty() || ipart == "-" ? 0 : parse_int(ipart);
        std::int64_t frac = parse_int(fpart);
        i128 n = i128(whole) * scale + (neg ? -i128(frac) : i128(frac));
        return normalize(n, scale);
    }
    return Rat(parse_int(text));
}

} // namespace gw
