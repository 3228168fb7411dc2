#include "gw/bigint.hpp"

#include <cassert>
#include <cmath>
#include <numeric>

namespace gw {

using u128 = unsigned __int128;

BigUint::BigUint(std::uint64_t v) {
    if (v != 0) limbs_.push_back(v);
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int BigUint::compare(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size() ? -1 : 1;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i])
            return limbs_[i] < other.limbs_[i] ? -1 : 1;
    }
    return 0;
}

void BigUint::add(const BigUint& other) {
    if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
    unsigned carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        u128 s = u128(limbs_[i]) + (i < other.limbs_.size() ? other.limbs_[i] : 0) + carry;
        limbs_[i] = static_cast<std::uint64_t>(s);
        carry = static_cast<unsigned>(s >> 64);
    }
    if (carry) limbs_.push_back(carry);
}

void BigUint::mul_u64(std::uint64_t f) {
    if (f == 0) { limbs_.clear(); return; }
    if (f == 1) return;
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        u128 p = u128(limb) * f + carry;
        limb = static_cast<std::uint64_t>(p);
        carry = static_cast<std::uint64_t>(p >> 64);
    }
    if (carry) limbs_.push_back(carry);
}

std::uint64_t BigUint::divmod_u64(std::uint64_t d) {
    assert(d != 0);
    std::uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (u128(rem) << 64) | limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(cur / d);
        rem = static_cast<std::uint64_t>(cur % d);
    }
    trim();
    return rem;
}

std::uint64_t BigUint::mod_u64(std::uint64_t d) const {
    assert(d != 0);
    std::uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;)
        rem = static_cast<std::uint64_t>(((u128(rem) << 64) | limbs_[i]) % d);
    return rem;
}

double BigUint::to_double_parts(int& exp2) const {
    exp2 = 0;
    if (is_zero()) return 0.0;
    const size_t k = limbs_.size();
    double mantissa = static_cast<double>(limbs_[k - 1]);
    if (k >= 2) mantissa = mantissa * 18446744073709551616.0 + static_cast<double>(limbs_[k - 2]);
    exp2 = static_cast<int>((k >= 2 ? k - 2 : 0) * 64);
    return mantissa;
}

double BigUint::to_double() const {
    int exp2 = 0;
    const double m = to_double_parts(exp2);
    return std::ldexp(m, exp2);
}

std::string BigUint::str() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint64_t chunk = tmp.divmod_u64(10000000000000000000ull); // 10^19
        std::string part = std::to_string(chunk);
        if (!tmp.is_zero()) part.insert(0, 19 - part.size(), '0');
        out.insert(0, part);
    }
    return out;
}

int compare_products(const BigUint& a, std::initializer_list<std::uint64_t> af,
                     const BigUint& b, std::initializer_list<std::uint64_t> bf) {
    BigUint lhs = a, rhs = b;
    for (auto f : af) lhs.mul_u64(f);
    for (auto f : bf) rhs.mul_u64(f);
    return lhs.compare(rhs);
}

void BigRat::add_fraction(std::uint64_t p, std::uint64_t q) {
    assert(q != 0);
    std::uint64_t g0 = std::gcd(p, q);
    p /= g0; q /= g0;

    // num/den + p/q  ->  (num*(q/g) + p*(den/g)) / (den*(q/g)),  g = gcd(den, q)
    std::uint64_t g = std::gcd(den_.mod_u64(q), q);
    std::uint64_t qg = q / g;

    BigUint den_over_g = den_;
    den_over_g.divmod_u64(g);

    num_.mul_u64(qg);
    den_over_g.mul_u64(p);
    num_.add(den_over_g);
    den_.mul_u64(qg);

    // Henrici: the new gcd divides g.
    if (g > 1) {
        std::uint64_t g2 = std::gcd(num_.mod_u64(g), g);
        if (g2 > 1) {
            num_.divmod_u64(g2);
            den_.divmod_u64(g2);
        }
    }
}

// Divide the mantissas and recombine the exponents, so the ratio stays
// finite even when num and den individually overflow double.
double BigRat::to_double() const {
    if (num_.is_zero()) return 0.0;
    int en = 0, ed = 0;
    const double mn = num_.to_double_parts(en);
    const double md = den_.to_double_parts(ed);
    return std::ldexp(mn / md, en - ed);
}

std::string BigRat::str() const {
    BigUint one(1);
    if (den_.compare(one) == 0) return num_.str();
    return num_.str() + "/" + den_.str();
}

} // namespace gw
