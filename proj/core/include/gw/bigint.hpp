#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gw {

/// Unsigned arbitrary-precision integer over 64-bit limbs, little-endian.
/// Only the operations needed by the exact sum/bound comparisons are
/// provided: everything is big-by-small, so no full multiprecision
/// division or gcd is required.
class BigUint {
public:
    BigUint() = default;
    explicit BigUint(std::uint64_t v);

    bool is_zero() const { return limbs_.empty(); }
    int compare(const BigUint& other) const;

    void add(const BigUint& other);
    void mul_u64(std::uint64_t f);
    /// Divides in place by d, returns the remainder. d must be nonzero.
    std::uint64_t divmod_u64(std::uint64_t d);
    std::uint64_t mod_u64(std::uint64_t d) const;

    double to_double() const;
    /// Value as mantissa * 2^exp2; keeps ratios of huge integers finite.
    double to_double_parts(int& exp2) const;
    std::string str() const;

private:
    std::vector<std::uint64_t> limbs_;
    void trim();
};

inline bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
inline bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }
inline bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }

/// Compares a * prod(af) with b * prod(bf). Factors are 64-bit.
int compare_products(const BigUint& a, std::initializer_list<std::uint64_t> af,
                     const BigUint& b, std::initializer_list<std::uint64_t> bf);

/// Non-negative exact fraction num/den with big components, kept reduced.
/// Accumulates sums of small fractions (run exponents, the credit-sum
/// checks) without ever needing a big-by-big gcd: denominators combine
/// through their small pairwise gcd, and the Henrici step reduces the
/// result with another small gcd.
class BigRat {
public:
    BigRat() : num_(0), den_(1) {}

    /// *this += p/q with 64-bit p, q (q > 0).
    void add_fraction(std::uint64_t p, std::uint64_t q);

    const BigUint& num() const { return num_; }
    const BigUint& den() const { return den_; }
    double to_double() const;
    std::string str() const;

private:
    BigUint num_, den_;
};

} // namespace gw
