#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orbigeo {

// Signed arbitrary-precision integer, base 10^9 limbs, little-endian.
// Sized for exact invariant arithmetic: values here stay tiny, so all
// algorithms are schoolbook.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT(google-explicit-constructor)
    explicit BigInt(const std::string& decimal);

    static BigInt from_string(const std::string& decimal);
    std::string to_string() const;

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int signum() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt& operator/=(const BigInt& rhs);  // truncated toward zero
    BigInt& operator%=(const BigInt& rhs);  // sign follows dividend

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    // quotient truncated toward zero, remainder with the dividend's sign
    static void divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem);
    static BigInt gcd(BigInt a, BigInt b);

    // Fits in long long?  (Used only by callers that already know the range.)
    bool fits_longlong() const;
    long long to_longlong() const;

private:
    static constexpr std::uint32_t kBase = 1000000000u;
    static int cmp(const BigInt& a, const BigInt& b);
    static int cmp_abs(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_abs(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_abs(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    void trim();

    bool negative_ = false;
    std::vector<std::uint32_t> limbs_;  // empty <=> zero
};

}  // namespace orbigeo
