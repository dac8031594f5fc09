#include "orbigeo/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace orbigeo {

BigInt::BigInt(long long v) {
    if (v < 0) {
        negative_ = true;
    }
    unsigned long long u =
        v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    while (u != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(u % kBase));
        u /= kBase;
    }
}

BigInt::BigInt(const std::string& decimal) { *this = from_string(decimal); }

BigInt BigInt::from_string(const std::string& decimal) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < decimal.size() && (decimal[pos] == '+' || decimal[pos] == '-')) {
        neg = decimal[pos] == '-';
        ++pos;
    }
    if (pos == decimal.size()) {
        throw std::invalid_argument("BigInt: empty numeral '" + decimal + "'");
    }
    BigInt out;
    for (std::size_t i = pos; i < decimal.size(); ++i) {
        if (decimal[i] < '0' || decimal[i] > '9') {
            throw std::invalid_argument("BigInt: bad digit in '" + decimal + "'");
        }
    }
    // consume 9 decimal digits per limb, most significant chunk first
    std::size_t len = decimal.size() - pos;
    std::size_t first = len % 9;
    if (first != 0) {
        out = BigInt(static_cast<long long>(std::stoll(decimal.substr(pos, first))));
    }
    for (std::size_t i = pos + first; i < decimal.size(); i += 9) {
        out *= BigInt(static_cast<long long>(kBase));
        out += BigInt(static_cast<long long>(std::stoll(decimal.substr(i, 9))));
    }
    out.negative_ = neg && !out.is_zero();
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string out = negative_ ? "-" : "";
    out += std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string chunk = std::to_string(limbs_[i]);
        out += std::string(9 - chunk.size(), '0') + chunk;
    }
    return out;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

int BigInt::cmp_abs(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size()) {
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    }
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_) return a.negative_ ? -1 : 1;
    int c = cmp_abs(a, b);
    return a.negative_ ? -c : c;
}

std::vector<std::uint32_t> BigInt::add_abs(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        std::uint64_t cur = carry;
        if (i < a.size()) cur += a[i];
        if (i < b.size()) cur += b[i];
        out.push_back(static_cast<std::uint32_t>(cur % kBase));
        carry = static_cast<std::uint32_t>(cur / kBase);
    }
    return out;
}

std::vector<std::uint32_t> BigInt::sub_abs(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(out[i]) - borrow -
                           (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        borrow = 0;
        if (cur < 0) {
            cur += kBase;
            borrow = 1;
        }
        out[i] = static_cast<std::uint32_t>(cur);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
        limbs_ = add_abs(limbs_, rhs.limbs_);
    } else if (cmp_abs(*this, rhs) >= 0) {
        limbs_ = sub_abs(limbs_, rhs.limbs_);
    } else {
        limbs_ = sub_abs(rhs.limbs_, limbs_);
        negative_ = rhs.negative_;
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (is_zero() || rhs.is_zero()) {
        *this = BigInt();
        return *this;
    }
    std::vector<std::uint32_t> out(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size() || carry; ++j) {
            std::uint64_t cur = out[i + j] + carry;
            if (j < rhs.limbs_.size()) {
                cur += static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j];
            }
            out[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    negative_ = negative_ != rhs.negative_;
    limbs_ = std::move(out);
    trim();
    return *this;
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem) {
    if (den.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (cmp_abs(num, den) < 0) {
        quot = BigInt();
        rem = num;
        return;
    }
    // single-limb divisor: plain short division
    if (den.limbs_.size() == 1) {
        std::uint64_t d = den.limbs_[0];
        std::vector<std::uint32_t> q(num.limbs_.size(), 0);
        std::uint64_t r = 0;
        for (std::size_t i = num.limbs_.size(); i-- > 0;) {
            std::uint64_t cur = r * kBase + num.limbs_[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            r = cur % d;
        }
        quot = BigInt();
        quot.limbs_ = std::move(q);
        quot.negative_ = num.negative_ != den.negative_;
        quot.trim();
        rem = BigInt(static_cast<long long>(r));
        if (num.negative_ && !rem.is_zero()) rem.negative_ = true;
        return;
    }
    // Knuth algorithm D in base 10^9
    std::uint32_t scale = static_cast<std::uint32_t>(kBase / (den.limbs_.back() + 1ull));
    BigInt u = num.abs() * BigInt(static_cast<long long>(scale));
    BigInt v = den.abs() * BigInt(static_cast<long long>(scale));
    std::size_t n = v.limbs_.size();
    std::size_t m = u.limbs_.size() - n;
    u.limbs_.push_back(0);
    std::vector<std::uint32_t> q(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t top = static_cast<std::uint64_t>(u.limbs_[j + n]) * kBase + u.limbs_[j + n - 1];
        std::uint64_t qhat = top / v.limbs_.back();
        std::uint64_t rhat = top % v.limbs_.back();
        while (qhat >= kBase ||
               (n >= 2 && qhat * v.limbs_[n - 2] > rhat * kBase + u.limbs_[j + n - 2])) {
            --qhat;
            rhat += v.limbs_.back();
            if (rhat >= kBase) break;
        }
        // multiply-subtract, correcting qhat if it was one too large
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v.limbs_[i] + carry;
            carry = p / kBase;
            std::int64_t cur =
                static_cast<std::int64_t>(u.limbs_[i + j]) - borrow - static_cast<std::int64_t>(p % kBase);
            borrow = 0;
            if (cur < 0) {
                cur += kBase;
                borrow = 1;
            }
            u.limbs_[i + j] = static_cast<std::uint32_t>(cur);
        }
        std::int64_t last =
            static_cast<std::int64_t>(u.limbs_[j + n]) - borrow - static_cast<std::int64_t>(carry);
        if (last < 0) {
            --qhat;
            std::uint32_t add_carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t cur =
                    static_cast<std::uint64_t>(u.limbs_[i + j]) + v.limbs_[i] + add_carry;
                u.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
                add_carry = static_cast<std::uint32_t>(cur / kBase);
            }
            last += add_carry;
        }
        u.limbs_[j + n] = static_cast<std::uint32_t>(last);
        q[j] = static_cast<std::uint32_t>(qhat);
    }
    quot = BigInt();
    quot.limbs_ = std::move(q);
    quot.negative_ = num.negative_ != den.negative_;
    quot.trim();
    u.limbs_.resize(n);
    u.trim();
    BigInt unscaled, junk;
    divmod(u, BigInt(static_cast<long long>(scale)), unscaled, junk);
    rem = unscaled;
    rem.negative_ = num.negative_ && !rem.is_zero();
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return *this = q;
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return *this = r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool BigInt::fits_longlong() const {
    static const BigInt kMin(std::numeric_limits<long long>::min());
    static const BigInt kMax(std::numeric_limits<long long>::max());
    return *this >= kMin && *this <= kMax;
}

long long BigInt::to_longlong() const {
    if (!fits_longlong()) throw std::overflow_error("BigInt: value exceeds long long");
    unsigned long long out = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        out = out * kBase + limbs_[i];
    }
    return negative_ ? static_cast<long long>(0ULL - out) : static_cast<long long>(out);
}

}  // namespace orbigeo
