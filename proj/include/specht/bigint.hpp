#ifndef SPECHT_BIGINT_HPP
#define SPECHT_BIGINT_HPP

#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace specht {

// Signed arbitrary-precision integer, little-endian base 2^32 magnitude.
// Supports exactly what the exact linear solver needs: ring ops, binary gcd
// and exact division.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m = v < 0 ? -static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        mag_.push_back(static_cast<uint32_t>(m));
        if (m >> 32) mag_.push_back(static_cast<uint32_t>(m >> 32));
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_odd() const { return sign_ != 0 && (mag_[0] & 1u); }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }
    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.mag_[i]) * b.mag_[j] +
                               r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r.mag_[i + b.mag_.size()] += static_cast<uint32_t>(carry);
        }
        r.trim();
        return r;
    }

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    // Exact quotient this/d; d must divide this exactly (limb-wise
    // least-significant-first division using the 2-adic inverse of d).
    BigInt div_exact(const BigInt& d) const {
        if (d.is_zero()) throw std::domain_error("BigInt: division by zero");
        if (is_zero()) return BigInt();
        BigInt a = this->abs(), b = d.abs();
        size_t shift = std::min(a.trailing_zero_bits(), b.trailing_zero_bits());
        a = a.shr(shift);
        b = b.shr(shift);
        assert(b.is_odd());
        uint32_t inv = inv32(b.mag_[0]);
        size_t qlen = a.mag_.size() >= b.mag_.size() ? a.mag_.size() - b.mag_.size() + 1 : 1;
        std::vector<uint32_t> q(qlen, 0);
        std::vector<uint32_t> rem = a.mag_;
        rem.resize(a.mag_.size() + 1, 0);
        for (size_t k = 0; k < qlen; ++k) {
            uint32_t low = k < rem.size() ? rem[k] : 0;
            uint32_t qk = low * inv;  // mod 2^32
            q[k] = qk;
            if (qk == 0) continue;
            // rem -= qk * b << (32k)
            uint64_t borrow = 0, carry = 0;
            for (size_t j = 0; j < b.mag_.size() || carry; ++j) {
                uint64_t prod = carry;
                if (j < b.mag_.size()) prod += static_cast<uint64_t>(qk) * b.mag_[j];
                carry = prod >> 32;
                uint64_t sub = (prod & 0xffffffffu) + borrow;
                size_t idx = k + j;
                if (idx >= rem.size()) {
                    assert(sub == 0);
                    break;
                }
                uint64_t cur = rem[idx];
                if (cur < sub) {
                    rem[idx] = static_cast<uint32_t>(cur + (1ull << 32) - sub);
                    borrow = 1;
                } else {
                    rem[idx] = static_cast<uint32_t>(cur - sub);
                    borrow = 0;
                }
            }
            assert(borrow == 0);
        }
        for (size_t k = qlen; k < rem.size(); ++k) assert(rem[k] == 0);
        BigInt r;
        r.mag_ = std::move(q);
        r.trim();
        r.sign_ = r.mag_.empty() ? 0 : sign_ * d.sign_;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs();
        b = b.abs();
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        size_t za = a.trailing_zero_bits(), zb = b.trailing_zero_bits();
        size_t common = std::min(za, zb);
        a = a.shr(za);
        b = b.shr(zb);
        while (true) {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) break;
            if (c < 0) std::swap(a, b);
            a = a - b;
            a = a.shr(a.trailing_zero_bits());
        }
        return a.shl(common);
    }

    long long to_ll() const {
        unsigned long long m = 0;
        if (mag_.size() > 2) throw std::overflow_error("BigInt: does not fit in long long");
        if (mag_.size() >= 1) m = mag_[0];
        if (mag_.size() == 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
        if (sign_ >= 0) {
            if (m > 0x7fffffffffffffffull) throw std::overflow_error("BigInt: does not fit");
            return static_cast<long long>(m);
        }
        if (m > 0x8000000000000000ull) throw std::overflow_error("BigInt: does not fit");
        return -static_cast<long long>(m - 1) - 1;
    }

    std::string str() const {
        if (sign_ == 0) return "0";
        std::string out;
        std::vector<uint32_t> m = mag_;
        while (!m.empty()) {
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            std::string chunk = std::to_string(rem);
            if (!m.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
            out = chunk + out;
        }
        return sign_ < 0 ? "-" + out : out;
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    size_t trailing_zero_bits() const {
        if (sign_ == 0) return 0;
        size_t bits = 0;
        for (uint32_t limb : mag_) {
            if (limb == 0) {
                bits += 32;
            } else {
                bits += static_cast<size_t>(__builtin_ctz(limb));
                break;
            }
        }
        return bits;
    }

    BigInt shr(size_t bits) const {
        if (sign_ == 0 || bits == 0) return *this;
        size_t limbs = bits / 32, rest = bits % 32;
        if (limbs >= mag_.size()) return BigInt();
        BigInt r;
        r.sign_ = sign_;
        r.mag_.assign(mag_.begin() + static_cast<long>(limbs), mag_.end());
        if (rest) {
            for (size_t i = 0; i < r.mag_.size(); ++i) {
                uint32_t hi = i + 1 < r.mag_.size() ? r.mag_[i + 1] : 0;
                r.mag_[i] = (r.mag_[i] >> rest) | (hi << (32 - rest));
            }
        }
        r.trim();
        return r;
    }

    BigInt shl(size_t bits) const {
        if (sign_ == 0 || bits == 0) return *this;
        size_t limbs = bits / 32, rest = bits % 32;
        BigInt r;
        r.sign_ = sign_;
        r.mag_.assign(limbs, 0);
        r.mag_.insert(r.mag_.end(), mag_.begin(), mag_.end());
        if (rest) {
            uint32_t carry = 0;
            for (size_t i = limbs; i < r.mag_.size(); ++i) {
                uint32_t cur = r.mag_[i];
                r.mag_[i] = (cur << rest) | carry;
                carry = cur >> (32 - rest);
            }
            if (carry) r.mag_.push_back(carry);
        }
        return r;
    }

    static uint32_t inv32(uint32_t d) {
        // Newton iteration for the inverse of an odd d modulo 2^32.
        uint32_t x = d;  // correct mod 2^3
        for (int it = 0; it < 5; ++it) x *= 2u - d * x;
        assert(x * d == 1u);
        return x;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + carry +
                           (i < small.size() ? small[i] : 0);
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // requires a >= b
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow -
                          (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += 1ll << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        assert(borrow == 0);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

// Exact rational with positive reduced denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string str() const {
        if (den_ == BigInt(1)) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    BigInt num_, den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = num_.div_exact(g);
            den_ = den_.div_exact(g);
        }
    }
};

}  // namespace specht

#endif
