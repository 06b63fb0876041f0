// Exact arithmetic in Z[sqrt(2)] with dyadic denominators: (a + b*sqrt2)/2^k.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tv4q {

using BigInt = boost::multiprecision::cpp_int;

class DyadicSqrt2 {
public:
    DyadicSqrt2() = default;
    DyadicSqrt2(BigInt a, BigInt b, unsigned k = 0)
        : a_(std::move(a)), b_(std::move(b)), k_(k) {
        normalize();
    }
    static DyadicSqrt2 integer(BigInt n) { return DyadicSqrt2(std::move(n), 0, 0); }

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    unsigned k() const { return k_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    DyadicSqrt2 operator+(const DyadicSqrt2& o) const {
        unsigned k = std::max(k_, o.k_);
        return DyadicSqrt2(
            (a_ << (k - k_)) + (o.a_ << (k - o.k_)),
            (b_ << (k - k_)) + (o.b_ << (k - o.k_)), k);
    }
    DyadicSqrt2 operator-() const { return DyadicSqrt2(-a_, -b_, k_); }
    DyadicSqrt2 operator-(const DyadicSqrt2& o) const { return *this + (-o); }
    DyadicSqrt2 operator*(const DyadicSqrt2& o) const {
        // (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s
        return DyadicSqrt2(a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_, k_ + o.k_);
    }
    DyadicSqrt2& operator+=(const DyadicSqrt2& o) { return *this = *this + o; }
    DyadicSqrt2& operator*=(const DyadicSqrt2& o) { return *this = *this * o; }

    bool operator==(const DyadicSqrt2& o) const {
        return a_ == o.a_ && b_ == o.b_ && k_ == o.k_;
    }
    bool operator!=(const DyadicSqrt2& o) const { return !(*this == o); }

    DyadicSqrt2 halved(unsigned j = 1) const { return DyadicSqrt2(a_, b_, k_ + j); }

    // z^m for z = +-sqrt(2); m may be negative (z^{-1} = z/2).
    static DyadicSqrt2 z_pow(long m, bool z_negative) {
        bool sign = z_negative && (m & 1);
        long e = m >= 0 ? m : -m;
        BigInt a = 0, b = 0;
        if (e % 2 == 0)
            a = BigInt(1) << static_cast<unsigned>(e / 2);
        else
            b = BigInt(1) << static_cast<unsigned>(e / 2);
        DyadicSqrt2 v(sign ? -a : a, sign ? -b : b, 0);
        if (m < 0) {
            // z^{-e} = z^e / 2^e
            v = DyadicSqrt2(v.a_, v.b_, static_cast<unsigned>(e));
        }
        return v;
    }

    double to_double() const {
        return (a_.convert_to<double>() + b_.convert_to<double>() * 1.4142135623730951) /
               std::ldexp(1.0, static_cast<int>(k_));
    }

    std::string to_string() const {
        std::string s = "(" + a_.str();
        s += (b_ >= 0 ? " + " + b_.str() : " - " + BigInt(-b_).str());
        s += "*sqrt2)";
        if (k_ > 0) s += "/2^" + std::to_string(k_);
        return s;
    }

private:
    void normalize() {
        while (k_ > 0 && (a_ & 1) == 0 && (b_ & 1) == 0) {
            a_ >>= 1;
            b_ >>= 1;
            --k_;
        }
        if (a_ == 0 && b_ == 0) k_ = 0;
    }

    BigInt a_ = 0, b_ = 0;
    unsigned k_ = 0;
};

}  // namespace tv4q
