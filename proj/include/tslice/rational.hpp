#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <string>

#include "tslice/error.hpp"

namespace tslice {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Always normalized: gcd(num, den) = 1, den > 0.
// Backed by arbitrary-precision integers so no intermediate sum can overflow.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(BigInt num, BigInt den) {
        if (den == 0) throw Error("Rational: zero denominator");
        if (den < 0) { // cpp_rational insists on a positive denominator
            num = -num;
            den = -den;
        }
        v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }

    long long num_ll() const { return checked_ll(numerator(), "numerator"); }
    long long den_ll() const { return checked_ll(denominator(), "denominator"); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }

    // "3", "-1/2"
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    // always "num/den", e.g. "3/1"
    std::string str_slash() const { return numerator().str() + "/" + denominator().str(); }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    static long long checked_ll(const BigInt& v, const char* what) {
        if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
            throw Error(std::string("Rational: ") + what + " out of 64-bit range");
        return v.convert_to<long long>();
    }

    boost::multiprecision::cpp_rational v_;
};

} // namespace tslice
