#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ccforge {

/// Exact arbitrary-precision rational number.
///
/// Canonical form is maintained at all times: denominator > 0,
/// gcd(|num|, den) = 1, zero is 0/1. All arithmetic is exact.
class Rat {
public:
    using Int = boost::multiprecision::cpp_int;

    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rat(Int n) : num_(std::move(n)), den_(1) {}

    Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        normalize();
    }

    static Rat of(long long num, long long den) { return Rat(Int(num), Int(den)); }

    /// Parses "p", "-p" or "p/q". Accepts non-canonical input and reduces it.
    static Rat parse(const std::string& text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rat& operator+=(const Rat& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator-=(const Rat& o) { return *this += -o; }
    Rat& operator*=(const Rat& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string str() const;

    double to_double() const;

    /// n! as an exact rational.
    static Rat factorial(unsigned n);

    /// Binomial coefficient C(n, k); zero when k > n.
    static Rat binomial(unsigned n, unsigned k);

private:
    void normalize();

    Int num_;
    Int den_;
};

/// Best rational approximation of x with denominator <= max_den,
/// by continued-fraction convergents/semiconvergents.
Rat rational_round(double x, std::int64_t max_den);

}  // namespace ccforge
