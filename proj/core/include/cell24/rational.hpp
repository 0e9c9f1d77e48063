#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace cell24 {

using Int = mpz_class;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (mpq_class does not canonicalize on construction; this
// wrapper does).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Int& n) : q_(n) {}
    Rational(const Int& num, const Int& den) : q_(num, den) { q_.canonicalize(); }
    Rational(long num, long den) : q_(num, den) { q_.canonicalize(); }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    Int numerator() const { return q_.get_num(); }
    Int denominator() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { q_ /= o.q_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return q_ < 0 ? Rational(mpq_class(-q_)) : *this; }
    Rational inverse() const { return Rational(mpq_class(1) / q_); }

    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

/// Exact square root of a rational, if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& r);

/// Exact square root of a non-negative integer, if it is a perfect square.
std::optional<Int> exact_sqrt(const Int& n);

} // namespace cell24
