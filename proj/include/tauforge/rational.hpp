#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace tauforge {

// Arbitrary-precision rational. Invariants: gcd(|num|, den) = 1, den > 0,
// zero is 0/1. Serialized as "a/b" with "/1" omitted.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design (1, -1, 1/k! factors)
    Rational(long num, long den);
    explicit Rational(mpq_class v);
    Rational(mpz_class num, mpz_class den);

    // Parses "a/b" or "a"; throws std::invalid_argument on malformed input.
    static Rational parse(const std::string& s);

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }
    // x^e for integer e; e < 0 requires x != 0.
    Rational pow(long e) const;

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Requires an integer value fitting in long.
    long to_long() const;

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational abs(const Rational& r) { return r.abs(); }

long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace tauforge
