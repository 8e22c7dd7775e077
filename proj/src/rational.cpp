#include "tauforge/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace tauforge {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational::Rational(mpz_class num, mpz_class den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(std::move(num));
    v_ /= mpq_class(std::move(den));
}

Rational Rational::parse(const std::string& s) {
    mpq_class v;
    if (s.empty() || v.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rational: negative power of zero");
        return Rational(0);
    }
    const unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), ue);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), ue);
    return e > 0 ? Rational(n, d) : Rational(d, n);
}

long Rational::to_long() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
    if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rational: out of long range");
    return v_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_long(a, b) * b;
}

}  // namespace tauforge
