// Arbitrary-precision rational numbers, the ground field for everything else.
#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qsuper {

struct field_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exact rational p/q with gcd(|p|,q)=1 and q>0, backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) { require_nonzero_den(); v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) { require_nonzero_den(); v_.canonicalize(); }
    explicit Rational(const mpq_class& v) : v_(v) { require_nonzero_den(); v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". Throws field_error on malformed input or q=0.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw field_error("division by zero");
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
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inv() const {
        if (is_zero()) throw field_error("division by zero");
        return Rational(mpq_class(1) / v_);
    }

    /// q^e for any integer e (e<0 inverts; 0^e with e<0 throws).
    Rational pow(long e) const;

    /// Canonical rendering "p/q" (denominator always printed), bit-exact in reports.
    std::string str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    void require_nonzero_den() {
        if (sgn(v_.get_den()) == 0) throw field_error("division by zero");
    }
    mpq_class v_;
};

} // namespace qsuper
