#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hsalg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FieldError : Error {
    using Error::Error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

using BigInt = mpz_class;

/// Arbitrary-precision rational, always stored normalized (gcd 1, positive
/// denominator, zero is 0/1).
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational parse(const std::string& s);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational pow(long e) const;

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

bool is_squarefree(long d);

/// Element of Q or of a real quadratic extension Q(sqrt(d)): a + b*sqrt(d).
/// disc() == 0 encodes the rational subfield; values with b == 0 are always
/// normalized back to disc 0, so arithmetic freely mixes Q into any Q(sqrt(d)).
class Scalar {
  public:
    Scalar() = default;
    Scalar(long n) : a_(n) {}
    Scalar(const Rational& r) : a_(r) {}
    Scalar(const Rational& a, const Rational& b, long d);

    static Scalar sqrt_of(long d) { return Scalar(Rational(0), Rational(1), d); }

    const Rational& rat_part() const { return a_; }
    const Rational& quad_part() const { return b_; }
    long disc() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return d_ == 0 && a_.is_one(); }
    bool is_rational() const { return d_ == 0; }

    /// Rational value of a disc-0 scalar; throws otherwise.
    const Rational& to_rational() const;

    Scalar conjugate() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.d_ == b.d_ && a.a_ == b.a_ && a.b_ == b.b_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "p/q" for rationals, "p/q+r/s*sqrt(d)" otherwise.
    std::string str() const;

  private:
    // Throws FieldError when the discriminants are distinct and both nonzero;
    // returns the common field otherwise.
    static long unify(long d1, long d2);
    void normalize();

    Rational a_, b_;
    long d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hsalg
