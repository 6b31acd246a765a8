#include "hsalg/scalar.hpp"

#include <ostream>

namespace hsalg {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("division by zero in rational construction");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.v_ == 0) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (v_ == 0 && e < 0) throw DomainError("zero to a negative power");
    Rational base = *this;
    if (e < 0) {
        base = Rational(1) / base;
        e = -e;
    }
    Rational acc(1);
    for (long i = 0; i < e; ++i) acc *= base;
    return acc;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + s + "'");
    if (v.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

bool is_squarefree(long d) {
    if (d <= 0) return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

Scalar::Scalar(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) {
    if (d_ != 0) {
        if (!is_squarefree(d_) || d_ == 1)
            throw FieldError("quadratic discriminant must be squarefree and > 1, got " +
                             std::to_string(d_));
    }
    normalize();
}

void Scalar::normalize() {
    if (b_.is_zero()) d_ = 0;
}

long Scalar::unify(long d1, long d2) {
    if (d1 == 0) return d2;
    if (d2 == 0) return d1;
    if (d1 != d2)
        throw FieldError("field mismatch: Q(sqrt(" + std::to_string(d1) + ")) vs Q(sqrt(" +
                         std::to_string(d2) + "))");
    return d1;
}

const Rational& Scalar::to_rational() const {
    if (d_ != 0) throw FieldError("scalar is not rational: " + str());
    return a_;
}

Scalar Scalar::conjugate() const {
    Scalar s = *this;
    s.b_ = -s.b_;
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.a_ = -s.a_;
    s.b_ = -s.b_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = unify(d_, o.d_);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = unify(d_, o.d_);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    long d = unify(d_, o.d_);
    Rational a = a_ * o.a_;
    if (d != 0) a += b_ * o.b_ * Rational(d);
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    long d = unify(d_, o.d_);
    if (o.d_ == 0) {
        a_ /= o.a_;
        b_ /= o.a_;
        d_ = d;
        normalize();
        return *this;
    }
    // Multiply by the conjugate; the norm a^2 - d b^2 of a nonzero element is
    // nonzero since sqrt(d) is irrational.
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(o.d_);
    Scalar conj = o.conjugate();
    *this *= conj;
    a_ /= norm;
    b_ /= norm;
    normalize();
    return *this;
}

std::string Scalar::str() const {
    if (d_ == 0) return a_.str();
    std::string out;
    if (!a_.is_zero()) out += a_.str();
    std::string bs = b_.str();
    if (bs == "1")
        bs.clear();
    else if (bs == "-1")
        bs = "-";
    else
        bs += "*";
    if (!out.empty() && b_.sign() > 0) out += "+";
    out += bs + "sqrt" + std::to_string(d_);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

}  // namespace hsalg
