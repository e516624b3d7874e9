#pragma once

#include "g2/rational.hpp"

#include <string>

namespace g2 {

/// Element a + b*sqrt(15) of the real quadratic field Q(sqrt 15).
/// Only needed for the irreducible so(3) inside g2, whose compact basis is
/// not rational in the chosen frame (the mixing ratio 5/3 is not a norm
/// from Q(i), so no rational basis exists in any diagonal Cartan gauge).
class QuadExt {
public:
    static constexpr long radicand = 15;

    QuadExt() = default;
    QuadExt(int n) : a_(n) {}
    QuadExt(long n) : a_(n) {}
    QuadExt(Rational a) : a_(std::move(a)) {}
    QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadExt sqrt15() { return QuadExt(Rational(0), Rational(1)); }

    const Rational& rat() const { return a_; }
    const Rational& irr() const { return b_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExt operator-() const { return QuadExt(-a_, -b_); }
    QuadExt& operator+=(const QuadExt& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadExt& operator-=(const QuadExt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadExt& operator*=(const QuadExt& o) {
        Rational na = a_ * o.a_ + Rational(radicand) * b_ * o.b_;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = na; b_ = nb;
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) {
        // (a+bs)/(c+ds) = (a+bs)(c-ds)/(c^2-15d^2); denominator nonzero since
        // 15 is not a rational square
        Rational n = o.a_ * o.a_ - Rational(radicand) * o.b_ * o.b_;
        if (n.is_zero()) throw std::domain_error("QuadExt: division by zero");
        QuadExt conj(o.a_, -o.b_);
        *this *= conj;
        a_ /= n; b_ /= n;
        return *this;
    }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s = a_.is_zero() ? "" : a_.str();
        if (!s.empty() && b_.sgn() > 0) s += "+";
        s += b_.str() + "*sqrt(15)";
        return s;
    }

private:
    Rational a_, b_;
};

}  // namespace g2
