#pragma once

#include <stdexcept>
#include <utility>

#include "msop/errors.hpp"
#include "msop/polynomial.hpp"

namespace msop {

/// Quotient of two polynomials, stored reduced (common factors removed) with
/// a monic denominator.
class RationalFunction {
public:
    RationalFunction() : den_(Polynomial::constant(1)) {}

    RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1)) {}

    RationalFunction(const Rational& c) : RationalFunction(Polynomial::constant(c)) {}
    RationalFunction(int c) : RationalFunction(Rational(c)) {}

    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) {
            throw std::domain_error("rational function with zero denominator");
        }
        normalize();
    }

    [[nodiscard]] const Polynomial& num() const { return num_; }
    [[nodiscard]] const Polynomial& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_polynomial() const { return den_.degree() == 0; }

    [[nodiscard]] Rational operator()(const Rational& x) const {
        const Rational d = den_(x);
        if (d.is_zero()) {
            throw BracketPole("rational function evaluated at a pole x = " + x.str());
        }
        return num_(x) / d;
    }

    [[nodiscard]] double evaluate(double x) const { return num_.evaluate(x) / den_.evaluate(x); }

    /// R(x + h)
    [[nodiscard]] RationalFunction shifted(const Rational& h) const {
        return RationalFunction(num_.shifted(h), den_.shifted(h), Reduced{});
    }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) {
            return RationalFunction(a.num_ + b.num_, a.den_);
        }
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) {
            throw std::domain_error("division by the zero rational function");
        }
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    /// Cross-multiplied equality num_a * den_b == num_b * den_a.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

private:
    struct Reduced {};

    // Shifting and negation preserve reducedness, so skip the gcd.
    RationalFunction(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(1);
            return;
        }
        if (*den_.degree() > 0 && *num_.degree() > 0) {
            const Polynomial g = gcd(num_, den_);
            if (*g.degree() > 0) {
                num_ = divmod(num_, g).first;
                den_ = divmod(den_, g).first;
            }
        }
        const Rational lead = den_.leading();
        if (lead != Rational(1)) {
            const Rational inv = Rational(1) / lead;
            num_ *= inv;
            den_ *= inv;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

} // namespace msop
