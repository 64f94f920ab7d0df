#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "msop/rational.hpp"

namespace msop {

/// Dense univariate polynomial over the rationals in the monomial basis.
/// Index k of the coefficient vector holds the coefficient of x^k; trailing
/// zeros are never stored, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
        trim();
    }

    static Polynomial constant(const Rational& value) { return Polynomial({value}); }

    static Polynomial monomial(std::size_t power, const Rational& coefficient = Rational(1)) {
        std::vector<Rational> c(power + 1);
        c[power] = coefficient;
        return Polynomial(std::move(c));
    }

    /// The identity polynomial x.
    static Polynomial x() { return monomial(1); }

    /// x - root
    static Polynomial linear_factor(const Rational& root) { return Polynomial({-root, Rational(1)}); }

    /// Degree, or nullopt for the zero polynomial.
    [[nodiscard]] std::optional<std::size_t> degree() const {
        if (c_.empty()) {
            return std::nullopt;
        }
        return c_.size() - 1;
    }

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

    [[nodiscard]] const Rational& leading() const {
        if (c_.empty()) {
            throw std::logic_error("leading coefficient of the zero polynomial");
        }
        return c_.back();
    }

    [[nodiscard]] Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    [[nodiscard]] std::span<const Rational> coefficients() const { return c_; }

    [[nodiscard]] Rational operator()(const Rational& x) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    [[nodiscard]] double evaluate(double x) const {
        double acc = 0.0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + it->to_double();
        }
        return acc;
    }

    /// p(x + h)
    [[nodiscard]] Polynomial shifted(const Rational& h) const {
        if (h.is_zero() || c_.size() <= 1) {
            return *this;
        }
        // Horner in the ring: acc = acc * (x + h) + c_k.
        std::vector<Rational> acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc.emplace_back();
            for (std::size_t k = acc.size() - 1; k > 0; --k) {
                acc[k] = acc[k - 1] + acc[k] * h;
            }
            acc[0] = acc[0] * h + *it;
        }
        return Polynomial(std::move(acc));
    }

    /// Returns a copy with the leading coefficient scaled to one.
    [[nodiscard]] Polynomial monic() const {
        if (c_.empty()) {
            return *this;
        }
        return *this * (Rational(1) / c_.back());
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& v : r.c_) {
            v = -v;
        }
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] += o.c_[k];
        }
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size());
        }
        for (std::size_t k = 0; k < o.c_.size(); ++k) {
            c_[k] -= o.c_[k];
        }
        trim();
        return *this;
    }

    Polynomial& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) {
            v *= s;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) {
                continue;
            }
            for (std::size_t k = 0; k < b.c_.size(); ++k) {
                r[i + k] += a.c_[i] * b.c_[k];
            }
        }
        return Polynomial(std::move(r));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) {
            c_.pop_back();
        }
    }

    std::vector<Rational> c_;
};

/// Euclidean division: returns (quotient, remainder) with deg r < deg d.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& n, const Polynomial& d) {
    if (d.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    const std::size_t dd = *d.degree();
    std::vector<Rational> rem(n.coefficients().begin(), n.coefficients().end());
    if (rem.size() <= dd) {
        return {Polynomial(), n};
    }
    std::vector<Rational> quot(rem.size() - dd);
    const Rational inv_lead = Rational(1) / d.leading();
    const auto dc = d.coefficients();
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (rem[k].is_zero()) {
            continue;
        }
        const Rational f = rem[k] * inv_lead;
        quot[k - dd] = f;
        for (std::size_t m = 0; m <= dd; ++m) {
            rem[k - dd + m] -= f * dc[m];
        }
    }
    rem.resize(dd);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

namespace detail {

using IntPoly = std::vector<mpz_class>;

inline void make_primitive(IntPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g > 1) {
        for (auto& c : p) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
    }
}

// Primitive integer polynomial proportional to p.
inline IntPoly primitive_part(const Polynomial& p) {
    mpz_class l = 1;
    for (const auto& c : p.coefficients()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    IntPoly r;
    r.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        r.push_back(c.num() * (l / c.den()));
    }
    make_primitive(r);
    return r;
}

// Pseudo-remainder of a by b (deg a >= deg b), in place on a.
inline void pseudo_remainder(IntPoly& a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (a.size() > db && !a.empty()) {
        const mpz_class la = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) {
            c *= lb;
        }
        for (std::size_t m = 0; m <= db; ++m) {
            a[shift + m] -= la * b[m];
        }
        while (!a.empty() && a.back() == 0) {
            a.pop_back();
        }
    }
}

} // namespace detail

/// Monic greatest common divisor; gcd(0, 0) is the zero polynomial.
/// Runs a primitive remainder sequence over the integers.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) {
        return b.monic();
    }
    if (b.is_zero()) {
        return a.monic();
    }
    detail::IntPoly u = detail::primitive_part(a);
    detail::IntPoly v = detail::primitive_part(b);
    if (u.size() < v.size()) {
        std::swap(u, v);
    }
    while (!v.empty()) {
        if (v.size() == 1) {
            return Polynomial::constant(1);
        }
        detail::pseudo_remainder(u, v);
        detail::make_primitive(u);
        std::swap(u, v);
    }
    std::vector<Rational> c;
    c.reserve(u.size());
    for (auto& z : u) {
        c.emplace_back(std::move(z));
    }
    return Polynomial(std::move(c)).monic();
}

} // namespace msop
