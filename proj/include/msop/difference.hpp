#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "msop/errors.hpp"
#include "msop/polynomial.hpp"
#include "msop/rational_function.hpp"

namespace msop {

/// Which finite difference is meant: forward f(x+1)-f(x) or backward f(x)-f(x-1).
enum class OperatorKind { Forward = 1, Backward = 2 };

/// Direction of the shift that accompanies the operator: +1 forward, -1 backward.
constexpr int step(OperatorKind kind) { return kind == OperatorKind::Forward ? 1 : -1; }

constexpr std::string_view to_string(OperatorKind kind) {
    return kind == OperatorKind::Forward ? "forward" : "backward";
}

inline OperatorKind parse_operator_kind(std::string_view s) {
    if (s == "forward" || s == "1") {
        return OperatorKind::Forward;
    }
    if (s == "backward" || s == "2") {
        return OperatorKind::Backward;
    }
    throw InvalidParameter("operator must be 'forward' or 'backward'");
}

/// Rising factorial (x)_n = x(x+1)...(x+n-1).
inline Rational pochhammer(const Rational& x, std::size_t n) {
    Rational r(1);
    for (std::size_t k = 0; k < n; ++k) {
        r *= x + Rational(static_cast<long>(k));
    }
    return r;
}

/// Falling factorial [x]_n = x(x-1)...(x-n+1).
inline Rational falling_factorial(const Rational& x, std::size_t n) {
    Rational r(1);
    for (std::size_t k = 0; k < n; ++k) {
        r *= x - Rational(static_cast<long>(k));
    }
    return r;
}

/// <x>_i^n: falling factorial for the forward operator, rising for backward.
inline Rational bracket(const Rational& x, std::size_t n, OperatorKind kind) {
    return kind == OperatorKind::Forward ? falling_factorial(x, n) : pochhammer(x, n);
}

/// <x - alpha>_i^n as a polynomial in x.
inline Polynomial bracket_polynomial(const Rational& alpha, std::size_t n, OperatorKind kind) {
    Polynomial r = Polynomial::constant(1);
    const long s = step(kind);
    for (std::size_t k = 0; k < n; ++k) {
        // forward: (x - alpha - k); backward: (x - alpha + k)
        r *= Polynomial::linear_factor(alpha + Rational(s * static_cast<long>(k)));
    }
    return r;
}

/// Single application of the forward or backward difference.
inline Polynomial difference(const Polynomial& p, OperatorKind kind) {
    if (kind == OperatorKind::Forward) {
        return p.shifted(1) - p;
    }
    return p - p.shifted(-1);
}

/// D_i^order p; order 0 is the identity.
inline Polynomial difference(const Polynomial& p, OperatorKind kind, std::size_t order) {
    Polynomial r = p;
    for (std::size_t k = 0; k < order && !r.is_zero(); ++k) {
        r = difference(r, kind);
    }
    return r;
}

inline RationalFunction difference(const RationalFunction& f, OperatorKind kind) {
    if (kind == OperatorKind::Forward) {
        return f.shifted(1) - f;
    }
    return f - f.shifted(-1);
}

/// Coefficients c_k with p(x) = sum_k c_k [x]_k (Newton forward-difference
/// series at 0: c_k = Delta^k p(0) / k!).
inline std::vector<Rational> to_falling_basis(const Polynomial& p) {
    std::vector<Rational> c;
    Polynomial d = p;
    for (std::size_t k = 0; !d.is_zero(); ++k) {
        c.push_back(d(Rational(0)) / factorial(k));
        d = difference(d, OperatorKind::Forward);
    }
    return c;
}

inline Polynomial from_falling_basis(const std::vector<Rational>& c) {
    Polynomial r;
    Polynomial basis = Polynomial::constant(1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        r += basis * c[k];
        basis *= Polynomial::linear_factor(Rational(static_cast<long>(k)));
    }
    return r;
}

/// Discrete Leibniz rule
///   D_i^n (f g)(x) = sum_k C(n,k) D_i^k f(x) (D_i^{n-k} g)(x +- k)
/// with + for the forward operator and - for the backward one.
inline Polynomial leibniz_difference(const Polynomial& f, const Polynomial& g, OperatorKind kind,
                                     std::size_t n) {
    Polynomial r;
    const long s = step(kind);
    for (std::size_t k = 0; k <= n; ++k) {
        const Polynomial dg = difference(g, kind, n - k).shifted(Rational(s * static_cast<long>(k)));
        r += binomial(n, k) * (difference(f, kind, k) * dg);
    }
    return r;
}

} // namespace msop
