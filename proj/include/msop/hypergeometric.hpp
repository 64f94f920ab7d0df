#pragma once

#include <cmath>
#include <cstddef>

#include "msop/errors.hpp"
#include "msop/rational.hpp"

namespace msop {

namespace detail {

inline void check_2f1_c(const Rational& c) {
    if (c.sign() <= 0 && c.is_integer()) {
        throw InvalidC("2F1 lower parameter c = " + c.str() + " is a nonpositive integer");
    }
}

} // namespace detail

/// Gauss series 2F1(a, b; c; z) summed in floating point until
/// |term| < tol * |sum|. Requires |z| < 1.
inline double gauss_2f1(const Rational& a, const Rational& b, const Rational& c, double z, double tol = 1e-16,
                        std::size_t max_terms = 1'000'000) {
    detail::check_2f1_c(c);
    if (!(std::abs(z) < 1.0)) {
        throw DivergentParameters("2F1 series diverges for |z| >= 1");
    }
    const double ad = a.to_double();
    const double bd = b.to_double();
    const double cd = c.to_double();
    double term = 1.0;
    double sum = 1.0;
    for (std::size_t k = 0; k < max_terms; ++k) {
        const double kd = static_cast<double>(k);
        term *= (ad + kd) * (bd + kd) / ((cd + kd) * (kd + 1.0)) * z;
        sum += term;
        if (term == 0.0) {
            break;
        }
        // Stop only once the terms are shrinking, otherwise early terms of a
        // slowly starting series could trip the criterion.
        if (std::abs(term) < tol * std::abs(sum) &&
            std::abs((ad + kd + 1.0) * (bd + kd + 1.0) / ((cd + kd + 1.0) * (kd + 2.0)) * z) < 1.0) {
            break;
        }
    }
    return sum;
}

/// Exact partial sum of the first `terms` terms (k = 0 .. terms-1) of 2F1.
inline Rational gauss_2f1_partial(const Rational& a, const Rational& b, const Rational& c, const Rational& z,
                                  std::size_t terms) {
    detail::check_2f1_c(c);
    Rational term(1);
    Rational sum;
    for (std::size_t k = 0; k < terms; ++k) {
        sum += term;
        const Rational kk(static_cast<long>(k));
        term *= (a + kk) * (b + kk) / ((c + kk) * (kk + Rational(1))) * z;
    }
    return sum;
}

} // namespace msop
