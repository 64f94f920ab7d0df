#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "msop/difference.hpp"
#include "msop/hypergeometric.hpp"
#include "msop/meixner.hpp"

namespace msop {

/// K_n(x, y) = sum_{k <= n} M_k(x) M_k(y) / ||M_k||^2
inline Rational kernel_sum(const MeixnerFamily& fam, std::size_t n, const Rational& x, const Rational& y) {
    Rational sum;
    for (std::size_t k = 0; k <= n; ++k) {
        sum += fam(k)(x) * fam(k)(y) / squared_norm(fam.params(), k);
    }
    return sum;
}

/// Christoffel-Darboux quotient
///   (M_{n+1}(x) M_n(y) - M_{n+1}(y) M_n(x)) / (||M_n||^2 (x - y)).
inline Rational kernel_cd(const MeixnerFamily& fam, std::size_t n, const Rational& x, const Rational& y) {
    if (x == y) {
        throw ConfluentPoint();
    }
    const Polynomial& next = fam(n + 1);
    const Polynomial& cur = fam(n);
    return (next(x) * cur(y) - next(y) * cur(x)) / (squared_norm(fam.params(), n) * (x - y));
}

/// sum_{k <= n} D^l M_k(x) D^j M_k(y) / ||M_k||^2 by direct differencing.
inline Rational kernel_partial(const MeixnerFamily& fam, std::size_t n, std::size_t l, std::size_t j,
                               OperatorKind kind, const Rational& x, const Rational& y) {
    Rational sum;
    for (std::size_t k = std::max(l, j); k <= n; ++k) {
        sum += difference(fam(k), kind, l)(x) * difference(fam(k), kind, j)(y) / squared_norm(fam.params(), k);
    }
    return sum;
}

/// The partial-difference kernel with y frozen, as a polynomial in x.
class KernelSlice {
public:
    KernelSlice(const MeixnerFamily& fam, std::size_t n, std::size_t l, std::size_t j, OperatorKind kind)
        : fam_(fam), n_(n), l_(l), j_(j), kind_(kind) {}

    /// sum_{k <= n} D^l M_k(x) (D^j M_k)(y) / ||M_k||^2 as a polynomial in x
    [[nodiscard]] Polynomial as_poly_in_x(const Rational& y) const {
        Polynomial r;
        for (std::size_t k = std::max(l_, j_); k <= n_; ++k) {
            const Rational coeff = difference(fam_(k), kind_, j_)(y) / squared_norm(fam_.params(), k);
            if (!coeff.is_zero()) {
                r += difference(fam_(k), kind_, l_) * coeff;
            }
        }
        return r;
    }

private:
    const MeixnerFamily& fam_;
    std::size_t n_;
    std::size_t l_;
    std::size_t j_;
    OperatorKind kind_;
};

/// Closed form of K^{(0,j)}_{n-1}(x, alpha):
///   j! / (||M_{n-1}||^2 <x-alpha>^{j+1}) *
///   ( M_n(x) sum_k D^k M_{n-1}(alpha) <x-alpha>^k / k!
///   - M_{n-1}(x) sum_k D^k M_n(alpha) <x-alpha>^k / k! )
inline Rational kernel_0j_closed(const MeixnerFamily& fam, std::size_t n, std::size_t j, OperatorKind kind,
                                 const Rational& x, const Rational& alpha) {
    if (n == 0) {
        throw InvalidParameter("closed kernel form needs n >= 1");
    }
    const Rational h = x - alpha;
    const Rational denom_bracket = bracket(h, j + 1, kind);
    if (denom_bracket.is_zero()) {
        throw BracketPole("<x - alpha>^{j+1} vanishes at x = " + x.str());
    }
    const Polynomial& cur = fam(n);
    const Polynomial& prev = fam(n - 1);
    Rational taylor_prev;
    Rational taylor_cur;
    for (std::size_t k = 0; k <= j; ++k) {
        const Rational w = bracket(h, k, kind) / factorial(k);
        taylor_prev += difference(prev, kind, k)(alpha) * w;
        taylor_cur += difference(cur, kind, k)(alpha) * w;
    }
    return factorial(j) / (squared_norm(fam.params(), n - 1) * denom_bracket) *
           (cur(x) * taylor_prev - prev(x) * taylor_cur);
}

/// Closed form of K^{(j,j)}_{n-1}(0, 0) for the forward operator:
///   j! (1-mu)^{gamma+2j} / (mu^j (gamma)_j) sum_{k=0}^{n-j-1} (j+1)_k (gamma+j)_k mu^k / ((1)_k k!)
inline Rational kernel_jj_00_closed(const MeixnerParams& p, std::size_t n, std::size_t j) {
    const long g = detail::gamma_as_integer(p);
    if (n <= j) {
        return Rational(0);
    }
    const Rational prefactor = factorial(j) * pow(Rational(1) - p.mu, g + 2 * static_cast<long>(j)) /
                               (pow(p.mu, static_cast<long>(j)) * pochhammer(p.gamma, j));
    const Rational jj(static_cast<long>(j));
    Rational term(1);
    Rational sum;
    for (std::size_t k = 0; k + j + 1 <= n; ++k) {
        sum += term;
        const Rational kk(static_cast<long>(k));
        term *= (jj + Rational(1) + kk) * (p.gamma + jj + kk) * p.mu / ((kk + Rational(1)) * (kk + Rational(1)));
    }
    return prefactor * sum;
}

/// lim_{n -> inf} K^{(j,j)}_{n-1}(0,0) = j! (1-mu)^{gamma+2j} / (mu^j (gamma)_j) 2F1(j+1, j+gamma; 1; mu)
inline double kernel_jj_00_limit(const MeixnerParams& p, std::size_t j, double tol = 1e-16) {
    const double mu = p.mu.to_double();
    const double g = p.gamma.to_double();
    const double jd = static_cast<double>(j);
    const double prefactor = std::tgamma(jd + 1.0) * std::pow(1.0 - mu, g + 2.0 * jd) /
                             (std::pow(mu, jd) * pochhammer(p.gamma, j).to_double());
    const Rational jj(static_cast<long>(j));
    return prefactor * gauss_2f1(jj + Rational(1), jj + p.gamma, Rational(1), mu, tol);
}

} // namespace msop
