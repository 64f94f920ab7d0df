#pragma once

#include <cmath>
#include <cstddef>
#include <deque>
#include <mutex>
#include <utility>

#include "msop/difference.hpp"
#include "msop/errors.hpp"
#include "msop/polynomial.hpp"

namespace msop {

/// Parameters of the Meixner weight mu^x (gamma)_x / x! on x = 0, 1, 2, ...
struct MeixnerParams {
    Rational gamma;
    Rational mu;

    MeixnerParams(Rational gamma_, Rational mu_) : gamma(std::move(gamma_)), mu(std::move(mu_)) {
        if (gamma.sign() <= 0) {
            throw InvalidParameter("gamma must be positive, got " + gamma.str());
        }
        if (mu.sign() <= 0 || mu >= Rational(1)) {
            throw InvalidParameter("mu must lie in (0, 1), got " + mu.str());
        }
    }

    [[nodiscard]] bool exact_norms() const { return gamma.is_integer(); }

    friend bool operator==(const MeixnerParams&, const MeixnerParams&) = default;
};

namespace detail {

inline long gamma_as_integer(const MeixnerParams& p) {
    if (!p.gamma.is_integer()) {
        throw NonIntegerGammaExactPath();
    }
    return p.gamma.num().get_si();
}

} // namespace detail

/// Three-term recurrence coefficients (alpha_n, beta_n) of
///   x M_n = M_{n+1} + alpha_n M_n + beta_n M_{n-1}.
inline std::pair<Rational, Rational> recurrence_coeffs(const MeixnerParams& p, std::size_t n) {
    const Rational nn(static_cast<long>(n));
    const Rational one_minus_mu = Rational(1) - p.mu;
    Rational alpha = (nn * (Rational(1) + p.mu) + p.mu * p.gamma) / one_minus_mu;
    Rational beta = nn * p.mu * (nn + p.gamma - Rational(1)) / (one_minus_mu * one_minus_mu);
    return {std::move(alpha), std::move(beta)};
}

/// Monic Meixner polynomials built by the three-term recurrence and memoized.
/// Safe for concurrent readers: the cache grows under a lock and entries are
/// never moved or modified once created.
class MeixnerFamily {
public:
    explicit MeixnerFamily(MeixnerParams params) : params_(std::move(params)) {}

    MeixnerFamily(const MeixnerFamily&) = delete;
    MeixnerFamily& operator=(const MeixnerFamily&) = delete;

    [[nodiscard]] const MeixnerParams& params() const { return params_; }

    const Polynomial& operator()(std::size_t n) const {
        std::lock_guard lock(mutex_);
        if (cache_.empty()) {
            cache_.push_back(Polynomial::constant(1));
        }
        while (cache_.size() <= n) {
            const std::size_t k = cache_.size() - 1;
            const auto [a, b] = recurrence_coeffs(params_, k);
            Polynomial next = Polynomial::x() * cache_[k] - cache_[k] * a;
            if (k > 0) {
                next -= cache_[k - 1] * b;
            }
            cache_.push_back(std::move(next));
        }
        return cache_[n];
    }

private:
    MeixnerParams params_;
    mutable std::mutex mutex_;
    mutable std::deque<Polynomial> cache_;
};

/// M_n(0) = (gamma)_n (mu / (mu - 1))^n
inline Rational value_at_zero(const MeixnerParams& p, std::size_t n) {
    return pochhammer(p.gamma, n) * pow(p.mu / (p.mu - Rational(1)), static_cast<long>(n));
}

/// Evaluates the terminating series (gamma)_n (mu/(mu-1))^n 2F1(-n, -x; gamma; 1 - 1/mu).
inline Rational meixner_hypergeometric(const MeixnerParams& p, std::size_t n, const Rational& x) {
    const Rational z = Rational(1) - Rational(1) / p.mu;
    const Rational minus_n(-static_cast<long>(n));
    Rational term(1);
    Rational sum(1);
    for (std::size_t k = 0; k < n; ++k) {
        const Rational kk(static_cast<long>(k));
        term *= (minus_n + kk) * (-x + kk) / ((p.gamma + kk) * (kk + Rational(1))) * z;
        sum += term;
    }
    return value_at_zero(p, n) * sum;
}

/// ||M_n||^2 = n! (gamma)_n mu^n / (1 - mu)^(gamma + 2n); integer gamma only.
inline Rational squared_norm(const MeixnerParams& p, std::size_t n) {
    const long g = detail::gamma_as_integer(p);
    return factorial(n) * pochhammer(p.gamma, n) * pow(p.mu, static_cast<long>(n)) *
           pow(Rational(1) - p.mu, -(g + 2 * static_cast<long>(n)));
}

/// sum_x [x]_k mu^x (gamma)_x / x! = (gamma)_k mu^k (1 - mu)^(-gamma - k)
inline Rational factorial_moment(const MeixnerParams& p, std::size_t k) {
    const long g = detail::gamma_as_integer(p);
    return pochhammer(p.gamma, k) * pow(p.mu, static_cast<long>(k)) *
           pow(Rational(1) - p.mu, -(g + static_cast<long>(k)));
}

/// Exact sum_{x >= 0} p(x) q(x) mu^x (gamma)_x / x!, obtained by expanding
/// p q in the falling-factorial basis and contracting with the moments.
inline Rational inner_product(const MeixnerParams& params, const Polynomial& p, const Polynomial& q) {
    detail::gamma_as_integer(params);
    const auto c = to_falling_basis(p * q);
    Rational sum;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k].is_zero()) {
            sum += c[k] * factorial_moment(params, k);
        }
    }
    return sum;
}

/// Truncated direct summation of the weighted sum, valid for any gamma > 0.
/// Stops once both the weight ratio mu (gamma + x) / (x + 1) and the term
/// ratio have dropped below one and the current term is below tol * |sum|.
inline double inner_product_numeric(const MeixnerParams& params, const Polynomial& p, const Polynomial& q,
                                    double tol = 1e-16, std::size_t max_terms = 1'000'000) {
    const double g = params.gamma.to_double();
    const double mu = params.mu.to_double();
    const Polynomial pq = p * q;
    // p q may vanish at up to deg(pq) integers, so a single small term proves nothing.
    const std::size_t needed = pq.degree().value_or(0) + 2;
    double weight = 1.0;
    double sum = 0.0;
    double prev = 0.0;
    std::size_t quiet = 0;
    for (std::size_t x = 0; x < max_terms; ++x) {
        const double xd = static_cast<double>(x);
        const double term = pq.evaluate(xd) * weight;
        sum += term;
        const double ratio = mu * (g + xd) / (xd + 1.0);
        const bool small = x > 0 && ratio < 1.0 && std::abs(term) <= std::abs(prev) &&
                           std::abs(term) <= tol * std::abs(sum);
        quiet = small ? quiet + 1 : 0;
        if (quiet >= needed) {
            break;
        }
        prev = term;
        weight *= ratio;
    }
    return sum;
}

/// (x + gamma delta_{i,1}) D_i M_n - n M_n - n mu^{delta_{i,2}} (n + gamma - 1) / (1 - mu) M_{n-1}
inline Polynomial structure_relation_residual(const MeixnerFamily& fam, std::size_t n, OperatorKind kind) {
    if (n == 0) {
        throw InvalidParameter("structure relation needs n >= 1");
    }
    const auto& p = fam.params();
    const Rational nn(static_cast<long>(n));
    const Polynomial w =
        kind == OperatorKind::Forward ? Polynomial({p.gamma, Rational(1)}) : Polynomial::x();
    const Rational mu_factor = kind == OperatorKind::Backward ? p.mu : Rational(1);
    const Rational e = nn * mu_factor * (nn + p.gamma - Rational(1)) / (Rational(1) - p.mu);
    return w * difference(fam(n), kind) - fam(n) * nn - fam(n - 1) * e;
}

/// D_i^k M_n^{gamma,mu}(x) - [n]_k M_{n-k}^{gamma+k,mu}(x - delta_{i,2} k)
inline Polynomial shift_identity_residual(const MeixnerFamily& fam, std::size_t n, std::size_t k,
                                          OperatorKind kind) {
    if (k > n) {
        throw InvalidParameter("shift identity needs k <= n");
    }
    const auto& p = fam.params();
    const MeixnerFamily raised(MeixnerParams(p.gamma + Rational(static_cast<long>(k)), p.mu));
    Polynomial rhs = raised(n - k);
    if (kind == OperatorKind::Backward) {
        rhs = rhs.shifted(Rational(-static_cast<long>(k)));
    }
    return difference(fam(n), kind, k) - rhs * falling_factorial(Rational(static_cast<long>(n)), k);
}

} // namespace msop
