#pragma once

#include <cstddef>
#include <deque>
#include <mutex>
#include <utility>
#include <vector>

#include "msop/difference.hpp"
#include "msop/kernels.hpp"
#include "msop/meixner.hpp"
#include "msop/rational_function.hpp"

namespace msop {

/// Parameters of the discrete Sobolev-type product
///   <p, q>_lambda = <p, q> + lambda D_i^j p(alpha) D_i^j q(alpha).
struct SobolevParams {
    MeixnerParams base;
    Rational lambda;
    std::size_t j = 0;
    Rational alpha;
    OperatorKind kind = OperatorKind::Forward;

    SobolevParams(MeixnerParams base_, Rational lambda_, std::size_t j_, Rational alpha_, OperatorKind kind_)
        : base(std::move(base_)), lambda(std::move(lambda_)), j(j_), alpha(std::move(alpha_)), kind(kind_) {
        if (lambda.sign() < 0) {
            throw InvalidParameter("lambda must be nonnegative, got " + lambda.str());
        }
        if (alpha.sign() > 0) {
            throw InvalidParameter("alpha must be <= 0, got " + alpha.str());
        }
    }

    friend bool operator==(const SobolevParams&, const SobolevParams&) = default;
};

/// Coefficients of Q_n = A_{1,n} M_n + B_{1,n} M_{n-1}, where
///   A_{1,n} = 1 + sum_k a^(k) <x-alpha>^k / <x-alpha>^{j+1}
///   B_{1,n} =     sum_k b^(k) <x-alpha>^k / <x-alpha>^{j+1}.
struct ConnectionData {
    std::vector<Rational> a;  // a^(0) .. a^(j)
    std::vector<Rational> b;  // b^(0) .. b^(j)
    Polynomial bracket;       // <x-alpha>^{j+1}
    Polynomial scaled_a;      // <x-alpha>^{j+1} A_{1,n}
    Polynomial scaled_b;      // <x-alpha>^{j+1} B_{1,n}
    RationalFunction A;
    RationalFunction B;
};

class SobolevFamily {
public:
    explicit SobolevFamily(SobolevParams params) : params_(std::move(params)), meixner_(params_.base) {}

    SobolevFamily(const SobolevFamily&) = delete;
    SobolevFamily& operator=(const SobolevFamily&) = delete;

    [[nodiscard]] const SobolevParams& params() const { return params_; }
    [[nodiscard]] const MeixnerFamily& meixner() const { return meixner_; }

    /// D_i^j M_n evaluated at alpha.
    [[nodiscard]] Rational dj_meixner_at_alpha(std::size_t n) const {
        return difference(meixner_(n), params_.kind, params_.j)(params_.alpha);
    }

    /// K^{(j,j)}_{n-1}(alpha, alpha) via the direct sum; zero for n == 0.
    [[nodiscard]] Rational kernel_jj(std::size_t n) const {
        if (n == 0) {
            return Rational(0);
        }
        return kernel_partial(meixner_, n - 1, params_.j, params_.j, params_.kind, params_.alpha, params_.alpha);
    }

    /// D_i^j Q_n(alpha) = D_i^j M_n(alpha) / (1 + lambda K^{(j,j)}_{n-1}(alpha, alpha))
    [[nodiscard]] Rational dj_q_at_alpha(std::size_t n) const {
        const Rational dm = dj_meixner_at_alpha(n);
        if (dm.is_zero() || params_.lambda.is_zero()) {
            return dm;
        }
        return dm / (Rational(1) + params_.lambda * kernel_jj(n));
    }

    /// Monic Q_n = M_n - lambda D^j Q_n(alpha) K^{(0,j)}_{n-1}(x, alpha); memoized.
    const Polynomial& operator()(std::size_t n) const {
        std::lock_guard lock(mutex_);
        while (cache_.size() <= n) {
            cache_.push_back(build(cache_.size()));
        }
        return cache_[n];
    }

    [[nodiscard]] ConnectionData connection_coeffs(std::size_t n) const;

private:
    [[nodiscard]] Polynomial build(std::size_t n) const {
        const Polynomial& m = meixner_(n);
        if (n == 0 || params_.lambda.is_zero()) {
            return m;
        }
        const Rational dq = dj_q_at_alpha(n);
        if (dq.is_zero()) {
            return m;
        }
        const Polynomial slice = KernelSlice(meixner_, n - 1, 0, params_.j, params_.kind).as_poly_in_x(params_.alpha);
        return m - slice * (params_.lambda * dq);
    }

    SobolevParams params_;
    MeixnerFamily meixner_;
    mutable std::mutex mutex_;
    mutable std::deque<Polynomial> cache_;
};

inline ConnectionData SobolevFamily::connection_coeffs(std::size_t n) const {
    if (n == 0) {
        throw InvalidParameter("connection coefficients need n >= 1");
    }
    const auto& p = params_;
    ConnectionData d;
    d.a.resize(p.j + 1);
    d.b.resize(p.j + 1);
    d.bracket = bracket_polynomial(p.alpha, p.j + 1, p.kind);
    const Rational dm = dj_meixner_at_alpha(n);
    if (!p.lambda.is_zero() && !dm.is_zero()) {
        const Rational common = p.lambda * factorial(p.j) * dm /
                                (squared_norm(p.base, n - 1) * (Rational(1) + p.lambda * kernel_jj(n)));
        for (std::size_t k = 0; k <= p.j; ++k) {
            const Rational inv_fact = Rational(1) / factorial(k);
            d.a[k] = -common * difference(meixner_(n - 1), p.kind, k)(p.alpha) * inv_fact;
            d.b[k] = common * difference(meixner_(n), p.kind, k)(p.alpha) * inv_fact;
        }
    }
    d.scaled_a = d.bracket;
    for (std::size_t k = 0; k <= p.j; ++k) {
        const Polynomial bk = bracket_polynomial(p.alpha, k, p.kind);
        d.scaled_a += bk * d.a[k];
        d.scaled_b += bk * d.b[k];
    }
    d.A = RationalFunction(d.scaled_a, d.bracket);
    d.B = RationalFunction(d.scaled_b, d.bracket);
    return d;
}

/// <p, q> + lambda D^j p(alpha) D^j q(alpha), exact.
inline Rational sobolev_inner_product(const SobolevParams& sp, const Polynomial& p, const Polynomial& q) {
    Rational r = inner_product(sp.base, p, q);
    if (!sp.lambda.is_zero()) {
        r += sp.lambda * difference(p, sp.kind, sp.j)(sp.alpha) * difference(q, sp.kind, sp.j)(sp.alpha);
    }
    return r;
}

inline Rational sobolev_inner_product(const SobolevFamily& fam, const Polynomial& p, const Polynomial& q) {
    return sobolev_inner_product(fam.params(), p, q);
}

/// ||Q_n||_lambda^2 = ||M_n||^2 + b^(j) ||M_{n-1}||^2 (direct product for n == 0).
inline Rational sobolev_norm(const SobolevFamily& fam, std::size_t n) {
    if (n == 0) {
        return sobolev_inner_product(fam, fam(0), fam(0));
    }
    const auto& base = fam.params().base;
    const ConnectionData d = fam.connection_coeffs(n);
    return squared_norm(base, n) + d.b[fam.params().j] * squared_norm(base, n - 1);
}

/// Evaluates Q_n(x) through its 3F2 form
///   (gamma)_{n-1} (mu/(mu-1))^{n-1} h_n(x) 3F2(-n, -x, f_n(x); gamma, f_n(x) - 1; 1 - 1/mu)
/// with h_n = -(mu (gamma+n-1)/(1-mu) A_{1,n} - B_{1,n}) and
///      f_n = n mu (gamma+n-1)/(1-mu) A_{1,n} / B_{1,n} - n + 1.
inline Rational msphr_eval(const SobolevFamily& fam, std::size_t n, const Rational& x) {
    if (n == 0) {
        throw InvalidParameter("3F2 representation needs n >= 1");
    }
    const auto& p = fam.params();
    const auto& base = p.base;
    const ConnectionData d = fam.connection_coeffs(n);
    if (d.B.is_zero()) {
        // lambda = 0 or D^j M_n(alpha) = 0: Q_n = M_n.
        return meixner_hypergeometric(base, n, x);
    }
    const Rational br = d.bracket(x);
    if (br.is_zero()) {
        throw BracketPole("<x - alpha>^{j+1} vanishes at x = " + x.str());
    }
    const Rational A = d.scaled_a(x) / br;
    const Rational B = d.scaled_b(x) / br;
    if (B.is_zero()) {
        throw DegenerateRepresentation("B_{1,n}(x) vanishes at x = " + x.str());
    }
    const Rational nn(static_cast<long>(n));
    const Rational one(1);
    const Rational scale = base.mu * (base.gamma + nn - one) / (one - base.mu);
    const Rational f = nn * scale * A / B - nn + one;
    const Rational h = -(scale * A - B);
    const Rational z = one - one / base.mu;
    Rational term(1);
    Rational sum(1);
    for (std::size_t k = 0; k < n; ++k) {
        const Rational kk(static_cast<long>(k));
        const Rational lower = f - one + kk;
        if (lower.is_zero()) {
            throw DegenerateRepresentation("f_n(x) - 1 + k vanishes at x = " + x.str());
        }
        term *= (-nn + kk) * (-x + kk) * (f + kk) / ((base.gamma + kk) * lower * (kk + one)) * z;
        sum += term;
    }
    return pochhammer(base.gamma, n - 1) * pow(base.mu / (base.mu - one), static_cast<long>(n) - 1) * h * sum;
}

} // namespace msop
