#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "msop/errors.hpp"
#include "msop/meixner.hpp"
#include "msop/sobolev.hpp"

namespace msop {

/// A real number carried as sign * exp(log_abs); sign 0 encodes zero.
struct SignedLog {
    int sign = 0;
    double log_abs = -std::numeric_limits<double>::infinity();

    static SignedLog from(double v) {
        if (v == 0.0) {
            return {};
        }
        return {v > 0 ? 1 : -1, std::log(std::abs(v))};
    }

    [[nodiscard]] double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

    friend SignedLog operator*(const SignedLog& a, const SignedLog& b) {
        if (a.sign == 0 || b.sign == 0) {
            return {};
        }
        return {a.sign * b.sign, a.log_abs + b.log_abs};
    }

    friend SignedLog operator/(const SignedLog& a, const SignedLog& b) {
        if (b.sign == 0) {
            throw std::domain_error("SignedLog division by zero");
        }
        if (a.sign == 0) {
            return {};
        }
        return {a.sign * b.sign, a.log_abs - b.log_abs};
    }

    SignedLog operator-() const { return {-sign, log_abs}; }

    friend SignedLog operator+(const SignedLog& a, const SignedLog& b) {
        if (a.sign == 0) {
            return b;
        }
        if (b.sign == 0) {
            return a;
        }
        const SignedLog& big = a.log_abs >= b.log_abs ? a : b;
        const SignedLog& small = a.log_abs >= b.log_abs ? b : a;
        const double r = std::exp(small.log_abs - big.log_abs);
        const double m = big.sign == small.sign ? 1.0 + r : 1.0 - r;
        if (m == 0.0) {
            return {};
        }
        return {big.sign, big.log_abs + std::log(m)};
    }
};

/// log|Gamma(z)| with the sign of Gamma(z); z must not be a nonpositive integer.
inline SignedLog log_gamma(double z) {
    if (z <= 0.0 && z == std::floor(z)) {
        throw PoleAtNonnegativeInteger("Gamma has a pole at z = " + std::to_string(z));
    }
    int sign = 1;
    if (z < 0.0) {
        sign = static_cast<long>(std::ceil(-z)) % 2 == 0 ? 1 : -1;
    }
    return {sign, std::lgamma(z)};
}

/// M_{n-1}(x) and M_n(x) in floating point from the three-term recurrence,
/// rescaled whenever magnitudes exceed 1e100. Both share the scale factor.
struct ScaledPair {
    double prev = 0.0;
    double cur = 1.0;
    double log_scale = 0.0;

    [[nodiscard]] SignedLog current() const {
        SignedLog s = SignedLog::from(cur);
        s.log_abs += log_scale;
        return s;
    }
    [[nodiscard]] SignedLog previous() const {
        SignedLog s = SignedLog::from(prev);
        s.log_abs += log_scale;
        return s;
    }
};

inline ScaledPair meixner_scaled(const MeixnerParams& p, std::size_t n, double x) {
    const double g = p.gamma.to_double();
    const double mu = p.mu.to_double();
    ScaledPair r;
    for (std::size_t k = 0; k < n; ++k) {
        const double kd = static_cast<double>(k);
        const double a = (kd * (1.0 + mu) + mu * g) / (1.0 - mu);
        const double b = kd * mu * (kd + g - 1.0) / ((1.0 - mu) * (1.0 - mu));
        const double next = (x - a) * r.cur - b * r.prev;
        r.prev = r.cur;
        r.cur = next;
        const double m = std::max(std::abs(r.cur), std::abs(r.prev));
        if (m > 1e100) {
            r.cur /= m;
            r.prev /= m;
            r.log_scale += std::log(m);
        }
    }
    return r;
}

/// Floating-point M_n(x) (may overflow for large n; use meixner_scaled there).
inline double meixner_float(const MeixnerParams& p, std::size_t n, double x) {
    return meixner_scaled(p, n, x).current().value();
}

namespace detail {

inline void check_mh_point(double x) {
    if (x >= 0.0 && x == std::floor(x)) {
        throw PoleAtNonnegativeInteger("x = " + std::to_string(x) + " is a zero of 1/Gamma(-x)");
    }
}

/// (mu - 1)^n / Gamma(n - x) in log form.
inline SignedLog mh_scale(const MeixnerParams& p, std::size_t n, double x) {
    const double mu = p.mu.to_double();
    SignedLog s{n % 2 == 0 ? 1 : -1, static_cast<double>(n) * std::log(1.0 - mu)};
    return s / log_gamma(static_cast<double>(n) - x);
}

/// 1 / ((1 - mu)^(gamma + x) Gamma(-x))
inline SignedLog mh_limit(const MeixnerParams& p, double x) {
    const double mu = p.mu.to_double();
    const double g = p.gamma.to_double();
    return SignedLog{1, -(g + x) * std::log(1.0 - mu)} / log_gamma(-x);
}

inline void check_regime(const SobolevParams& sp) {
    if (sp.kind != OperatorKind::Forward || !sp.alpha.is_zero()) {
        throw UnsupportedRegime("Mehler-Heine asymptotics are available only for the forward operator at alpha = 0");
    }
}

inline double log_falling(double n, std::size_t k) {
    return std::lgamma(n + 1.0) - std::lgamma(n - static_cast<double>(k) + 1.0);
}

} // namespace detail

/// One sample of the Mehler-Heine comparison.
struct MHRow {
    std::size_t n = 0;
    double x = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

inline MHRow mh_row_meixner(const MeixnerParams& p, std::size_t n, double x) {
    detail::check_mh_point(x);
    const SignedLog lhs = detail::mh_scale(p, n, x) * meixner_scaled(p, n, x).current();
    const SignedLog rhs = detail::mh_limit(p, x);
    return {n, x, lhs.value(), rhs.value(), (lhs / rhs).value()};
}

/// [(mu-1)^n M_n(x) / Gamma(n-x)] / [1 / ((1-mu)^(gamma+x) Gamma(-x))]
inline double mh_ratio_meixner(const MeixnerParams& p, std::size_t n, double x) {
    return mh_row_meixner(p, n, x).ratio;
}

/// Connection coefficients a^(k)_{1,n}, b^(k)_{1,n} for alpha = 0 and the
/// forward operator, evaluated in log space from the closed product forms of
/// D^k M_n(0), ||M_{n-1}||^2 and K^{(j,j)}_{n-1}(0,0).
struct FloatConnection {
    std::vector<SignedLog> a;
    std::vector<SignedLog> b;
};

inline FloatConnection float_connection(const SobolevParams& sp, std::size_t n) {
    detail::check_regime(sp);
    const std::size_t j = sp.j;
    FloatConnection c;
    c.a.assign(j + 1, SignedLog{});
    c.b.assign(j + 1, SignedLog{});
    if (n == 0 || sp.lambda.is_zero() || n < j) {
        return c;
    }
    const double g = sp.base.gamma.to_double();
    const double mu = sp.base.mu.to_double();
    const double log_ratio = std::log(mu) - std::log(1.0 - mu);  // log|mu / (mu - 1)|

    // D^k M_m(0) = [m]_k (gamma+k)_{m-k} (mu/(mu-1))^{m-k}
    const auto dk_at_zero = [&](std::size_t m, std::size_t k) -> SignedLog {
        if (k > m) {
            return {};
        }
        const double md = static_cast<double>(m);
        const double kd = static_cast<double>(k);
        const double la = detail::log_falling(md, k) + std::lgamma(g + md) - std::lgamma(g + kd) +
                          (md - kd) * log_ratio;
        return {(m - k) % 2 == 0 ? 1 : -1, la};
    };

    const double nd = static_cast<double>(n);
    const double jd = static_cast<double>(j);
    const double log_norm_prev = std::lgamma(nd) + std::lgamma(g + nd - 1.0) - std::lgamma(g) +
                                 (nd - 1.0) * std::log(mu) - (g + 2.0 * nd - 2.0) * std::log(1.0 - mu);

    // K^{(j,j)}_{n-1}(0,0) as prefactor * sum_m (j+1)_m (gamma+j)_m mu^m / (m!)^2
    SignedLog kernel;
    if (n > j) {
        const double log_pref = std::lgamma(jd + 1.0) + (g + 2.0 * jd) * std::log(1.0 - mu) - jd * std::log(mu) -
                                (std::lgamma(g + jd) - std::lgamma(g));
        SignedLog sum;
        for (std::size_t m = 0; m + j + 1 <= n; ++m) {
            const double md = static_cast<double>(m);
            const double lt = std::lgamma(jd + 1.0 + md) - std::lgamma(jd + 1.0) + std::lgamma(g + jd + md) -
                              std::lgamma(g + jd) + md * std::log(mu) - 2.0 * std::lgamma(md + 1.0);
            sum = sum + SignedLog{1, lt};
        }
        kernel = SignedLog{1, log_pref} * sum;
    }
    const SignedLog lambda{1, std::log(sp.lambda.to_double())};
    const SignedLog denom = SignedLog{1, 0.0} + lambda * kernel;
    const SignedLog common = lambda * SignedLog{1, std::lgamma(jd + 1.0)} * dk_at_zero(n, j) /
                             (SignedLog{1, log_norm_prev} * denom);
    for (std::size_t k = 0; k <= j; ++k) {
        const SignedLog inv_fact{1, -std::lgamma(static_cast<double>(k) + 1.0)};
        c.a[k] = -(common * dk_at_zero(n - 1, k) * inv_fact);
        c.b[k] = common * dk_at_zero(n, k) * inv_fact;
    }
    return c;
}

/// A_{1,n}(x) and B_{1,n}(x) at alpha = 0 in log form.
inline std::pair<SignedLog, SignedLog> float_connection_values(const SobolevParams& sp, std::size_t n, double x) {
    const FloatConnection c = float_connection(sp, n);
    const std::size_t j = sp.j;
    // [x]_k / [x]_{j+1} = 1 / prod_{m=k}^{j} (x - m)
    std::vector<SignedLog> inv_tail(j + 2, SignedLog{1, 0.0});
    for (std::size_t m = j + 1; m-- > 0;) {
        inv_tail[m] = inv_tail[m + 1] / SignedLog::from(x - static_cast<double>(m));
    }
    SignedLog A{1, 0.0};
    SignedLog B;
    for (std::size_t k = 0; k <= j; ++k) {
        A = A + c.a[k] * inv_tail[k];
        B = B + c.b[k] * inv_tail[k];
    }
    return {A, B};
}

inline MHRow mh_row_sobolev(const SobolevParams& sp, std::size_t n, double x, std::size_t exact_threshold = 40) {
    detail::check_regime(sp);
    detail::check_mh_point(x);
    const auto& p = sp.base;
    SignedLog lhs;
    if (sp.lambda.is_zero() || n <= sp.j) {
        // K^{(0,j)}_{n-1}(x, 0) vanishes for n <= j, so Q_n = M_n.
        return mh_row_meixner(p, n, x);
    }
    if (n <= exact_threshold && p.exact_norms()) {
        const SobolevFamily fam(sp);
        lhs = detail::mh_scale(p, n, x) * SignedLog::from(fam(n)(Rational::from_double(x)).to_double());
    } else {
        const auto [A, B] = float_connection_values(sp, n, x);
        const ScaledPair m = meixner_scaled(p, n, x);
        lhs = detail::mh_scale(p, n, x) * (A * m.current() + B * m.previous());
    }
    const SignedLog rhs = detail::mh_limit(p, x);
    return {n, x, lhs.value(), rhs.value(), (lhs / rhs).value()};
}

/// Same ratio as mh_ratio_meixner with Q_n^{1,lambda} in place of M_n.
inline double mh_ratio_sobolev(const SobolevParams& sp, std::size_t n, double x, std::size_t exact_threshold = 40) {
    return mh_row_sobolev(sp, n, x, exact_threshold).ratio;
}

/// Ratio curves for a fixed x over a list of degrees.
struct MHSeries {
    SobolevParams params;
    double x = 0.0;
    std::vector<MHRow> rows;
};

inline MHSeries mh_series(const SobolevParams& sp, double x, const std::vector<std::size_t>& degrees) {
    MHSeries s{sp, x, {}};
    for (const std::size_t n : degrees) {
        s.rows.push_back(mh_row_sobolev(sp, n, x));
    }
    return s;
}

/// Rows (n, first, second) of the two sequences
///   (gamma)_n [n]_j [n-1]_k mu^n / (n-1)!   and
///   (gamma)_n [n]_j [n]_k (n+gamma-1) mu^(n+1) / (n-1)!
/// for n = 1 .. n_max, evaluated in log space.
struct LemmaRow {
    std::size_t n = 0;
    double first = 0.0;
    double second = 0.0;
};

inline std::vector<LemmaRow> limit_lemma_sequences(const MeixnerParams& p, std::size_t j, std::size_t k,
                                                   std::size_t n_max) {
    if (k > j) {
        throw InvalidParameter("limit lemma needs k <= j");
    }
    const double g = p.gamma.to_double();
    const double mu = p.mu.to_double();
    std::vector<LemmaRow> rows;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const double nd = static_cast<double>(n);
        const double common = std::lgamma(g + nd) - std::lgamma(g) - std::lgamma(nd);
        LemmaRow r{n, 0.0, 0.0};
        if (n >= j) {
            const double lj = detail::log_falling(nd, j);
            if (n - 1 >= k) {
                r.first = std::exp(common + lj + detail::log_falling(nd - 1.0, k) + nd * std::log(mu));
            }
            if (n >= k) {
                r.second = std::exp(common + lj + detail::log_falling(nd, k) + std::log(nd + g - 1.0) +
                                    (nd + 1.0) * std::log(mu));
            }
        }
        rows.push_back(r);
    }
    return rows;
}

/// Rows (n, max_k |a^(k)_{1,n}|, max_k |b^(k)_{1,n}|) for n = 1 .. n_max.
struct CoefficientLimitRow {
    std::size_t n = 0;
    double a_sup = 0.0;
    double b_sup = 0.0;
};

inline std::vector<CoefficientLimitRow> coefficient_limits(const SobolevParams& sp, std::size_t n_max) {
    detail::check_regime(sp);
    std::vector<CoefficientLimitRow> rows;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const FloatConnection c = float_connection(sp, n);
        CoefficientLimitRow r{n, 0.0, 0.0};
        for (std::size_t k = 0; k <= sp.j; ++k) {
            r.a_sup = std::max(r.a_sup, std::abs(c.a[k].value()));
            r.b_sup = std::max(r.b_sup, std::abs(c.b[k].value()));
        }
        rows.push_back(r);
    }
    return rows;
}

} // namespace msop
