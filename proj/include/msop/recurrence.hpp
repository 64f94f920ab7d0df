#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "msop/sobolev.hpp"

namespace msop {

/// The four products that coincide because multiplication by <x-alpha>^{j+1}
/// is symmetric for the Sobolev product:
///   <Bp, q>_lambda, <p, Bq>_lambda, <Bp, q>, <p, Bq>   with B = <x-alpha>^{j+1}.
inline std::array<Rational, 4> symmetry_check(const SobolevParams& sp, const Polynomial& p, const Polynomial& q) {
    const Polynomial b = bracket_polynomial(sp.alpha, sp.j + 1, sp.kind);
    return {sobolev_inner_product(sp, b * p, q), sobolev_inner_product(sp, p, b * q), inner_product(sp.base, b * p, q),
            inner_product(sp.base, p, b * q)};
}

/// <x-alpha>^{j+1} Q_n = calA M_n + calB M_{n-1}
struct MultiplicationConnection {
    Polynomial calA;  // monic, degree j+1
    Polynomial calB;  // degree <= j, leading coefficient b^(j)
};

inline MultiplicationConnection multiplication_connection(const SobolevFamily& fam, std::size_t n) {
    ConnectionData d = fam.connection_coeffs(n);
    return {std::move(d.scaled_a), std::move(d.scaled_b)};
}

/// One row of the (2j+3)-term recurrence
///   <x-alpha>^{j+1} Q_n = Q_{n+j+1} + sum_{k = n-j-1}^{n+j} c_{n,k} Q_k
/// (lower indices truncated at 0).
struct RecurrenceRow {
    std::size_t n = 0;
    std::map<std::size_t, Rational> coeffs;
};

/// Fourier coefficient <<x-alpha>^{j+1} Q_n, Q_k>_lambda / ||Q_k||_lambda^2.
inline Rational fourier_coefficient(const SobolevFamily& fam, std::size_t n, std::size_t k) {
    const auto& sp = fam.params();
    const Polynomial b = bracket_polynomial(sp.alpha, sp.j + 1, sp.kind);
    return sobolev_inner_product(fam, b * fam(n), fam(k)) / sobolev_inner_product(fam, fam(k), fam(k));
}

inline RecurrenceRow recurrence_row(const SobolevFamily& fam, std::size_t n) {
    const std::size_t j = fam.params().j;
    RecurrenceRow row;
    row.n = n;
    const std::size_t lo = n >= j + 1 ? n - j - 1 : 0;
    for (std::size_t k = lo; k <= n + j; ++k) {
        row.coeffs.emplace(k, fourier_coefficient(fam, n, k));
    }
    return row;
}

/// <x-alpha>^{j+1} Q_n - Q_{n+j+1} - sum c_{n,k} Q_k
inline Polynomial recurrence_residual(const SobolevFamily& fam, const RecurrenceRow& row) {
    const auto& sp = fam.params();
    Polynomial r = bracket_polynomial(sp.alpha, sp.j + 1, sp.kind) * fam(row.n) - fam(row.n + sp.j + 1);
    for (const auto& [k, c] : row.coeffs) {
        r -= fam(k) * c;
    }
    return r;
}

/// Expanded expressions for individual recurrence coefficients, evaluated
/// independently of the Fourier route. Each entry is nullopt when that
/// expression is not defined for the given (n, k).
struct ExpandedCoefficients {
    std::optional<Rational> top;             // k = n + j
    std::optional<Rational> upper_band;      // n - 1 <= k <= n + j - 1
    std::optional<Rational> n_minus_j;       // k = n - j, using a^(j) of degree n - j
    std::optional<Rational> n_minus_j_as_printed;  // k = n - j, using a^(j) of degree n
    std::optional<Rational> bottom;          // k = n - j - 1, norm ratio
};

inline ExpandedCoefficients expanded_coefficient(const SobolevFamily& fam, std::size_t n, std::size_t k) {
    const auto& sp = fam.params();
    const std::size_t j = sp.j;
    const auto& mx = fam.meixner();
    const Polynomial bj1 = bracket_polynomial(sp.alpha, j + 1, sp.kind);
    const auto ip = [&](const Polynomial& p, const Polynomial& q) { return sobolev_inner_product(fam, p, q); };
    const auto norm = [&](std::size_t m) { return sobolev_norm(fam, m); };

    ExpandedCoefficients e;
    if (n >= 1) {
        const ConnectionData d = fam.connection_coeffs(n);
        if (k == n + j) {
            e.top = ip(bj1 * mx(n), fam(k)) / norm(k) + d.a[j];
        }
        if (k + 1 >= n && k < n + j) {
            // a-terms run over l >= k-n+1, b-terms over l >= k-n+2; a^(-1) = 0.
            const long off = static_cast<long>(k) - static_cast<long>(n);
            Rational v = ip(bj1 * mx(n), fam(k)) / norm(k);
            for (long l = off + 1; l <= static_cast<long>(j); ++l) {
                if (l < 0) {
                    continue;
                }
                const auto lu = static_cast<std::size_t>(l);
                v += d.a[lu] * ip(bracket_polynomial(sp.alpha, lu, sp.kind) * mx(n), fam(k)) / norm(k);
            }
            for (long l = off + 2; l <= static_cast<long>(j); ++l) {
                if (l < 0) {
                    continue;
                }
                const auto lu = static_cast<std::size_t>(l);
                v += d.b[lu] * ip(bracket_polynomial(sp.alpha, lu, sp.kind) * mx(n - 1), fam(k)) / norm(k);
            }
            if (off >= 0) {
                v += d.a[static_cast<std::size_t>(off)];
            }
            if (off + 1 >= 0 && off + 1 <= static_cast<long>(j)) {
                v += d.b[static_cast<std::size_t>(off + 1)];
            }
            e.upper_band = v;
        }
        if (n > j && k == n - j) {
            const Rational base = ip(fam(n), bj1 * mx(n - j)) / norm(n - j);
            const Rational ratio = norm(n) / norm(n - j);
            e.n_minus_j = base + fam.connection_coeffs(n - j).a[j] * ratio;
            e.n_minus_j_as_printed = base + d.a[j] * ratio;
        }
    }
    if (n >= j + 1 && k == n - j - 1) {
        e.bottom = norm(n) / norm(k);
    }
    return e;
}

} // namespace msop
