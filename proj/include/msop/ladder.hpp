#pragma once

#include <array>
#include <cstddef>

#include "msop/sobolev.hpp"

namespace msop {

/// Coefficient functions of the ladder operators for degree n.
///   Q_{n-1}              = A2 M_n + B2 M_{n-1}
///   w(x) D Q_n           = C1 M_n + D1 M_{n-1}
///   w(x) D Q_{n-1}       = C2 M_n + D2 M_{n-1}
/// with w(x) = x + gamma for the forward operator and w(x) = x for backward.
/// lambda_jk[j-1][k-1] holds Lambda_{j,n}^{(k)} = (-1)^k det[[C_k, A_j], [D_k, B_j]].
struct LadderData {
    std::size_t n = 0;
    RationalFunction A1, B1, A2, B2;
    RationalFunction C1, D1, C2, D2;
    RationalFunction theta_tilde;
    std::array<std::array<RationalFunction, 2>, 2> lambda_jk;
};

namespace detail {

inline Polynomial structure_weight(const SobolevParams& p) {
    if (p.kind == OperatorKind::Forward) {
        return Polynomial({p.base.gamma, Rational(1)});
    }
    return Polynomial::x();
}

/// n mu^{delta_{i,2}} (n + gamma - 1) / (1 - mu): the M_{n-1} coefficient in the structure relation.
inline Rational structure_tail(const SobolevParams& p, std::size_t n) {
    const Rational nn(static_cast<long>(n));
    const Rational mu_factor = p.kind == OperatorKind::Backward ? p.base.mu : Rational(1);
    return nn * mu_factor * (nn + p.base.gamma - Rational(1)) / (Rational(1) - p.base.mu);
}

} // namespace detail

/// (A2, B2) with Q_{n-1} = A2 M_n + B2 M_{n-1}; needs n >= 2.
inline std::pair<RationalFunction, RationalFunction> shifted_connection(const SobolevFamily& fam, std::size_t n) {
    if (n < 2) {
        throw InvalidParameter("shifted connection needs n >= 2");
    }
    const auto [alpha_prev, beta_prev] = recurrence_coeffs(fam.params().base, n - 1);
    const ConnectionData prev = fam.connection_coeffs(n - 1);
    RationalFunction A2 = -prev.B / RationalFunction(beta_prev);
    RationalFunction B2 = prev.A + A2 * RationalFunction(Polynomial({alpha_prev, Rational(-1)}));
    return {std::move(A2), std::move(B2)};
}

/// (C1, D1) with w D Q_n = C1 M_n + D1 M_{n-1}, derived from the product rule
///   D(f g) = g D f + f(x +- 1) D g,
/// the structure relation for w D M_n and w D M_{n-1}, and the three-term
/// recurrence to eliminate M_{n-2}.
inline std::pair<RationalFunction, RationalFunction> difference_image_first(const SobolevFamily& fam,
                                                                            std::size_t n) {
    if (n == 0) {
        throw InvalidParameter("difference image needs n >= 1");
    }
    const auto& p = fam.params();
    const ConnectionData d = fam.connection_coeffs(n);
    const RationalFunction w(detail::structure_weight(p));
    const Rational s(step(p.kind));
    const RationalFunction A_shift = d.A.shifted(s);
    const RationalFunction B_shift = d.B.shifted(s);
    const Rational nn(static_cast<long>(n));

    RationalFunction C1 = w * difference(d.A, p.kind) + A_shift * RationalFunction(nn);
    RationalFunction D1 = w * difference(d.B, p.kind) + A_shift * RationalFunction(detail::structure_tail(p, n)) +
                          B_shift * RationalFunction(nn - Rational(1));
    if (n >= 2) {
        // w D M_{n-1} contributes e_{n-1} M_{n-2} = e_{n-1} ((x - alpha_{n-1}) M_{n-1} - M_n) / beta_{n-1}.
        const auto [alpha_prev, beta_prev] = recurrence_coeffs(p.base, n - 1);
        const Rational ratio = detail::structure_tail(p, n - 1) / beta_prev;
        C1 -= B_shift * RationalFunction(ratio);
        D1 += B_shift * RationalFunction(Polynomial({-alpha_prev, Rational(1)}) * ratio);
    }
    return {std::move(C1), std::move(D1)};
}

/// (C1, D1) in the closed expanded form, which divides
/// by beta_{n-1} and so needs n >= 2.
inline std::pair<RationalFunction, RationalFunction> difference_image_printed(const SobolevFamily& fam,
                                                                              std::size_t n) {
    if (n < 2) {
        throw InvalidParameter("printed difference image needs n >= 2");
    }
    const auto& p = fam.params();
    const ConnectionData d = fam.connection_coeffs(n);
    const RationalFunction w(detail::structure_weight(p));
    const Rational s(step(p.kind));
    const Rational nn(static_cast<long>(n));
    const Rational one(1);
    const Rational mu_d = p.kind == OperatorKind::Backward ? p.base.mu : one;
    const auto [alpha_prev, beta_prev] = recurrence_coeffs(p.base, n - 1);
    const Rational lower = (nn - one) * (nn + p.base.gamma - Rational(2)) * mu_d / (beta_prev * (one - p.base.mu));
    RationalFunction C1 = w * difference(d.A, p.kind) + RationalFunction(nn) * d.A.shifted(s) -
                          RationalFunction(lower) * d.B.shifted(s);
    RationalFunction D1 = w * difference(d.B, p.kind) + RationalFunction(nn - one) * d.B.shifted(s) +
                          RationalFunction(Polynomial({-alpha_prev, one}) * lower) * d.B.shifted(s) +
                          RationalFunction(nn * (nn + p.base.gamma - one) * mu_d / (one - p.base.mu)) * d.A.shifted(s);
    return {std::move(C1), std::move(D1)};
}

/// (C1, D1, C2, D2); C2 and D2 follow from (C1, D1) at degree n-1 by the recurrence.
inline std::array<RationalFunction, 4> difference_images(const SobolevFamily& fam, std::size_t n) {
    if (n < 2) {
        throw InvalidParameter("difference images need n >= 2");
    }
    auto [C1, D1] = difference_image_first(fam, n);
    const auto [C1_prev, D1_prev] = difference_image_first(fam, n - 1);
    const auto [alpha_prev, beta_prev] = recurrence_coeffs(fam.params().base, n - 1);
    RationalFunction C2 = -D1_prev / RationalFunction(beta_prev);
    RationalFunction D2 = C1_prev + C2 * RationalFunction(Polynomial({alpha_prev, Rational(-1)}));
    return {std::move(C1), std::move(D1), std::move(C2), std::move(D2)};
}

inline LadderData ladder_coeffs(const SobolevFamily& fam, std::size_t n) {
    if (n < 2) {
        throw InvalidParameter("ladder operators need n >= 2");
    }
    LadderData L;
    L.n = n;
    const ConnectionData d = fam.connection_coeffs(n);
    L.A1 = d.A;
    L.B1 = d.B;
    std::tie(L.A2, L.B2) = shifted_connection(fam, n);
    auto images = difference_images(fam, n);
    L.C1 = std::move(images[0]);
    L.D1 = std::move(images[1]);
    L.C2 = std::move(images[2]);
    L.D2 = std::move(images[3]);
    const RationalFunction theta = L.A1 * L.B2 - L.B1 * L.A2;
    L.theta_tilde = RationalFunction(detail::structure_weight(fam.params())) * theta;

    const std::array<const RationalFunction*, 2> As{&L.A1, &L.A2};
    const std::array<const RationalFunction*, 2> Bs{&L.B1, &L.B2};
    const std::array<const RationalFunction*, 2> Cs{&L.C1, &L.C2};
    const std::array<const RationalFunction*, 2> Ds{&L.D1, &L.D2};
    for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t k = 0; k < 2; ++k) {
            const RationalFunction det = *Cs[k] * *Bs[j] - *As[j] * *Ds[k];
            // (-1)^k with k = 1, 2
            L.lambda_jk[j][k] = k == 0 ? -det : det;
        }
    }
    return L;
}

/// Theta~ D Q_n + Lambda_2^(1) Q_n - Lambda_1^(1) Q_{n-1}
inline RationalFunction annihilation_residual(const SobolevFamily& fam, const LadderData& L) {
    const auto kind = fam.params().kind;
    const Polynomial& q = fam(L.n);
    const Polynomial& q_prev = fam(L.n - 1);
    return L.theta_tilde * RationalFunction(difference(q, kind)) + L.lambda_jk[1][0] * RationalFunction(q) -
           L.lambda_jk[0][0] * RationalFunction(q_prev);
}

/// Theta~ D Q_{n-1} + Lambda_1^(2) Q_{n-1} - Lambda_2^(2) Q_n
inline RationalFunction creation_residual(const SobolevFamily& fam, const LadderData& L) {
    const auto kind = fam.params().kind;
    const Polynomial& q = fam(L.n);
    const Polynomial& q_prev = fam(L.n - 1);
    return L.theta_tilde * RationalFunction(difference(q_prev, kind)) + L.lambda_jk[0][1] * RationalFunction(q_prev) -
           L.lambda_jk[1][1] * RationalFunction(q);
}

/// Coefficients of F D^2 Q_n + G D Q_n + H Q_n = 0.
struct SecondOrderCoeffs {
    RationalFunction F, G, H;
};

inline SecondOrderCoeffs second_order_coeffs(const LadderData& L, OperatorKind kind) {
    const Rational s(step(kind));
    const RationalFunction& T = L.theta_tilde;
    const RationalFunction& L11 = L.lambda_jk[0][0];
    const RationalFunction& L21 = L.lambda_jk[1][0];
    const RationalFunction& L12 = L.lambda_jk[0][1];
    const RationalFunction& L22 = L.lambda_jk[1][1];
    if (L11.is_zero()) {
        throw DegenerateRepresentation("Lambda_1^(1) vanishes identically");
    }
    const RationalFunction L11_shift = L11.shifted(s);
    const RationalFunction dL11 = difference(L11, kind);
    SecondOrderCoeffs c;
    c.F = T * T.shifted(s) / L11_shift;
    c.G = T * difference(T, kind) / L11_shift - T * T * dL11 / (L11 * L11_shift) + T * L21.shifted(s) / L11_shift +
          T * L12 / L11;
    c.H = T * difference(L21, kind) / L11_shift - T * L21 * dL11 / (L11 * L11_shift) + L12 * L21 / L11 - L22;
    return c;
}

/// F D^2 Q_n + G D Q_n + H Q_n with denominators cleared (multiplied through by den F * den G * den H).
inline Polynomial second_order_residual(const SobolevFamily& fam, std::size_t n, const SecondOrderCoeffs& c) {
    const auto kind = fam.params().kind;
    const Polynomial& q = fam(n);
    const Polynomial& df = c.F.den();
    const Polynomial& dg = c.G.den();
    const Polynomial& dh = c.H.den();
    return c.F.num() * dg * dh * difference(q, kind, 2) + c.G.num() * df * dh * difference(q, kind) +
           c.H.num() * df * dg * q;
}

/// Second route to the same equation: substitute Q_{n-1} = (Theta~ D Q_n + Lambda_2^(1) Q_n) / Lambda_1^(1)
/// into the creation identity working in the shift basis {Q(x), Q(x+s), Q(x+2s)} (s = +-1) and convert back
/// with Q(x+s) = Q + s DQ and Q(x+2s) = Q + 2s DQ + D^2 Q.
inline SecondOrderCoeffs second_order_via_shifts(const LadderData& L, OperatorKind kind) {
    const Rational s(step(kind));
    const RationalFunction sf(s);
    const RationalFunction& T = L.theta_tilde;
    const RationalFunction& L11 = L.lambda_jk[0][0];
    const RationalFunction& L21 = L.lambda_jk[1][0];
    const RationalFunction& L12 = L.lambda_jk[0][1];
    const RationalFunction& L22 = L.lambda_jk[1][1];

    // Q_{n-1} = u0 Q(x) + u1 Q(x+s), using D Q = s (Q(x+s) - Q(x)).
    const RationalFunction u0 = (L21 - sf * T) / L11;
    const RationalFunction u1 = sf * T / L11;
    // D (u0 Q + u1 EQ) = s (E u0 EQ + E u1 E^2 Q - u0 Q - u1 EQ)
    const RationalFunction d0 = -sf * u0;
    const RationalFunction d1 = sf * (u0.shifted(s) - u1);
    const RationalFunction d2 = sf * u1.shifted(s);

    const RationalFunction c0 = T * d0 + L12 * u0 - L22;
    const RationalFunction c1 = T * d1 + L12 * u1;
    const RationalFunction c2 = T * d2;
    SecondOrderCoeffs c;
    c.F = c2;
    c.G = sf * (c1 + RationalFunction(Rational(2)) * c2);
    c.H = c0 + c1 + c2;
    return c;
}

/// True when (F, G, H) and (F', G', H') differ by a common rational factor.
inline bool proportional(const SecondOrderCoeffs& a, const SecondOrderCoeffs& b) {
    // p q == r t, compared on numerators and denominators without reducing.
    const auto same = [](const RationalFunction& p, const RationalFunction& q, const RationalFunction& r,
                         const RationalFunction& t) {
        return p.num() * q.num() * r.den() * t.den() == r.num() * t.num() * p.den() * q.den();
    };
    return same(a.F, b.G, a.G, b.F) && same(a.F, b.H, a.H, b.F) && same(a.G, b.H, a.H, b.G);
}

} // namespace msop
