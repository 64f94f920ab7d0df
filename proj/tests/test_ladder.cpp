#include <gtest/gtest.h>

#include "msop/ladder.hpp"
#include "msop/serialize.hpp"

using namespace msop;

namespace {

const MeixnerParams kBase{Rational(2), Rational(1, 2)};

SobolevParams worked(Rational lambda = Rational(1), OperatorKind kind = OperatorKind::Forward) {
    return {kBase, std::move(lambda), 0, Rational(0), kind};
}

Polynomial weight_poly(const SobolevParams& sp) {
    return sp.kind == OperatorKind::Forward ? Polynomial({sp.base.gamma, Rational(1)}) : Polynomial::x();
}

// residual of R = p M_n + q M_{n-1} for rational-function coefficients, denominators cleared
Polynomial connection_residual(const Polynomial& r, const RationalFunction& p, const Polynomial& m,
                               const RationalFunction& q, const Polynomial& m_prev) {
    return r * p.den() * q.den() - p.num() * q.den() * m - q.num() * p.den() * m_prev;
}

// a smaller slice of the verification grid keeps this binary quick; the full grid runs in acceptance
std::vector<SobolevParams> instances() {
    std::vector<SobolevParams> out;
    for (const long g : {2, 7}) {
        for (const auto& mu : {Rational(1, 2), Rational(1, 5)}) {
            for (const std::size_t j : {0, 1, 2}) {
                for (const long a : {0, -1}) {
                    for (const auto kind : {OperatorKind::Forward, OperatorKind::Backward}) {
                        out.emplace_back(MeixnerParams(Rational(g), mu), Rational(1), j, Rational(a), kind);
                    }
                }
            }
        }
    }
    return out;
}

std::string label(const SobolevParams& sp, std::size_t n) { return instance_json(sp, n).dump(); }

} // namespace

TEST(ShiftedConnection, Examples) {
    const SobolevFamily fam(worked());
    const auto [A2, B2] = shifted_connection(fam, 2);
    EXPECT_EQ(A2, RationalFunction(Polynomial::constant(Rational(-1, 5)), Polynomial::x()));
    const Rational x(3);
    EXPECT_EQ(fam(1)(x), Rational(7, 5));
    EXPECT_EQ(A2(x) * fam.meixner()(2)(x) + B2(x) * fam.meixner()(1)(x), Rational(7, 5));
    EXPECT_THROW(shifted_connection(fam, 1), InvalidParameter);

    const SobolevFamily zero(worked(Rational(0)));
    const auto [Z2, W2] = shifted_connection(zero, 4);
    EXPECT_TRUE(Z2.is_zero());
    EXPECT_EQ(W2, RationalFunction(1));
}

TEST(DifferenceImages, ClassicalCase) {
    for (const auto kind : {OperatorKind::Forward, OperatorKind::Backward}) {
        const SobolevFamily fam(worked(Rational(0), kind));
        for (std::size_t n = 2; n <= 5; ++n) {
            const auto img = difference_images(fam, n);
            const Rational nn(static_cast<long>(n));
            const Rational mu_factor = kind == OperatorKind::Backward ? kBase.mu : Rational(1);
            EXPECT_EQ(img[0], RationalFunction(nn));
            EXPECT_EQ(img[1], RationalFunction(nn * mu_factor * (nn + kBase.gamma - Rational(1)) /
                                               (Rational(1) - kBase.mu)));
        }
    }
}

TEST(DifferenceImages, WorkedInstanceAtPoints) {
    const SobolevFamily fam(worked());
    const auto img = difference_images(fam, 2);
    const Polynomial dq = difference(fam(2), OperatorKind::Forward);
    for (const long xv : {3, 5, 7}) {
        const Rational x(xv);
        EXPECT_EQ((x + Rational(2)) * dq(x), img[0](x) * fam.meixner()(2)(x) + img[1](x) * fam.meixner()(1)(x));
    }
}

TEST(DifferenceImages, MatchDirectComputation) {
    for (const auto& sp : instances()) {
        const SobolevFamily fam(sp);
        const Polynomial w = weight_poly(sp);
        for (std::size_t n = 2; n <= 5; ++n) {
            const auto img = difference_images(fam, n);
            const Polynomial& m = fam.meixner()(n);
            const Polynomial& m_prev = fam.meixner()(n - 1);
            EXPECT_TRUE(connection_residual(w * difference(fam(n), sp.kind), img[0], m, img[1], m_prev).is_zero())
                << label(sp, n);
            EXPECT_TRUE(
                connection_residual(w * difference(fam(n - 1), sp.kind), img[2], m, img[3], m_prev).is_zero())
                << label(sp, n);
            const auto [A2, B2] = shifted_connection(fam, n);
            EXPECT_TRUE(connection_residual(fam(n - 1), A2, m, B2, m_prev).is_zero()) << label(sp, n);
        }
    }
}

TEST(DifferenceImages, PrintedFormMatchesRederived) {
    for (const auto& sp : instances()) {
        const SobolevFamily fam(sp);
        for (std::size_t n = 2; n <= 5; ++n) {
            const auto img = difference_images(fam, n);
            const auto [C1, D1] = difference_image_printed(fam, n);
            EXPECT_EQ(C1, img[0]) << label(sp, n);
            EXPECT_EQ(D1, img[1]) << label(sp, n);
        }
    }
}

TEST(DifferenceImages, ConsistentWithRecurrence) {
    const SobolevFamily fam(SobolevParams(kBase, Rational(1), 1, Rational(-1), OperatorKind::Backward));
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto img = difference_images(fam, n);
        const auto prev = difference_image_first(fam, n - 1);
        const auto [a, b] = recurrence_coeffs(kBase, n - 1);
        EXPECT_EQ(img[2], -prev.second / RationalFunction(b));
        EXPECT_EQ(img[3], prev.first + img[2] * RationalFunction(Polynomial({a, Rational(-1)})));
    }
}

TEST(Ladder, WorkedInstance) {
    const SobolevFamily fam(worked());
    const LadderData L = ladder_coeffs(fam, 2);
    EXPECT_EQ(L.n, 2U);
    EXPECT_TRUE(annihilation_residual(fam, L).is_zero());
    EXPECT_TRUE(creation_residual(fam, L).is_zero());
    EXPECT_THROW(ladder_coeffs(fam, 1), InvalidParameter);
}

TEST(Ladder, ClassicalDegeneration) {
    for (const auto kind : {OperatorKind::Forward, OperatorKind::Backward}) {
        const SobolevParams sp = worked(Rational(0), kind);
        const SobolevFamily fam(sp);
        for (std::size_t n = 2; n <= 5; ++n) {
            const LadderData L = ladder_coeffs(fam, n);
            EXPECT_EQ(L.theta_tilde, RationalFunction(weight_poly(sp)));
            EXPECT_TRUE(annihilation_residual(fam, L).is_zero());
            EXPECT_TRUE(creation_residual(fam, L).is_zero());
            // annihilation restates w D M_n = n M_n + tail M_{n-1}
            const Rational nn(static_cast<long>(n));
            EXPECT_EQ(L.lambda_jk[1][0], RationalFunction(-nn));
            EXPECT_EQ(L.lambda_jk[0][0], RationalFunction(detail::structure_tail(sp, n)));
            EXPECT_TRUE(structure_relation_residual(fam.meixner(), n, kind).is_zero());
        }
    }
}

TEST(Ladder, ResidualsVanish) {
    for (const auto& sp : instances()) {
        const SobolevFamily fam(sp);
        for (std::size_t n = 2; n <= 5; ++n) {
            const LadderData L = ladder_coeffs(fam, n);
            EXPECT_TRUE(annihilation_residual(fam, L).is_zero()) << label(sp, n);
            EXPECT_TRUE(creation_residual(fam, L).is_zero()) << label(sp, n);
        }
    }
}

TEST(SecondOrder, Examples) {
    {
        const SobolevFamily fam(worked(Rational(0)));
        for (std::size_t n = 2; n <= 6; ++n) {
            const auto c = second_order_coeffs(ladder_coeffs(fam, n), OperatorKind::Forward);
            EXPECT_TRUE(second_order_residual(fam, n, c).is_zero());
        }
    }
    {
        const SobolevFamily fam(worked());
        const auto c = second_order_coeffs(ladder_coeffs(fam, 2), OperatorKind::Forward);
        EXPECT_TRUE(second_order_residual(fam, 2, c).is_zero());
        EXPECT_FALSE(c.F.is_zero());
    }
    {
        const SobolevFamily fam(SobolevParams(kBase, Rational(1), 1, Rational(-1), OperatorKind::Backward));
        const auto c = second_order_coeffs(ladder_coeffs(fam, 3), OperatorKind::Backward);
        EXPECT_TRUE(second_order_residual(fam, 3, c).is_zero());
    }
}

TEST(SecondOrder, ResidualAndEliminationRoute) {
    for (const auto& sp : instances()) {
        const SobolevFamily fam(sp);
        for (std::size_t n = 2; n <= 4; ++n) {
            const LadderData L = ladder_coeffs(fam, n);
            const auto c = second_order_coeffs(L, sp.kind);
            EXPECT_TRUE(second_order_residual(fam, n, c).is_zero()) << label(sp, n);
            EXPECT_TRUE(proportional(c, second_order_via_shifts(L, sp.kind))) << label(sp, n);
        }
    }
}

TEST(SecondOrder, ResidualDetectsWrongPolynomial) {
    const SobolevFamily fam(worked());
    const auto c = second_order_coeffs(ladder_coeffs(fam, 3), OperatorKind::Forward);
    ASSERT_TRUE(second_order_residual(fam, 3, c).is_zero());
    const Polynomial& m = fam.meixner()(3);
    const Polynomial r = c.F.num() * c.G.den() * c.H.den() * difference(m, OperatorKind::Forward, 2) +
                         c.G.num() * c.F.den() * c.H.den() * difference(m, OperatorKind::Forward) +
                         c.H.num() * c.F.den() * c.G.den() * m;
    EXPECT_FALSE(r.is_zero());
    SecondOrderCoeffs scaled{c.F, c.G, c.H * RationalFunction(2)};
    EXPECT_FALSE(proportional(c, scaled));
    SecondOrderCoeffs multiple{c.F * RationalFunction(Polynomial::x()), c.G * RationalFunction(Polynomial::x()),
                               c.H * RationalFunction(Polynomial::x())};
    EXPECT_TRUE(proportional(c, multiple));
}

TEST(SecondOrder, Dump) {
    const SobolevFamily fam(worked());
    const auto c = second_order_coeffs(ladder_coeffs(fam, 2), OperatorKind::Forward);
    const json j = second_order_dump(c);
    for (const char* key : {"F", "G", "H"}) {
        ASSERT_TRUE(j.contains(key));
        EXPECT_TRUE(j[key].contains("num_coefficients"));
        EXPECT_TRUE(j[key].contains("den_coefficients"));
    }
    EXPECT_EQ(j["F"], to_json(c.F));
}
