#include <random>

#include <gtest/gtest.h>

#include "msop/serialize.hpp"
#include "msop/sobolev.hpp"
#include "support/oracles.hpp"

using namespace msop;

namespace {

const MeixnerParams kBase{Rational(2), Rational(1, 2)};

SobolevParams worked(Rational lambda = Rational(1)) {
    return {kBase, std::move(lambda), 0, Rational(0), OperatorKind::Forward};
}

Polynomial P(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

std::vector<SobolevParams> grid() {
    std::vector<SobolevParams> out;
    for (const long g : {2, 3, 7}) {
        for (const auto& mu : {Rational(1, 2), Rational(1, 5)}) {
            for (const auto& lambda : {Rational(1), Rational(1, 1000), Rational(100)}) {
                for (const std::size_t j : {0, 1, 2}) {
                    for (const long a : {0, -1, -2}) {
                        for (const auto kind : {OperatorKind::Forward, OperatorKind::Backward}) {
                            out.emplace_back(MeixnerParams(Rational(g), mu), lambda, j, Rational(a), kind);
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::string label(const SobolevParams& sp) { return instance_json(sp, 0).dump(); }

} // namespace

TEST(SobolevParams, RejectsOutOfRange) {
    EXPECT_THROW(SobolevParams(kBase, Rational(-1), 0, Rational(0), OperatorKind::Forward), InvalidParameter);
    EXPECT_THROW(SobolevParams(kBase, Rational(1), 0, Rational(1, 2), OperatorKind::Forward), InvalidParameter);
    EXPECT_NO_THROW(SobolevParams(kBase, Rational(0), 3, Rational(-7, 3), OperatorKind::Backward));
}

TEST(SobolevInnerProduct, Examples) {
    const SobolevFamily fam(worked());
    const Polynomial one = Polynomial::constant(1);
    EXPECT_EQ(sobolev_inner_product(fam, one, one), Rational(5));
    EXPECT_EQ(sobolev_inner_product(fam, P({Rational(-8, 5), Rational(1)}), one), Rational(0));
    const SobolevParams zero = worked(Rational(0));
    const Polynomial p = P({Rational(3), Rational(-1), Rational(2)});
    const Polynomial q = P({Rational(1, 2), Rational(5)});
    EXPECT_EQ(sobolev_inner_product(zero, p, q), inner_product(kBase, p, q));
}

TEST(DjQAtAlpha, Examples) {
    const SobolevFamily fam(worked());
    EXPECT_EQ(fam.dj_q_at_alpha(1), Rational(-8, 5));
    const SobolevFamily zero(worked(Rational(0)));
    EXPECT_EQ(zero.dj_q_at_alpha(3), Rational(-24));
    const SobolevFamily high(SobolevParams(kBase, Rational(1), 2, Rational(-1), OperatorKind::Backward));
    EXPECT_EQ(high.dj_q_at_alpha(0), Rational(0));
    EXPECT_EQ(high.dj_q_at_alpha(1), Rational(0));
    EXPECT_EQ(high.dj_q_at_alpha(2), Rational(2));
}

TEST(ConnectionCoeffs, Examples) {
    const SobolevFamily fam(worked());
    const ConnectionData d = fam.connection_coeffs(2);
    EXPECT_EQ(d.b, std::vector<Rational>{Rational(3, 2)});
    EXPECT_EQ(d.a, std::vector<Rational>{Rational(1, 2)});
    EXPECT_EQ(d.A, RationalFunction(P({Rational(1, 2), Rational(1)}), Polynomial::x()));
    EXPECT_EQ(d.B, RationalFunction(Polynomial::constant(Rational(3, 2)), Polynomial::x()));

    const SobolevFamily zero(worked(Rational(0)));
    const ConnectionData z = zero.connection_coeffs(3);
    for (const auto& c : z.a) {
        EXPECT_TRUE(c.is_zero());
    }
    EXPECT_TRUE(z.B.is_zero());
    EXPECT_EQ(z.A, RationalFunction(Polynomial::constant(1)));
    EXPECT_THROW(fam.connection_coeffs(0), InvalidParameter);
}

TEST(SobolevPoly, Examples) {
    const SobolevFamily fam(worked());
    EXPECT_EQ(fam(0), Polynomial::constant(1));
    EXPECT_EQ(fam(1), P({Rational(-8, 5), Rational(1)}));
    EXPECT_EQ(fam(2), P({Rational(4), Rational(-13, 2), Rational(1)}));
    EXPECT_EQ(fam(3), P({Rational(-128, 9), Rational(406, 9), Rational(-131, 9), Rational(1)}));
}

TEST(SobolevPoly, ReducesToMeixner) {
    for (const auto& sp : grid()) {
        const SobolevFamily fam(sp);
        for (std::size_t n = 0; n <= sp.j; ++n) {
            EXPECT_EQ(fam(n), fam.meixner()(n)) << label(sp);
        }
        const SobolevFamily zero(SobolevParams(sp.base, Rational(0), sp.j, sp.alpha, sp.kind));
        for (std::size_t n = 0; n <= 5; ++n) {
            EXPECT_EQ(zero(n), zero.meixner()(n));
        }
    }
}

TEST(SobolevPoly, MatchesGramSchmidt) {
    for (const auto& sp : grid()) {
        const SobolevFamily fam(sp);
        const auto ip = oracle::sobolev_ip(sp.base.gamma.num().get_si(), sp.base.mu, sp.lambda, sp.j, sp.alpha,
                                           sp.kind == OperatorKind::Forward ? 1 : -1, 12);
        const auto gs = oracle::gram_schmidt(ip, 6);
        for (std::size_t n = 0; n <= 6; ++n) {
            ASSERT_EQ(fam(n), gs[n]) << label(sp) << " n=" << n;
            EXPECT_EQ(sobolev_norm(fam, n), ip(gs[n], gs[n]));
        }
    }
}

TEST(SobolevPoly, OrthogonalAgainstMonomials) {
    for (const auto& sp : grid()) {
        const SobolevFamily fam(sp);
        for (std::size_t n = 1; n <= 8; ++n) {
            ASSERT_TRUE(fam(n).is_monic());
            ASSERT_EQ(fam(n).degree(), n);
            for (std::size_t m = 0; m < n; ++m) {
                ASSERT_TRUE(sobolev_inner_product(fam, fam(n), Polynomial::monomial(m)).is_zero())
                    << label(sp) << " n=" << n << " m=" << m;
            }
        }
    }
}

TEST(SobolevPoly, ConnectionAndDifferenceIdentities) {
    for (const auto& sp : grid()) {
        const SobolevFamily fam(sp);
        for (std::size_t n = 1; n <= 6; ++n) {
            const ConnectionData d = fam.connection_coeffs(n);
            EXPECT_EQ(d.bracket * fam(n), d.scaled_a * fam.meixner()(n) + d.scaled_b * fam.meixner()(n - 1))
                << label(sp) << " n=" << n;
            EXPECT_EQ(fam.dj_q_at_alpha(n), difference(fam(n), sp.kind, sp.j)(sp.alpha));
            EXPECT_EQ(sobolev_norm(fam, n), sobolev_inner_product(fam, fam(n), fam(n)));
        }
    }
}

TEST(SobolevNorm, Examples) {
    const SobolevFamily fam(worked());
    EXPECT_EQ(sobolev_norm(fam, 2), Rational(216));
    EXPECT_EQ(sobolev_norm(fam, 1), Rational(96, 5));
    EXPECT_EQ(sobolev_norm(fam, 0), Rational(5));
    // the cross-check <Q_2, x^2>_lambda
    EXPECT_EQ(sobolev_inner_product(fam, fam(2), Polynomial::monomial(2)), Rational(216));
    EXPECT_EQ(inner_product(kBase, Polynomial::monomial(2), Polynomial::monomial(2)), Rational(1232));
    const SobolevFamily zero(worked(Rational(0)));
    for (std::size_t n = 0; n <= 5; ++n) {
        EXPECT_EQ(sobolev_norm(zero, n), squared_norm(kBase, n));
    }
}

TEST(Msphr, Examples) {
    const SobolevFamily fam(worked());
    EXPECT_EQ(msphr_eval(fam, 2, Rational(3)), Rational(-13, 2));
    EXPECT_EQ(msphr_eval(fam, 1, Rational(7)), Rational(27, 5));
    EXPECT_THROW(msphr_eval(fam, 2, Rational(0)), BracketPole);
    EXPECT_THROW(msphr_eval(fam, 0, Rational(3)), InvalidParameter);
    const SobolevFamily zero(worked(Rational(0)));
    for (long x = -3; x <= 6; ++x) {
        EXPECT_EQ(msphr_eval(zero, 4, Rational(x)), meixner_hypergeometric(kBase, 4, Rational(x)));
    }
}

TEST(Msphr, DegenerateWhereBVanishes) {
    // with j = 1 the numerator of B_{1,n} is b0 + b1 <x - alpha>, which has a rational root
    const SobolevFamily fam(SobolevParams(kBase, Rational(1), 1, Rational(0), OperatorKind::Forward));
    const ConnectionData d = fam.connection_coeffs(3);
    ASSERT_FALSE(d.b[1].is_zero());
    const Rational root = -d.b[0] / d.b[1];
    ASSERT_FALSE(d.bracket(root).is_zero());
    EXPECT_THROW(msphr_eval(fam, 3, root), DegenerateRepresentation);
}

TEST(Msphr, MatchesPolynomialAtRandomPoints) {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 9);
    std::size_t checked = 0;
    for (const auto& sp : grid()) {
        const SobolevFamily fam(sp);
        for (std::size_t n = 1; n <= 6; ++n) {
            for (int t = 0; t < 10; ++t) {
                const Rational x(num(rng), den(rng));
                try {
                    EXPECT_EQ(msphr_eval(fam, n, x), fam(n)(x)) << label(sp) << " n=" << n << " x=" << x.str();
                    ++checked;
                } catch (const BracketPole&) {
                } catch (const DegenerateRepresentation&) {
                }
            }
        }
    }
    // almost every draw is a regular point
    EXPECT_GT(checked, grid().size() * 6 * 10 * 9 / 10);
}

TEST(SobolevDump, Shape) {
    const SobolevFamily fam(worked());
    const json j = sobolev_dump(fam, 2);
    EXPECT_EQ(j["gamma"], "2");
    EXPECT_EQ(j["mu"], "1/2");
    EXPECT_EQ(j["lambda"], "1");
    EXPECT_EQ(j["j"], 0);
    EXPECT_EQ(j["alpha"], "0");
    EXPECT_EQ(j["n"], 2);
    EXPECT_EQ(j["coefficients"], json::array({"4", "-13/2", "1"}));
    EXPECT_EQ(j["norm"], "216");
    EXPECT_TRUE(j.contains("i"));
}
