#include <gtest/gtest.h>

#include "msop/msop.hpp"

using namespace msop;

namespace {

VerifyGrid tiny() {
    VerifyGrid g = VerifyGrid::standard();
    g.gammas = {Rational(2)};
    g.mus = {Rational(1, 2)};
    g.lambdas = {Rational(1)};
    g.js = {0, 1};
    g.alphas = {Rational(0), Rational(-1)};
    g.classical_gammas = {Rational(2)};
    g.classical_mus = {Rational(1, 5)};
    g.classical_n_max = 4;
    g.sobolev_n_max = 4;
    g.msphr_n_max = 3;
    g.ladder_n_max = 3;
    g.recurrence_n_max = 3;
    g.kernel_j_max = 1;
    return g;
}

} // namespace

TEST(Serialize, PolynomialRoundTrip) {
    const Polynomial p({Rational(4), Rational(-13, 2), Rational(1)});
    const json j = to_json(p);
    EXPECT_EQ(j, json::array({"4", "-13/2", "1"}));
    EXPECT_EQ(polynomial_from_json(j), p);
    EXPECT_EQ(to_json(Polynomial()), json::array());
}

TEST(Serialize, RationalFunction) {
    const RationalFunction f(Polynomial::constant(Rational(3, 2)), Polynomial::x());
    const json j = to_json(f);
    EXPECT_EQ(j["num_coefficients"], json::array({"3/2"}));
    EXPECT_EQ(j["den_coefficients"], json::array({"0", "1"}));
}

TEST(Serialize, Dumps) {
    const MeixnerFamily fam(MeixnerParams(Rational(2), Rational(1, 2)));
    const json m = meixner_dump(fam, 2);
    EXPECT_EQ(m["gamma"], "2");
    EXPECT_EQ(m["mu"], "1/2");
    EXPECT_EQ(m["n"], 2);
    EXPECT_EQ(m["coefficients"], json::array({"6", "-7", "1"}));

    const SobolevParams sp(MeixnerParams(Rational(7), Rational(1, 5)), Rational(1, 1000), 2, Rational(-1),
                           OperatorKind::Backward);
    const json inst = instance_json(sp, 5);
    std::vector<std::string> keys;
    for (const auto& [k, v] : inst.items()) {
        keys.push_back(k);
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"gamma", "mu", "lambda", "j", "alpha", "i", "n"}));
    EXPECT_EQ(inst["lambda"], "1/1000");
    EXPECT_EQ(inst["alpha"], "-1");
}

TEST(Verify, SuiteNamesAreUnique) {
    const auto& names = Verifier::suite_names();
    EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
    EXPECT_EQ(names.size(), 19U);
}

TEST(Verify, TinyGridPassesEverySuite) {
    VerifyOptions opts;
    opts.grid = tiny();
    const VerificationReport report = verify(opts);
    std::set<std::string> seen;
    for (const auto& r : report.results) {
        seen.insert(r.suite);
        EXPECT_TRUE(r.pass) << r.suite << " " << r.instance.dump() << ": " << r.detail;
    }
    const auto& names = Verifier::suite_names();
    EXPECT_EQ(seen, std::set<std::string>(names.begin(), names.end()));
    EXPECT_TRUE(report.all_passed());
}

TEST(Verify, ReportJson) {
    VerifyOptions opts;
    opts.grid = tiny();
    opts.suites = {"kernel-cd"};
    const json j = verify(opts).to_json();
    ASSERT_GT(j["total"].get<std::size_t>(), 0U);
    EXPECT_EQ(j["failed"], 0);
    EXPECT_EQ(j["results"].size(), j["total"].get<std::size_t>());
    const json& first = j["results"][0];
    EXPECT_EQ(first["suite"], "kernel-cd");
    EXPECT_EQ(first["status"], "pass");
    EXPECT_TRUE(first["instance"].contains("gamma"));
    EXPECT_TRUE(first.contains("detail"));
}

TEST(Verify, UnknownSuiteThrows) {
    VerifyOptions opts;
    opts.suites = {"no-such-suite"};
    EXPECT_THROW(verify(opts), InvalidParameter);
}

TEST(Verify, ZeroToleranceFailsFloatSuiteAndNamesInstance) {
    VerifyOptions opts;
    opts.grid = tiny();
    opts.suites = {"float-meixner"};
    opts.tol = 0.0;
    const VerificationReport report = verify(opts);
    ASSERT_GT(report.failures(), 0U);
    for (const auto& r : report.results) {
        if (!r.pass) {
            EXPECT_EQ(r.suite, "float-meixner");
            EXPECT_EQ(r.instance["gamma"], "2");
            EXPECT_FALSE(r.detail.empty());
        }
    }
}

TEST(Verify, FloatMeixnerDeviationIsSmall) {
    const MeixnerParams p(Rational(1), Rational(1, 5));
    // includes the exact root M_1(1/4) = 0
    for (const double x : {0.25, -1.5, 3.75}) {
        const double d = Verifier::float_meixner_deviation(p, 50, x);
        EXPECT_TRUE(std::isfinite(d));
        EXPECT_LT(d, 1e-10);
    }
}
