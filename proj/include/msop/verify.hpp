#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "msop/figure.hpp"
#include "msop/serialize.hpp"

namespace msop {

/// Parameter grid for the verification suites.
struct VerifyGrid {
    std::vector<Rational> gammas;
    std::vector<Rational> mus;
    std::vector<Rational> lambdas;
    std::vector<std::size_t> js;
    std::vector<Rational> alphas;
    std::vector<OperatorKind> kinds;
    std::vector<Rational> classical_gammas;
    std::vector<Rational> classical_mus;
    std::size_t classical_n_max = 8;
    std::size_t sobolev_n_max = 8;
    std::size_t msphr_n_max = 6;
    std::size_t ladder_n_max = 6;
    std::size_t recurrence_n_max = 6;
    std::size_t kernel_j_max = 3;

    static VerifyGrid standard() {
        VerifyGrid g;
        g.gammas = {Rational(2), Rational(3), Rational(7)};
        g.mus = {Rational(1, 2), Rational(1, 5)};
        g.lambdas = {Rational(1), Rational(1, 1000), Rational(100)};
        g.js = {0, 1, 2};
        g.alphas = {Rational(0), Rational(-1), Rational(-2)};
        g.kinds = {OperatorKind::Forward, OperatorKind::Backward};
        g.classical_gammas = {Rational(1), Rational(2), Rational(3), Rational(7)};
        g.classical_mus = {Rational(1, 2), Rational(1, 5), Rational(3, 4)};
        return g;
    }

    static VerifyGrid deep() {
        VerifyGrid g = standard();
        g.gammas.insert(g.gammas.begin(), Rational(1));
        g.mus.push_back(Rational(3, 4));
        g.js.push_back(3);
        g.alphas.push_back(Rational(-5, 2));
        g.classical_n_max = 12;
        g.sobolev_n_max = 10;
        g.msphr_n_max = 8;
        g.ladder_n_max = 7;
        g.recurrence_n_max = 8;
        return g;
    }

    [[nodiscard]] std::vector<SobolevParams> sobolev_instances() const {
        std::vector<SobolevParams> out;
        for (const auto& g : gammas) {
            for (const auto& m : mus) {
                for (const auto& l : lambdas) {
                    for (const auto j : js) {
                        for (const auto& a : alphas) {
                            for (const auto k : kinds) {
                                out.emplace_back(MeixnerParams{g, m}, l, j, a, k);
                            }
                        }
                    }
                }
            }
        }
        return out;
    }

    [[nodiscard]] std::vector<MeixnerParams> classical_instances() const {
        std::vector<MeixnerParams> out;
        for (const auto& g : classical_gammas) {
            for (const auto& m : classical_mus) {
                out.emplace_back(g, m);
            }
        }
        return out;
    }
};

struct CheckResult {
    std::string suite;
    json instance;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> results;

    [[nodiscard]] std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.pass; }));
    }
    [[nodiscard]] bool all_passed() const { return failures() == 0; }

    [[nodiscard]] json to_json() const {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back(json{{"suite", r.suite},
                               {"instance", r.instance},
                               {"status", r.pass ? "pass" : "fail"},
                               {"detail", r.detail}});
        }
        return json{{"total", results.size()}, {"failed", failures()}, {"results", std::move(arr)}};
    }
};

struct VerifyOptions {
    VerifyGrid grid = VerifyGrid::standard();
    std::set<std::string> suites;  // empty: all
    double tol = 1e-10;
};

namespace detail {

inline json classical_instance(const MeixnerParams& p, std::optional<OperatorKind> kind, std::size_t n) {
    return json{{"gamma", p.gamma.str()},
                {"mu", p.mu.str()},
                {"lambda", nullptr},
                {"j", nullptr},
                {"alpha", nullptr},
                {"i", kind ? json(static_cast<int>(*kind)) : json(nullptr)},
                {"n", n}};
}

// Non-integer evaluation points, so brackets with integer alpha never vanish.
inline const std::vector<Rational>& probe_points() {
    static const std::vector<Rational> pts = {
        Rational(-7, 2), Rational(-5, 3), Rational(-1, 2), Rational(1, 3), Rational(3, 4),
        Rational(9, 2),  Rational(17, 3), Rational(23, 4), Rational(31, 7), Rational(-13, 5),
        Rational(11, 6), Rational(45, 8), Rational(-2, 9), Rational(29, 3)};
    return pts;
}

inline std::string poly_detail(const Polynomial& r) {
    if (r.is_zero()) {
        return "residual 0";
    }
    return "nonzero residual of degree " + std::to_string(*r.degree());
}

inline double rel_err(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline std::string float_detail(double dev) { return "max deviation " + format_double(dev); }

} // namespace detail

class Verifier {
public:
    explicit Verifier(VerifyOptions opts) : opts_(std::move(opts)) {}

    static const std::vector<std::string>& suite_names() {
        static const std::vector<std::string> names = {
            "classical-orthogonality", "classical-structure", "classical-hypergeometric",
            "kernel-cd",               "kernel-0j",           "kernel-jj",
            "kernel-limit",            "sobolev-orthogonality", "sobolev-norm",
            "msphr",                   "ladder",              "ladder-classical",
            "recurrence",              "recurrence-classical", "mehler-heine",
            "float-meixner",           "limit-lemma",         "coefficient-limits",
            "figure"};
        return names;
    }

    VerificationReport run() {
        const std::vector<std::pair<std::string, void (Verifier::*)()>> table = {
            {"classical-orthogonality", &Verifier::classical_orthogonality},
            {"classical-structure", &Verifier::classical_structure},
            {"classical-hypergeometric", &Verifier::classical_hypergeometric},
            {"kernel-cd", &Verifier::kernel_cd_suite},
            {"kernel-0j", &Verifier::kernel_0j_suite},
            {"kernel-jj", &Verifier::kernel_jj_suite},
            {"kernel-limit", &Verifier::kernel_limit_suite},
            {"sobolev-orthogonality", &Verifier::sobolev_orthogonality},
            {"sobolev-norm", &Verifier::sobolev_norm_suite},
            {"msphr", &Verifier::msphr_suite},
            {"ladder", &Verifier::ladder_suite},
            {"ladder-classical", &Verifier::ladder_classical},
            {"recurrence", &Verifier::recurrence_suite},
            {"recurrence-classical", &Verifier::recurrence_classical},
            {"mehler-heine", &Verifier::mehler_heine},
            {"float-meixner", &Verifier::float_meixner},
            {"limit-lemma", &Verifier::limit_lemma},
            {"coefficient-limits", &Verifier::coefficient_limit_suite},
            {"figure", &Verifier::figure_suite},
        };
        for (const auto& name : opts_.suites) {
            if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
                throw InvalidParameter("unknown suite '" + name + "'");
            }
        }
        for (const auto& [name, fn] : table) {
            if (opts_.suites.empty() || opts_.suites.count(name) != 0) {
                current_ = name;
                (this->*fn)();
            }
        }
        return std::move(report_);
    }

private:
    void record(json instance, bool pass, std::string detail) {
        report_.results.push_back({current_, std::move(instance), pass, std::move(detail)});
    }

    // Runs body and turns a library exception into a failed entry.
    void guarded(const json& instance, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            record(instance, false, std::string("exception: ") + e.what());
        }
    }

    template <class F>
    void for_each_sobolev(F&& f) {
        for (const auto& sp : opts_.grid.sobolev_instances()) {
            const SobolevFamily fam(sp);
            f(fam);
        }
    }

    void classical_orthogonality() {
        const std::size_t N = opts_.grid.classical_n_max;
        for (const auto& p : opts_.grid.classical_instances()) {
            const MeixnerFamily fam(p);
            for (std::size_t n = 0; n <= N; ++n) {
                const json inst = detail::classical_instance(p, std::nullopt, n);
                guarded(inst, [&] {
                    bool ok = fam(n).is_monic() && fam(n).degree() == n;
                    std::string what = ok ? "" : "not monic of degree n; ";
                    for (std::size_t m = 0; m <= N; ++m) {
                        const Rational v = inner_product(p, fam(n), fam(m));
                        const Rational expect = m == n ? squared_norm(p, n) : Rational(0);
                        if (v != expect) {
                            ok = false;
                            what += "<M_n, M_" + std::to_string(m) + "> = " + v.str() + "; ";
                        }
                    }
                    record(inst, ok, ok ? "exact" : what);
                });
            }
        }
    }

    void classical_structure() {
        for (const auto& p : opts_.grid.classical_instances()) {
            const MeixnerFamily fam(p);
            for (const auto kind : {OperatorKind::Forward, OperatorKind::Backward}) {
                for (std::size_t n = 1; n <= opts_.grid.classical_n_max; ++n) {
                    const json inst = detail::classical_instance(p, kind, n);
                    guarded(inst, [&] {
                        Polynomial r = structure_relation_residual(fam, n, kind);
                        bool ok = r.is_zero();
                        std::string what = ok ? "" : "structure " + detail::poly_detail(r) + "; ";
                        for (std::size_t k = 0; k <= std::min<std::size_t>(n, 3); ++k) {
                            Polynomial s = shift_identity_residual(fam, n, k, kind);
                            if (!s.is_zero()) {
                                ok = false;
                                what += "shift k=" + std::to_string(k) + " " + detail::poly_detail(s) + "; ";
                            }
                        }
                        record(inst, ok, ok ? "residual 0" : what);
                    });
                }
            }
        }
    }

    void classical_hypergeometric() {
        const auto& pts = detail::probe_points();
        for (const auto& p : opts_.grid.classical_instances()) {
            const MeixnerFamily fam(p);
            for (std::size_t n = 0; n <= opts_.grid.classical_n_max; ++n) {
                const json inst = detail::classical_instance(p, std::nullopt, n);
                guarded(inst, [&] {
                    std::size_t bad = 0;
                    for (std::size_t i = 0; i < 10; ++i) {
                        bad += meixner_hypergeometric(p, n, pts[i]) != fam(n)(pts[i]);
                    }
                    record(inst, bad == 0, bad == 0 ? "10 points exact" : std::to_string(bad) + " points differ");
                });
            }
        }
    }

    void kernel_cd_suite() {
        std::mt19937 rng(20240611);
        std::uniform_int_distribution<long> num(-40, 40);
        std::uniform_int_distribution<long> den(1, 9);
        for (const auto& p : opts_.grid.classical_instances()) {
            const MeixnerFamily fam(p);
            for (std::size_t n = 0; n <= opts_.grid.classical_n_max; ++n) {
                const json inst = detail::classical_instance(p, std::nullopt, n);
                guarded(inst, [&] {
                    std::size_t bad = 0;
                    for (int t = 0; t < 5; ++t) {
                        const Rational x(num(rng), den(rng));
                        Rational y(num(rng), den(rng));
                        if (y == x) {
                            y += Rational(1, 11);
                        }
                        bad += kernel_sum(fam, n, x, y) != kernel_cd(fam, n, x, y);
                    }
                    record(inst, bad == 0, bad == 0 ? "5 point pairs exact" : std::to_string(bad) + " pairs differ");
                });
            }
        }
    }

    void kernel_0j_suite() {
        const auto& pts = detail::probe_points();
        for (const auto& p : opts_.grid.classical_instances()) {
            const MeixnerFamily fam(p);
            for (const auto kind : {OperatorKind::Forward, OperatorKind::Backward}) {
                for (std::size_t j = 0; j <= opts_.grid.kernel_j_max; ++j) {
                    for (std::size_t n = 1; n <= opts_.grid.classical_n_max; ++n) {
                        json inst = detail::classical_instance(p, kind, n);
                        inst["j"] = j;
                        guarded(inst, [&] {
                            std::size_t bad = 0;
                            for (const auto& alpha : {Rational(0), Rational(-1), Rational(-2, 5)}) {
                                for (std::size_t i = 0; i < 4; ++i) {
                                    bad += kernel_0j_closed(fam, n, j, kind, pts[i], alpha) !=
                                           kernel_partial(fam, n - 1, 0, j, kind, pts[i], alpha);
                                }
                            }
                            record(inst, bad == 0, bad == 0 ? "exact" : std::to_string(bad) + " evaluations differ");
                        });
                    }
                }
            }
        }
    }

    void kernel_jj_suite() {
        for (const auto& p : opts_.grid.classical_instances()) {
            const MeixnerFamily fam(p);
            for (std::size_t j = 0; j <= opts_.grid.kernel_j_max; ++j) {
                for (std::size_t n = 1; n <= opts_.grid.classical_n_max; ++n) {
                    json inst = detail::classical_instance(p, OperatorKind::Forward, n);
                    inst["j"] = j;
                    inst["alpha"] = "0";
                    guarded(inst, [&] {
                        const Rational closed = kernel_jj_00_closed(p, n, j);
                        const Rational direct =
                            kernel_partial(fam, n - 1, j, j, OperatorKind::Forward, Rational(0), Rational(0));
                        record(inst, closed == direct,
                               closed == direct ? "exact" : "closed " + closed.str() + " vs direct " + direct.str());
                    });
                }
            }
        }
    }

    void kernel_limit_suite() {
        const MeixnerParams p{Rational(2), Rational(1, 2)};
        for (std::size_t j = 0; j <= 2; ++j) {
            json inst = detail::classical_instance(p, OperatorKind::Forward, 200);
            inst["j"] = j;
            inst["alpha"] = "0";
            guarded(inst, [&] {
                const double limit = kernel_jj_00_limit(p, j);
                double prev = 0.0;
                bool monotone = true;
                for (std::size_t n = j + 1; n <= 200; n += 1) {
                    const double v = kernel_jj_00_closed(p, n, j).to_double();
                    monotone = monotone && v >= prev && v <= limit * (1.0 + 1e-15);
                    prev = v;
                }
                const double dev = detail::rel_err(prev, limit);
                const bool ok = monotone && dev <= opts_.tol;
                record(inst, ok, detail::float_detail(dev) + (monotone ? "" : "; partial sums not bounded"));
            });
        }
    }

    void sobolev_orthogonality() {
        for_each_sobolev([&](const SobolevFamily& fam) {
            for (std::size_t n = 0; n <= opts_.grid.sobolev_n_max; ++n) {
                const json inst = instance_json(fam.params(), n);
                guarded(inst, [&] {
                    const Polynomial& q = fam(n);
                    bool ok = q.is_monic() && q.degree() == n;
                    std::string what;
                    for (std::size_t m = 0; m < n; ++m) {
                        const Rational v = sobolev_inner_product(fam, q, Polynomial::monomial(m));
                        if (!v.is_zero()) {
                            ok = false;
                            what += "<Q_n, x^" + std::to_string(m) + "> = " + v.str() + "; ";
                        }
                    }
                    record(inst, ok, ok ? "exact" : what);
                });
            }
        });
    }

    void sobolev_norm_suite() {
        for_each_sobolev([&](const SobolevFamily& fam) {
            for (std::size_t n = 0; n <= opts_.grid.sobolev_n_max; ++n) {
                const json inst = instance_json(fam.params(), n);
                guarded(inst, [&] {
                    const Rational closed = sobolev_norm(fam, n);
                    const Rational direct = sobolev_inner_product(fam, fam(n), fam(n));
                    record(inst, closed == direct,
                           closed == direct ? "exact" : "formula " + closed.str() + " vs direct " + direct.str());
                });
            }
        });
    }

    void msphr_suite() {
        const auto& pts = detail::probe_points();
        for_each_sobolev([&](const SobolevFamily& fam) {
            for (std::size_t n = 1; n <= opts_.grid.msphr_n_max; ++n) {
                const json inst = instance_json(fam.params(), n);
                guarded(inst, [&] {
                    std::size_t used = 0;
                    std::size_t bad = 0;
                    for (std::size_t i = 0; i < pts.size() && used < 10; ++i) {
                        try {
                            bad += msphr_eval(fam, n, pts[i]) != fam(n)(pts[i]);
                            ++used;
                        } catch (const DegenerateRepresentation&) {
                        }
                    }
                    const bool ok = bad == 0 && used == 10;
                    record(inst, ok,
                           std::to_string(used) + " points, " + std::to_string(bad) + " mismatches");
                });
            }
        });
    }

    void ladder_suite() {
        for_each_sobolev([&](const SobolevFamily& fam) {
            const auto kind = fam.params().kind;
            for (std::size_t n = 2; n <= opts_.grid.ladder_n_max; ++n) {
                const json inst = instance_json(fam.params(), n);
                guarded(inst, [&] {
                    const LadderData L = ladder_coeffs(fam, n);
                    std::string what;
                    if (!annihilation_residual(fam, L).is_zero()) {
                        what += "annihilation; ";
                    }
                    if (!creation_residual(fam, L).is_zero()) {
                        what += "creation; ";
                    }
                    const SecondOrderCoeffs c = second_order_coeffs(L, kind);
                    if (!second_order_residual(fam, n, c).is_zero()) {
                        what += "second-order; ";
                    }
                    const auto [C1p, D1p] = difference_image_printed(fam, n);
                    if (!(C1p == L.C1) || !(D1p == L.D1)) {
                        what += "printed C1/D1 differ from the rederived ones; ";
                    }
                    if (!proportional(c, second_order_via_shifts(L, kind))) {
                        what += "second-order coefficients disagree with the shift-basis route; ";
                    }
                    record(inst, what.empty(), what.empty() ? "all residuals 0" : "nonzero: " + what);
                });
            }
        });
    }

    // lambda = 0: A1 = 1, B1 = 0, C1 = n, D1 = e_n, i.e. the classical structure relation.
    void ladder_classical() {
        VerifyGrid g = opts_.grid;
        g.lambdas = {Rational(0)};
        for (const auto& sp : g.sobolev_instances()) {
            const SobolevFamily fam(sp);
            for (std::size_t n = 2; n <= g.ladder_n_max; ++n) {
                const json inst = instance_json(sp, n);
                guarded(inst, [&] {
                    const LadderData L = ladder_coeffs(fam, n);
                    const Rational nn(static_cast<long>(n));
                    const bool ok = L.A1 == RationalFunction(1) && L.B1.is_zero() && L.C1 == RationalFunction(nn) &&
                                    L.D1 == RationalFunction(detail::structure_tail(sp, n)) &&
                                    annihilation_residual(fam, L).is_zero() && creation_residual(fam, L).is_zero();
                    record(inst, ok, ok ? "reduces to the classical structure relation" : "mismatch");
                });
            }
        }
    }

    void recurrence_suite() {
        for_each_sobolev([&](const SobolevFamily& fam) {
            const std::size_t j = fam.params().j;
            for (std::size_t n = 0; n <= opts_.grid.recurrence_n_max; ++n) {
                const json inst = instance_json(fam.params(), n);
                guarded(inst, [&] {
                    const RecurrenceRow row = recurrence_row(fam, n);
                    std::string what;
                    const Polynomial r = recurrence_residual(fam, row);
                    if (!r.is_zero()) {
                        what += "identity " + detail::poly_detail(r) + "; ";
                    }
                    for (std::size_t k = 0; k + j + 1 < n; ++k) {
                        if (!fourier_coefficient(fam, n, k).is_zero()) {
                            what += "band k=" + std::to_string(k) + " nonzero; ";
                        }
                    }
                    for (const auto& [k, c] : row.coeffs) {
                        const ExpandedCoefficients e = expanded_coefficient(fam, n, k);
                        for (const auto& o : {e.top, e.upper_band, e.n_minus_j, e.bottom}) {
                            if (o && *o != c) {
                                what += "expanded c_{n," + std::to_string(k) + "} = " + o->str() + " vs " + c.str() +
                                        "; ";
                            }
                        }
                    }
                    record(inst, what.empty(), what.empty() ? "residual 0" : what);
                });
            }
        });
    }

    // j = 0, lambda = 0: c_{n,n} = alpha_n - alpha and c_{n,n-1} = beta_n.
    void recurrence_classical() {
        VerifyGrid g = opts_.grid;
        g.lambdas = {Rational(0)};
        g.js = {0};
        for (const auto& sp : g.sobolev_instances()) {
            const SobolevFamily fam(sp);
            for (std::size_t n = 1; n <= g.recurrence_n_max; ++n) {
                const json inst = instance_json(sp, n);
                guarded(inst, [&] {
                    const RecurrenceRow row = recurrence_row(fam, n);
                    const auto [a, b] = recurrence_coeffs(sp.base, n);
                    const bool ok = row.coeffs.size() == 2 && row.coeffs.at(n) == a - sp.alpha &&
                                    row.coeffs.at(n - 1) == b;
                    record(inst, ok, ok ? "matches the three-term recurrence" : "mismatch");
                });
            }
        }
    }

    // Instances of the Sobolev grid that the asymptotic results cover.
    [[nodiscard]] std::vector<SobolevParams> asymptotic_instances() const {
        VerifyGrid g = opts_.grid;
        g.alphas = {Rational(0)};
        g.kinds = {OperatorKind::Forward};
        return g.sobolev_instances();
    }

    void mehler_heine() {
        for (const auto& sp : asymptotic_instances()) {
            for (const double x : {0.25, 0.5, 0.75}) {
                json inst = instance_json(sp, 800);
                inst["x"] = x;
                guarded(inst, [&] {
                    const double d100 = std::abs(mh_ratio_sobolev(sp, 100, x) - 1.0);
                    const double d800 = std::abs(mh_ratio_sobolev(sp, 800, x) - 1.0);
                    const double m800 = std::abs(mh_ratio_meixner(sp.base, 800, x) - 1.0);
                    const bool ok = d800 < d100 && std::isfinite(d800);
                    record(inst, ok,
                           "|ratio-1| n=100: " + format_double(d100) + ", n=800: " + format_double(d800) +
                               ", classical n=800: " + format_double(m800));
                });
            }
        }
    }

    // Deviation is measured against (|x| + |alpha_{n-1}|) |M_{n-1}(x)| + beta_{n-1} |M_{n-2}(x)|, the size of the
    // terms whose difference gives M_n(x); plain relative error is meaningless at a root.
    void float_meixner() {
        for (const auto& p : opts_.grid.classical_instances()) {
            for (const double x : {-2.5, -0.5, 0.25, 0.5, 0.75}) {
                json inst = detail::classical_instance(p, std::nullopt, 50);
                inst["x"] = x;
                guarded(inst, [&] {
                    record(inst, float_meixner_deviation(p, 50, x) <= opts_.tol,
                           detail::float_detail(float_meixner_deviation(p, 50, x)));
                });
            }
        }
    }

public:
    static double float_meixner_deviation(const MeixnerParams& p, std::size_t n_max, double x) {
        const MeixnerFamily fam(p);
        const Rational xr = Rational::from_double(x);
        double dev = 0.0;
        for (std::size_t n = 0; n <= n_max; ++n) {
            const Rational exact = fam(n)(xr);
            Rational scale = abs(exact);
            if (n >= 1) {
                const auto [a, b] = recurrence_coeffs(p, n - 1);
                scale = (abs(xr) + abs(a)) * abs(fam(n - 1)(xr));
                if (n >= 2) {
                    scale += b * abs(fam(n - 2)(xr));
                }
            }
            const double err = std::abs(meixner_float(p, n, x) - exact.to_double());
            dev = std::max(dev, err / scale.to_double());
        }
        return dev;
    }

private:
    void limit_lemma() {
        for (const auto& p : opts_.grid.classical_instances()) {
            for (std::size_t j = 0; j <= opts_.grid.kernel_j_max; ++j) {
                for (std::size_t k = 0; k <= j; ++k) {
                    json inst = detail::classical_instance(p, OperatorKind::Forward, 1000);
                    inst["j"] = j;
                    inst["k"] = k;
                    guarded(inst, [&] {
                        const auto rows = limit_lemma_sequences(p, j, k, 1000);
                        // Eventually monotone: strictly decreasing over the last half.
                        bool monotone = true;
                        for (std::size_t i = rows.size() / 2 + 1; i < rows.size(); ++i) {
                            // after underflow to 0 the sequence can only stay at 0
                            const auto down = [](double cur, double prev) { return prev == 0.0 ? cur == 0.0 : cur < prev; };
                            monotone = monotone && down(rows[i].first, rows[i - 1].first) &&
                                       down(rows[i].second, rows[i - 1].second);
                        }
                        const auto& last = rows.back();
                        const bool ok = monotone && last.first < 1e-8 && last.second < 1e-8;
                        record(inst, ok,
                               "n=1000: " + format_double(last.first) + ", " + format_double(last.second) +
                                   (monotone ? "" : "; not decreasing"));
                    });
                }
            }
        }
    }

    void coefficient_limit_suite() {
        for (const auto& sp : asymptotic_instances()) {
            const json inst = instance_json(sp, 400);
            guarded(inst, [&] {
                const auto rows = coefficient_limits(sp, 400);
                const auto& r50 = rows[49];
                const auto& r400 = rows[399];
                const bool ok = r400.a_sup < r50.a_sup && r400.b_sup < r50.b_sup;
                record(inst, ok,
                       "a_sup n=50: " + format_double(r50.a_sup) + ", n=400: " + format_double(r400.a_sup) +
                           "; b_sup n=50: " + format_double(r50.b_sup) + ", n=400: " + format_double(r400.b_sup));
            });
        }
    }

    void figure_suite() {
        const auto xs = figure_x_grid();
        for (const std::size_t n : {50, 70, 100, 150}) {
            const json inst = instance_json(figure_params(), n);
            guarded(inst, [&] {
                const auto rows = figure_rows(n, xs);
                double dev = 0.0;
                for (std::size_t i = 0; i + 2 < rows.size(); i += 3) {
                    dev = std::max(dev, detail::rel_err(rows[i].row.lhs, rows[i + 1].row.lhs));
                }
                record(inst, dev <= 1e-15, "sobolev vs classical " + detail::float_detail(dev));
            });
        }
    }

    VerifyOptions opts_;
    VerificationReport report_;
    std::string current_;
};

inline VerificationReport verify(VerifyOptions opts) { return Verifier(std::move(opts)).run(); }

} // namespace msop
