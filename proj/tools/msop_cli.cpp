// msop: command-line front end for the Meixner-Sobolev library.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "msop/msop.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadArgs = 2;
constexpr int kIoError = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<std::string> gamma, mu, lambda, alpha, op;
    std::optional<std::size_t> j;
    std::size_t n = 0;
    std::vector<std::size_t> degrees;
    std::size_t n_max = 8;
    std::vector<std::string> xs;
    std::string out;
    std::string format;
    std::vector<std::string> suites;
    bool deep = false;
    bool ode = false;
    double tol = 1e-10;
    std::string preset;
};

msop::Rational rational_arg(const std::optional<std::string>& s, const char* name, const char* fallback) {
    try {
        return msop::Rational::parse(s ? *s : std::string(fallback));
    } catch (const std::exception& e) {
        throw msop::InvalidParameter(std::string("--") + name + ": " + e.what());
    }
}

msop::MeixnerParams meixner_of(const Options& o) {
    if (!o.gamma || !o.mu) {
        throw msop::InvalidParameter("--gamma and --mu are required");
    }
    return {rational_arg(o.gamma, "gamma", "0"), rational_arg(o.mu, "mu", "0")};
}

msop::SobolevParams sobolev_of(const Options& o) {
    return {meixner_of(o), rational_arg(o.lambda, "lambda", "0"), o.j.value_or(0), rational_arg(o.alpha, "alpha", "0"),
            msop::parse_operator_kind(o.op.value_or("forward"))};
}

bool has_sobolev_flags(const Options& o) { return o.lambda || o.j || o.alpha || o.op; }

std::vector<double> double_list(const std::vector<std::string>& xs) {
    std::vector<double> out;
    for (const auto& s : xs) {
        out.push_back(msop::Rational::parse(s).to_double());
    }
    return out;
}

std::string expect_format(const Options& o, const std::string& fallback) {
    const std::string f = o.format.empty() ? fallback : o.format;
    if (f != "csv" && f != "json") {
        throw msop::InvalidParameter("--format must be csv or json");
    }
    return f;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        throw IoError("cannot open " + o.out);
    }
    f << text;
    if (!f.flush()) {
        throw IoError("write to " + o.out + " failed");
    }
}

std::string poly_csv(std::size_t n, const msop::Polynomial& p) {
    std::ostringstream os;
    const auto c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        os << n << ',' << k << ',' << c[k].str() << '\n';
    }
    return os.str();
}

msop::json with_values(msop::json o, const msop::Polynomial& p, const std::vector<std::string>& xs) {
    if (xs.empty()) {
        return o;
    }
    msop::json vals = msop::json::array();
    for (const auto& s : xs) {
        const msop::Rational x = msop::Rational::parse(s);
        vals.push_back({{"x", x.str()}, {"value", p(x).str()}});
    }
    o["values"] = std::move(vals);
    return o;
}

int run_eval(const Options& o) {
    const std::string fmt = expect_format(o, "json");
    if (!has_sobolev_flags(o)) {
        const msop::MeixnerFamily fam(meixner_of(o));
        emit(o, fmt == "csv" ? "n,k,c\n" + poly_csv(o.n, fam(o.n))
                             : with_values(msop::meixner_dump(fam, o.n), fam(o.n), o.xs).dump(2) + "\n");
        return kOk;
    }
    const msop::SobolevFamily fam(sobolev_of(o));
    if (fmt == "csv") {
        emit(o, "n,k,c\n" + poly_csv(o.n, fam(o.n)));
        return kOk;
    }
    msop::json j = with_values(msop::sobolev_dump(fam, o.n), fam(o.n), o.xs);
    if (o.ode) {
        const msop::LadderData L = msop::ladder_coeffs(fam, o.n);
        j["second_order"] = msop::second_order_dump(msop::second_order_coeffs(L, fam.params().kind));
    }
    emit(o, j.dump(2) + "\n");
    return kOk;
}

int run_table(const Options& o) {
    const std::string fmt = expect_format(o, "json");
    std::string text = fmt == "csv" ? "n,k,c\n" : "";
    msop::json arr = msop::json::array();
    if (!has_sobolev_flags(o)) {
        const msop::MeixnerFamily fam(meixner_of(o));
        for (std::size_t n = 0; n <= o.n_max; ++n) {
            fmt == "csv" ? void(text += poly_csv(n, fam(n))) : arr.push_back(msop::meixner_dump(fam, n));
        }
    } else {
        const msop::SobolevFamily fam(sobolev_of(o));
        for (std::size_t n = 0; n <= o.n_max; ++n) {
            fmt == "csv" ? void(text += poly_csv(n, fam(n))) : arr.push_back(msop::sobolev_dump(fam, n));
        }
    }
    emit(o, fmt == "csv" ? text : arr.dump(2) + "\n");
    return kOk;
}

msop::VerifyGrid grid_of(const Options& o) {
    msop::VerifyGrid g = o.deep ? msop::VerifyGrid::deep() : msop::VerifyGrid::standard();
    if (o.gamma) {
        g.gammas = g.classical_gammas = {rational_arg(o.gamma, "gamma", "0")};
    }
    if (o.mu) {
        g.mus = g.classical_mus = {rational_arg(o.mu, "mu", "0")};
    }
    if (o.lambda) {
        g.lambdas = {rational_arg(o.lambda, "lambda", "0")};
    }
    if (o.j) {
        g.js = {*o.j};
    }
    if (o.alpha) {
        g.alphas = {rational_arg(o.alpha, "alpha", "0")};
    }
    if (o.op) {
        g.kinds = {msop::parse_operator_kind(*o.op)};
    }
    // Validate the overridden grid before doing any work.
    (void)g.sobolev_instances();
    (void)g.classical_instances();
    return g;
}

int run_verify(const Options& o) {
    msop::VerifyOptions vo;
    vo.grid = grid_of(o);
    vo.suites.insert(o.suites.begin(), o.suites.end());
    vo.tol = o.tol;
    const msop::VerificationReport report = msop::verify(vo);
    emit(o, report.to_json().dump(2) + "\n");
    for (const auto& r : report.results) {
        if (!r.pass) {
            std::cerr << "FAIL " << r.suite << ' ' << r.instance.dump() << ": " << r.detail << '\n';
        }
    }
    std::cerr << report.results.size() - report.failures() << '/' << report.results.size() << " checks passed\n";
    return report.all_passed() ? kOk : kVerifyFailed;
}

int run_recurrence(const Options& o) {
    const std::string fmt = expect_format(o, "csv");
    const msop::SobolevFamily fam(sobolev_of(o));
    std::vector<msop::RecurrenceRow> rows;
    for (std::size_t n = 0; n <= o.n_max; ++n) {
        rows.push_back(msop::recurrence_row(fam, n));
    }
    if (fmt == "csv") {
        std::ostringstream os;
        msop::write_recurrence_csv(os, rows);
        emit(o, os.str());
        return kOk;
    }
    msop::json arr = msop::json::array();
    for (const auto& r : rows) {
        for (const auto& [k, c] : r.coeffs) {
            arr.push_back({{"n", r.n}, {"k", k}, {"c", c.str()}});
        }
    }
    emit(o, arr.dump(2) + "\n");
    return kOk;
}

int run_mehler_heine(const Options& o) {
    expect_format(o, "csv");
    if (o.format == "json") {
        throw msop::InvalidParameter("mehler-heine writes csv only");
    }
    std::vector<std::size_t> degrees = o.degrees;
    if (degrees.empty()) {
        degrees = {50, 100, 200, 400, 800};
    }
    const std::vector<double> xs = o.xs.empty() ? std::vector<double>{0.25, 0.5, 0.75} : double_list(o.xs);
    std::ostringstream os;
    msop::write_mh_header(os);
    if (!has_sobolev_flags(o)) {
        const msop::MeixnerParams p = meixner_of(o);
        for (const double x : xs) {
            for (const std::size_t n : degrees) {
                msop::write_mh_row(os, msop::mh_row_meixner(p, n, x));
            }
        }
    } else {
        const msop::SobolevParams sp = sobolev_of(o);
        for (const double x : xs) {
            for (const auto& r : msop::mh_series(sp, x, degrees).rows) {
                msop::write_mh_row(os, r);
            }
        }
    }
    emit(o, os.str());
    return kOk;
}

int run_figure(const Options& o) {
    if (o.preset != "paper") {
        throw msop::InvalidParameter("--preset must be 'paper'");
    }
    if (!o.format.empty() && o.format != "csv") {
        throw msop::InvalidParameter("figure writes csv only");
    }
    std::vector<std::size_t> degrees = o.degrees;
    if (degrees.empty()) {
        degrees = {50, 70, 100, 150};
    }
    const std::vector<double> xs = o.xs.empty() ? msop::figure_x_grid() : double_list(o.xs);
    std::ostringstream os;
    msop::write_mh_header(os, true);
    for (const std::size_t n : degrees) {
        for (const auto& r : msop::figure_rows(n, xs)) {
            msop::write_mh_row(os, r.row, r.series);
        }
    }
    emit(o, os.str());
    return kOk;
}

void add_params(CLI::App* cmd, Options& o) {
    cmd->add_option("--gamma", o.gamma, "gamma > 0 (exact rational, e.g. 7 or 5/2)");
    cmd->add_option("--mu", o.mu, "0 < mu < 1 (e.g. 1/5)");
    cmd->add_option("--lambda", o.lambda, "lambda >= 0 (e.g. 1e-21); any Sobolev flag selects Q_n");
    cmd->add_option("--j", o.j, "difference order j >= 0");
    cmd->add_option("--alpha", o.alpha, "point alpha <= 0");
    cmd->add_option("--op", o.op, "forward | backward");
    cmd->add_option("--out", o.out, "output file (default stdout)");
    cmd->add_option("--format", o.format, "csv | json");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Meixner and Meixner-Sobolev orthogonal polynomials in exact arithmetic"};
    app.require_subcommand(1);
    Options o;

    auto* eval = app.add_subcommand("eval", "coefficients (and optional values) of one polynomial");
    add_params(eval, o);
    eval->add_option("--n", o.n, "degree")->required();
    eval->add_option("--x", o.xs, "evaluation points (exact rationals)");
    eval->add_flag("--ode", o.ode, "include the second-order difference equation coefficients (n >= 2)");

    auto* table = app.add_subcommand("table", "coefficients for degrees 0..n-max");
    add_params(table, o);
    table->add_option("--n-max", o.n_max, "largest degree");

    auto* ver = app.add_subcommand("verify", "run the identity suites and write a JSON report");
    add_params(ver, o);
    ver->add_option("--suite", o.suites, "suite name (repeatable; default all)");
    ver->add_flag("--deep", o.deep, "larger grid and degrees");
    ver->add_option("--tol", o.tol, "tolerance for floating-point suites");

    auto* rec = app.add_subcommand("recurrence", "coefficients c_{n,k} of the (2j+3)-term recurrence");
    add_params(rec, o);
    rec->add_option("--n-max", o.n_max, "largest n");

    auto* mh = app.add_subcommand("mehler-heine", "Mehler-Heine ratio CSV");
    add_params(mh, o);
    mh->add_option("--n", o.degrees, "degrees (repeatable)");
    mh->add_option("--x", o.xs, "points, not nonnegative integers");

    auto* fig = app.add_subcommand("figure", "Mehler-Heine limit plot data (fixed preset)");
    fig->add_option("--preset", o.preset, "paper")->required();
    fig->add_option("--n", o.degrees, "degrees (default 50 70 100 150)");
    fig->add_option("--x", o.xs, "abscissae (default -2.95..2.95 step 0.1)");
    fig->add_option("--out", o.out, "output file (default stdout)");
    fig->add_option("--format", o.format, "csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadArgs;
    }

    try {
        if (*eval) {
            return run_eval(o);
        }
        if (*table) {
            return run_table(o);
        }
        if (*ver) {
            return run_verify(o);
        }
        if (*rec) {
            return run_recurrence(o);
        }
        if (*mh) {
            return run_mehler_heine(o);
        }
        return run_figure(o);
    } catch (const IoError& e) {
        std::cerr << "msop: " << e.what() << '\n';
        return kIoError;
    } catch (const msop::Error& e) {
        std::cerr << "msop: " << e.what() << '\n';
        return kBadArgs;
    } catch (const std::invalid_argument& e) {
        std::cerr << "msop: " << e.what() << '\n';
        return kBadArgs;
    } catch (const std::domain_error& e) {
        std::cerr << "msop: " << e.what() << '\n';
        return kBadArgs;
    }
}
