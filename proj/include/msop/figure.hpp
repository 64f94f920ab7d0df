#pragma once

#include <string>
#include <vector>

#include "msop/asymptotics.hpp"

namespace msop {

struct FigureRow {
    std::string series;  // "sobolev", "meixner" or "companion"
    MHRow row;
};

/// Parameters of the limit plot preset: gamma = 7, mu = 1/5, lambda = 10^-21, j = 177.
/// Since n <= 150 < j there, Q_n = M_n and the plots cannot tell the two apart.
inline SobolevParams figure_params() {
    return {MeixnerParams{Rational(7), Rational(1, 5)}, Rational::parse("1e-21"), 177, Rational(0),
            OperatorKind::Forward};
}

/// Same weight with j = 30 and lambda = 1. The Sobolev correction is visible at
/// n = 50 and has died out by n = 150; with small j it is below double precision
/// already at n = 50.
inline SobolevParams companion_params() {
    return {MeixnerParams{Rational(7), Rational(1, 5)}, Rational(1), 30, Rational(0), OperatorKind::Forward};
}

/// Abscissae -2.95, -2.85, ..., 2.95. Offsets keep clear of the poles of Gamma(-x).
inline std::vector<double> figure_x_grid() {
    std::vector<double> xs;
    for (int k = -295; k <= 295; k += 10) {
        xs.push_back(k / 100.0);
    }
    return xs;
}

inline std::vector<FigureRow> figure_rows(std::size_t n, const std::vector<double>& xs) {
    const SobolevParams fig = figure_params();
    const SobolevParams comp = companion_params();
    std::vector<FigureRow> rows;
    rows.reserve(3 * xs.size());
    for (const double x : xs) {
        rows.push_back({"sobolev", mh_row_sobolev(fig, n, x)});
        rows.push_back({"meixner", mh_row_meixner(fig.base, n, x)});
        rows.push_back({"companion", mh_row_sobolev(comp, n, x)});
    }
    return rows;
}

} // namespace msop
