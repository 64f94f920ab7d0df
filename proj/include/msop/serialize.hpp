#pragma once

#include <charconv>
#include <ostream>
#include <string>
#include <system_error>

#include <json.hpp>

#include "msop/asymptotics.hpp"
#include "msop/ladder.hpp"
#include "msop/recurrence.hpp"

namespace msop {

using json = nlohmann::ordered_json;

/// Shortest decimal string that round-trips to the same double.
inline std::string format_double(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    if (r.ec != std::errc{}) {
        throw std::runtime_error("double formatting failed");
    }
    return {buf, r.ptr};
}

/// Coefficients as exact strings, index = power. The zero polynomial is [].
inline json to_json(const Polynomial& p) {
    json a = json::array();
    for (const auto& c : p.coefficients()) {
        a.push_back(c.str());
    }
    return a;
}

inline Polynomial polynomial_from_json(const json& a) {
    std::vector<Rational> c;
    for (const auto& s : a) {
        c.push_back(Rational::parse(s.get<std::string>()));
    }
    return Polynomial(std::move(c));
}

inline json to_json(const RationalFunction& f) {
    return json{{"num_coefficients", to_json(f.num())}, {"den_coefficients", to_json(f.den())}};
}

inline json meixner_dump(const MeixnerFamily& fam, std::size_t n) {
    return json{{"gamma", fam.params().gamma.str()},
                {"mu", fam.params().mu.str()},
                {"n", n},
                {"coefficients", to_json(fam(n))}};
}

inline json instance_json(const SobolevParams& sp, std::size_t n) {
    return json{{"gamma", sp.base.gamma.str()}, {"mu", sp.base.mu.str()}, {"lambda", sp.lambda.str()},
                {"j", sp.j},                    {"alpha", sp.alpha.str()}, {"i", static_cast<int>(sp.kind)},
                {"n", n}};
}

inline json sobolev_dump(const SobolevFamily& fam, std::size_t n) {
    json o = instance_json(fam.params(), n);
    o["coefficients"] = to_json(fam(n));
    o["norm"] = sobolev_norm(fam, n).str();
    return o;
}

inline json second_order_dump(const SecondOrderCoeffs& c) {
    return json{{"F", to_json(c.F)}, {"G", to_json(c.G)}, {"H", to_json(c.H)}};
}

inline void write_recurrence_csv(std::ostream& os, const std::vector<RecurrenceRow>& rows) {
    os << "n,k,c\n";
    for (const auto& r : rows) {
        for (const auto& [k, c] : r.coeffs) {
            os << r.n << ',' << k << ',' << c.str() << '\n';
        }
    }
}

inline void write_mh_header(std::ostream& os, bool with_series = false) {
    if (with_series) {
        os << "series,";
    }
    os << "n,x,lhs,rhs,ratio\n";
}

inline void write_mh_row(std::ostream& os, const MHRow& r, const std::string& series = {}) {
    if (!series.empty()) {
        os << series << ',';
    }
    os << r.n << ',' << format_double(r.x) << ',' << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
       << format_double(r.ratio) << '\n';
}

} // namespace msop
