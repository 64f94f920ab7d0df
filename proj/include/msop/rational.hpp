#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "msop/errors.hpp"

namespace msop {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (zero is 0/1).
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(mpz_from(v)) {}
    Rational(unsigned long v) : q_(v) {}
    Rational(const mpz_class& v) : q_(v) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    /// Exact conversion of a finite double (every double is a dyadic rational).
    static Rational from_double(double v) {
        Rational r;
        r.q_ = mpq_class(v);
        return r;
    }

    /// Parses "p/q", "p", decimals "0.25" and scientific "1e-21" exactly.
    static Rational parse(std::string_view s);

    [[nodiscard]] mpz_class num() const { return q_.get_num(); }
    [[nodiscard]] mpz_class den() const { return q_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }

    [[nodiscard]] double to_double() const { return q_.get_d(); }

    /// "p/q", or "p" when q == 1.
    [[nodiscard]] std::string str() const {
        if (is_integer()) {
            return q_.get_num().get_str(10);
        }
        return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
    }

    Rational operator-() const {
        Rational r;
        r.q_ = -q_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw std::domain_error("rational division by zero");
        }
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    [[nodiscard]] const mpq_class& raw() const { return q_; }

private:
    static mpz_class mpz_from(long long v) {
        return mpz_class(std::to_string(v), 10);
    }

    mpq_class q_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Integer power; negative exponents invert (base must then be nonzero).
inline Rational pow(const Rational& base, long e) {
    if (e < 0) {
        return Rational(1) / pow(base, -e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

inline Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline Rational binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

namespace detail {

// Parses an optionally signed decimal with optional fraction and exponent.
inline Rational parse_decimal(std::string_view s) {
    if (s.empty()) {
        throw InvalidParameter("empty number");
    }
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    std::string digits;
    long scale = 0;
    bool seen_digit = false;
    bool in_fraction = false;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (in_fraction) {
                --scale;
            }
        } else if (c == '.' && !in_fraction) {
            in_fraction = true;
        } else {
            break;
        }
    }
    if (!seen_digit) {
        throw InvalidParameter("malformed number '" + std::string(s) + "'");
    }
    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') {
            throw InvalidParameter("malformed number '" + std::string(s) + "'");
        }
        ++pos;
        std::string_view ex = s.substr(pos);
        if (ex.empty()) {
            throw InvalidParameter("malformed exponent in '" + std::string(s) + "'");
        }
        std::size_t epos = 0;
        bool eneg = false;
        if (ex[0] == '+' || ex[0] == '-') {
            eneg = ex[0] == '-';
            epos = 1;
        }
        if (epos >= ex.size()) {
            throw InvalidParameter("malformed exponent in '" + std::string(s) + "'");
        }
        long e = 0;
        for (; epos < ex.size(); ++epos) {
            if (ex[epos] < '0' || ex[epos] > '9' || e > 100000) {
                throw InvalidParameter("malformed exponent in '" + std::string(s) + "'");
            }
            e = e * 10 + (ex[epos] - '0');
        }
        scale += eneg ? -e : e;
    }
    Rational r(mpz_class(digits, 10));
    r *= pow(Rational(10), scale);
    return negative ? -r : r;
}

} // namespace detail

inline Rational Rational::parse(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return detail::parse_decimal(s);
    }
    const Rational num = detail::parse_decimal(s.substr(0, slash));
    const Rational den = detail::parse_decimal(s.substr(slash + 1));
    if (den.is_zero()) {
        throw InvalidParameter("zero denominator in '" + std::string(s) + "'");
    }
    return num / den;
}

} // namespace msop
