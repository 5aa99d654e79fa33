#include "xchannel/rational.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace xchan {

namespace {

std::int64_t checked_cast(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a == 0 ? 1 : a;
}

Rational reduced(__int128 n, __int128 d) {
    __int128 g = gcd128(n, d);
    return Rational(checked_cast(n / g), checked_cast(d / g));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return reduced(n, d);
}

Rational Rational::operator-(const Rational& o) const { return *this + Rational(-o.num_, o.den_); }

Rational Rational::operator*(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return reduced(n, d);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            size_t pos = 0;
            std::int64_t n = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument("trailing characters");
            return Rational(n);
        }
        size_t p1 = 0, p2 = 0;
        std::int64_t n = std::stoll(text.substr(0, slash), &p1);
        std::int64_t d = std::stoll(text.substr(slash + 1), &p2);
        if (p1 != slash || p2 != text.size() - slash - 1) throw std::invalid_argument("trailing characters");
        return Rational(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    }
}

RationalApprox rational_from_double(double x, std::int64_t max_den) {
    if (max_den < 1) max_den = 1;
    bool neg = x < 0;
    double v = neg ? -x : x;

    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 9.2e18) break;
        std::int64_t a = static_cast<std::int64_t>(fl);
        __int128 p2 = static_cast<__int128>(a) * p1 + p0;
        __int128 q2 = static_cast<__int128>(a) * q1 + q0;
        if (q2 > max_den || p2 > INT64_MAX) break;
        p0 = p1;
        q0 = q1;
        p1 = static_cast<std::int64_t>(p2);
        q1 = static_cast<std::int64_t>(q2);
        double rem = frac - fl;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) {
        Rational r(p0, q0 == 0 ? 1 : q0);
        return {neg ? -r : r, r.to_double() == v};
    }
    Rational r(neg ? -p1 : p1, q1);
    return {r, r.to_double() == x};
}

}  // namespace xchan
