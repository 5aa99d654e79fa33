#pragma once

#include <cstdint>
#include <string>

namespace xchan {

// Exact rational on int64 with a normalized (gcd-reduced, positive denominator)
// representation. Intermediate products go through __int128 so that the level
// counts and GDOF exponents this library works with can never overflow.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "22" or "58/3"
    std::string str() const;
    static Rational parse(const std::string& text);

private:
    std::int64_t num_;
    std::int64_t den_;
    void normalize();
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Continued-fraction approximation with bounded denominator. `exact` is set
// when the double was reproduced bit-for-bit by the returned rational.
struct RationalApprox {
    Rational value;
    bool exact;
};
RationalApprox rational_from_double(double x, std::int64_t max_den = 1000000);

}  // namespace xchan
