#include "xchannel/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace xchan {

namespace {
const Rational kHalf(1, 2);
const Rational kOne(1);
const Rational kTwo(2);

double log2_1p(double x) { return std::log2(1.0 + x); }
}  // namespace

GaussParams SymGaussParams::to_gauss() const {
    GaussParams g;
    g.h11 = g.h22 = std::sqrt(rho);
    g.h12 = g.h21 = std::sqrt(std::pow(rho, alpha));
    g.p1 = g.p2 = 1.0;
    return g;
}

GdofValue gdof(const Rational& alpha) {
    if (alpha < Rational(0)) throw std::domain_error("alpha must be nonnegative");
    if (alpha < kHalf) return {kTwo - kTwo * alpha, "2-2a"};
    if (alpha < Rational(3, 4)) return {kTwo * alpha, "2a"};
    if (alpha < kOne) return {kTwo - Rational(2, 3) * alpha, "2-2a/3"};
    if (alpha == kOne) return {kOne, "1"};
    if (alpha <= Rational(4, 3)) return {kTwo * alpha - Rational(2, 3), "2a-2/3"};
    if (alpha <= kTwo) return {kTwo, "2"};
    return {kTwo * alpha - kTwo, "2a-2"};
}

Rational gdof_outer(const Rational& alpha) {
    if (alpha < Rational(0)) throw std::domain_error("alpha must be nonnegative");
    if (alpha == kOne) return kOne;  // receivers coincide; MAC bound applies
    if (alpha > kOne) return alpha * gdof_outer(kOne / alpha);
    Rational a = max(alpha, kOne - alpha);
    Rational b = kOne - alpha / Rational(3);
    return kTwo * min(a, b);
}

Rational gdof_ic(const Rational& alpha) {
    if (alpha < Rational(0)) throw std::domain_error("alpha must be nonnegative");
    if (alpha > kOne) return alpha * gdof_ic(kOne / alpha);
    if (alpha < kHalf) return kTwo - kTwo * alpha;
    if (alpha < Rational(2, 3)) return kTwo * alpha;
    return kTwo - alpha;
}

GdofFromDouble gdof_from_double(double alpha) {
    auto approx = rational_from_double(alpha);
    return {approx.value, approx.exact, gdof(approx.value)};
}

std::array<double, 2> etw_outer_bounds(const GaussParams& g) {
    double s11 = g.h11 * g.h11 * g.p1;
    double s12 = g.h12 * g.h12 * g.p2;
    double s21 = g.h21 * g.h21 * g.p1;
    double s22 = g.h22 * g.h22 * g.p2;
    double b1 = 0.5 * log2_1p(s12 + s11 / (1.0 + s21)) + 0.5 * log2_1p(s21 + s22 / (1.0 + s12));
    double b2 = 0.5 * log2_1p(s11 + s12 / (1.0 + s22)) + 0.5 * log2_1p(s22 + s21 / (1.0 + s11));
    return {b1, b2};
}

std::vector<GaussBound> known_outer_bounds(const GaussParams& g) {
    double s11 = g.h11 * g.h11 * g.p1;
    double s12 = g.h12 * g.h12 * g.p2;
    double s21 = g.h21 * g.h21 * g.p1;
    double s22 = g.h22 * g.h22 * g.p2;
    std::vector<GaussBound> out;
    out.push_back({"r11", "R11", 0.5 * log2_1p(s11)});
    out.push_back({"r12", "R12", 0.5 * log2_1p(s12)});
    out.push_back({"r21", "R21", 0.5 * log2_1p(s21)});
    out.push_back({"r22", "R22", 0.5 * log2_1p(s22)});
    out.push_back({"mac_tx1", "R11+R21", 0.5 * log2_1p(std::max(s11, s21))});
    out.push_back({"mac_tx2", "R12+R22", 0.5 * log2_1p(std::max(s12, s22))});
    out.push_back({"mac_rx1", "R11+R12", 0.5 * log2_1p(s11 + s12)});
    out.push_back({"mac_rx2", "R21+R22", 0.5 * log2_1p(s21 + s22)});
    out.push_back({"z1", "R11+R22+R12", 0.5 * log2_1p(s11 + s12) + 0.5 * log2_1p(s22 / (1.0 + s12))});
    out.push_back({"z2", "R22+R11+R21", 0.5 * log2_1p(s22 + s21) + 0.5 * log2_1p(s11 / (1.0 + s21))});
    out.push_back({"z3", "R11+R12+R21", 0.5 * log2_1p(s11 + s12) + 0.5 * log2_1p(s21 / (1.0 + s11))});
    out.push_back({"z4", "R22+R21+R12", 0.5 * log2_1p(s22 + s21) + 0.5 * log2_1p(s12 / (1.0 + s22))});
    return out;
}

NoisyVerdict noisy_verdict(const GaussParams& g) {
    double s11 = g.h11 * g.h11 * g.p1;
    double s12 = g.h12 * g.h12 * g.p2;
    double s21 = g.h21 * g.h21 * g.p1;
    double s22 = g.h22 * g.h22 * g.p2;

    NoisyVerdict v;
    v.weak_tested = (g.h11 != 0.0 && g.h22 != 0.0);
    v.strong_tested = (g.h12 != 0.0 && g.h21 != 0.0);

    if (v.weak_tested) {
        v.weak_lhs = std::fabs(g.h12 / g.h22 * (1.0 + s21)) + std::fabs(g.h21 / g.h11 * (1.0 + s12));
        if (v.weak_lhs <= 1.0) {
            v.regime = NoisyRegime::weak_noisy;
            v.sum_capacity = 0.5 * log2_1p(s11 / (1.0 + s12)) + 0.5 * log2_1p(s22 / (1.0 + s21));
        }
    }
    if (v.strong_tested) {
        v.strong_lhs = std::fabs(g.h22 / g.h12 * (1.0 + s11)) + std::fabs(g.h11 / g.h21 * (1.0 + s22));
        if (v.regime == NoisyRegime::neither && v.strong_lhs <= 1.0) {
            v.regime = NoisyRegime::strong_noisy;
            v.sum_capacity = 0.5 * log2_1p(s21 / (1.0 + s22)) + 0.5 * log2_1p(s12 / (1.0 + s11));
        }
    }
    return v;
}

const char* noisy_regime_name(NoisyRegime r) {
    switch (r) {
        case NoisyRegime::weak_noisy:
            return "weak-noisy";
        case NoisyRegime::strong_noisy:
            return "strong-noisy";
        default:
            return "neither";
    }
}

double gdof_numeric(const Rational& alpha, double rho) {
    if (!(rho > 1.0)) throw std::domain_error("rho must exceed 1");
    double a = alpha.to_double();
    double ir = std::pow(rho, a);

    double etw = std::log2(1.0 + ir + rho / (1.0 + ir));
    double z_agg = (2.0 * std::log2(1.0 + rho + ir) + log2_1p(rho / (1.0 + ir)) + log2_1p(ir / (1.0 + rho))) / 3.0;
    double mac_rx = std::log2(1.0 + rho + ir);
    double mac_tx = std::log2(1.0 + std::max(rho, ir));
    double individual = std::log2(1.0 + rho) + std::log2(1.0 + ir);

    double best = std::min({etw, z_agg, mac_rx, mac_tx, individual});
    if (alpha == Rational(1)) {
        // identical receivers: everything is decodable at one of them
        best = std::min(best, 0.5 * std::log2(1.0 + rho + ir));
    }
    return best / (0.5 * std::log2(rho));
}

}  // namespace xchan
