#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "xchannel/rational.hpp"

namespace xchan {

// Real Gaussian X channel: y_i = H_i1 x_1 + H_i2 x_2 + z_i with unit-variance
// noise and E[x_j^2] <= P_j. All capacities below are in bits per channel use
// (base-2 logs).
struct GaussParams {
    double h11 = 0, h12 = 0, h21 = 0, h22 = 0;
    double p1 = 0, p2 = 0;
};

// Symmetric parameterization: direct gains sqrt(rho), cross gains
// sqrt(rho^alpha), unit powers.
struct SymGaussParams {
    double rho = 0;    // > 1 so that log rho > 0
    double alpha = 0;  // cross-link exponent

    GaussParams to_gauss() const;
};

struct GdofValue {
    Rational value;
    std::string branch;
};

// Generalized degrees of freedom of the symmetric X channel as a function of
// the cross exponent. Exact rational arithmetic; discontinuous at alpha = 1.
GdofValue gdof(const Rational& alpha);

// Outer bound: 2 min(max(a, 1-a), 1 - a/3) for a < 1, extended above 1 by the
// receiver-swap identity d(a) = a d(1/a). At a = 1 both receivers are
// statistically identical and the single-receiver multiple-access bound pins
// the value to 1.
Rational gdof_outer(const Rational& alpha);

// Best two-message (interference channel) operation of the same physical
// channel: the familiar W curve for a <= 1 and its swap image above. This is
// the comparison column for the GDOF plot.
Rational gdof_ic(const Rational& alpha);

struct GdofFromDouble {
    Rational alpha;  // rational the input was rounded to (den <= 10^6)
    bool exact;
    GdofValue value;
};
GdofFromDouble gdof_from_double(double alpha);

// Two genie sum-rate bounds obtained by handing each receiver the other's
// noisy cross observation.
std::array<double, 2> etw_outer_bounds(const GaussParams& g);

struct GaussBound {
    std::string label;
    std::string rate_subset;
    double value;
};

// Individual-rate, per-transmitter, per-receiver and Z-channel triple-rate
// bounds, labeled by the rate subset each constrains.
std::vector<GaussBound> known_outer_bounds(const GaussParams& g);

enum class NoisyRegime { weak_noisy, strong_noisy, neither };

struct NoisyVerdict {
    NoisyRegime regime = NoisyRegime::neither;
    std::optional<double> sum_capacity;  // bits/use, present iff regime != neither
    bool weak_tested = false;
    bool strong_tested = false;
    double weak_lhs = 0;    // compare against 1
    double strong_lhs = 0;  // compare against 1
};

// Treating-interference-as-noise optimality test. The weak test requires
// nonzero direct gains, the strong test nonzero cross gains; a test whose
// divisors vanish is skipped.
NoisyVerdict noisy_verdict(const GaussParams& g);

const char* noisy_regime_name(NoisyRegime r);

// Finite-rho evaluation of the outer-bound family, normalized by half the log
// of rho. Includes the genie bounds, the aggregated Z-channel bound, the
// coarse per-receiver/per-transmitter/individual combinations, and (only at
// alpha = 1, where the receivers coincide statistically) the single-receiver
// multiple-access bound.
double gdof_numeric(const Rational& alpha, double rho);

}  // namespace xchan
