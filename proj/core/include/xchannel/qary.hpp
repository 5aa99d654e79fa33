#pragma once

#include <cstdint>
#include <vector>

#include "xchannel/alignment.hpp"
#include "xchannel/rational.hpp"

namespace xchan {

// Q-ary multilevel lifting of a deterministic scheme onto the real Gaussian
// channel. A transmit signal is a Q-ary integer with N*nd digit positions,
// scaled by 1/sqrt(rho) with rho = Q^(2*N*nd/(1-eps)); the cross link scales by
// Q^(-N*(nd-nc)), so digit positions of the two users interact exactly like the
// deterministic channel with parameter (N*nc, N*nd). Digits come from a prime
// alphabet small enough that aligned digit sums never carry.
struct QaryConfig {
    int Q = 0;            // integer base, >= 13
    int N = 1;            // extension factor
    int nc = 0, nd = 0;   // deterministic parameters, 0 <= nc <= nd
    Rational epsilon;     // exponent correction; simulation requires 0
    std::uint32_t p = 0;  // digit field prime; 0 selects the largest prime <= (Q-1)/4
    bool nonzero_digits = false;  // map field symbols into {1..p} instead of {0..p-1}

    int num_digits() const { return N * nd; }
    int cross_shift() const { return N * (nd - nc); }
    Rational alpha() const;            // (nc + eps*(nd-nc)) / nd
    double log2_rho() const;           // 2*N*nd/(1-eps) * log2(Q)
    std::int64_t q_pow_digits() const; // Q^(N*nd), the sqrt(rho) scale at eps = 0

    std::uint32_t digit_symbol(std::uint32_t field_value) const {
        return nonzero_digits && field_value == 0 ? p : field_value;
    }

    // Validates ranges, primality, the overflow guard, and exhaustively checks
    // that no pair of alphabet digits can sum to Q or more (the no-carry
    // guarantee).
    static QaryConfig make(int Q, int N, int nc, int nd, Rational epsilon = Rational(0),
                           std::uint32_t p = 0, bool nonzero_digits = false);
};

std::uint32_t largest_prime_at_most(std::uint32_t n);

// Most significant digit first, length num_digits, values in [0, Q).
using DigitVector = std::vector<std::uint32_t>;

std::int64_t modulate_int(const QaryConfig& cfg, const DigitVector& digits);
// X = sqrt(rho)^-1 * sum_k x_k Q^k; |X| <= 1 by construction.
double modulate(const QaryConfig& cfg, const DigitVector& digits);
// floor(|y| mod Q^(N*nd)), expanded base Q.
DigitVector demodulate(const QaryConfig& cfg, double y);

DigitVector field_to_digits(const QaryConfig& cfg, const PrimeVector& v);
PrimeVector digits_to_field(const QaryConfig& cfg, const DigitVector& d);

// A deterministic scheme for (N*nc, N*nd) over F_p driven through the real
// channel. Construction validates the scheme (and that its field matches).
class LiftedScheme {
public:
    LiftedScheme(const QaryConfig& cfg, const LinearScheme<PrimeFieldCtx>& s);

    const QaryConfig& config() const { return cfg_; }
    const DetCodec<PrimeFieldCtx>& codec() const { return codec_; }
    int extension() const { return codec_.scheme().extension; }

    // Digit rate of the lifted scheme in units of log_Q(p) per channel use.
    double sum_rate_qary_digits_per_use() const;

    struct Transmission {
        std::vector<DigitVector> tx_digits[2];   // per use, per transmitter
        std::vector<double> y[2];                // received reals per use, per receiver
        std::vector<DigitVector> rx_digits[2];   // demodulated digits
        Messages<PrimeFieldCtx> decoded;
    };

    // noise_scale 0 gives the noiseless channel.
    Transmission transmit(const Messages<PrimeFieldCtx>& m, SplitMix64* noise_rng,
                          double noise_scale) const;

    // Noiseless digit relation: what each receiver's digit vector must be when
    // the channel adds no noise (integer digit sums, no carries).
    std::vector<DigitVector> expected_digits(const std::vector<DigitVector>& tx1,
                                             const std::vector<DigitVector>& tx2, int rx) const;

private:
    QaryConfig cfg_;
    PrimeFieldCtx field_;
    DetCodec<PrimeFieldCtx> codec_;
};

struct SimReport {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> level_errors;  // index k = digit weight Q^k (LSB first)
    double mean_power_tx1 = 0;
    double mean_power_tx2 = 0;

    double p_hat(std::size_t k) const {
        return trials ? static_cast<double>(level_errors[k]) / static_cast<double>(trials) : 0.0;
    }
    double wilson_upper(std::size_t k, double z = 1.96) const;
};

// Monte Carlo digit-error measurement. Per-trial generators are derived from
// (seed, trial index), so the report does not depend on the worker count.
SimReport run_monte_carlo(const QaryConfig& cfg, const LinearScheme<PrimeFieldCtx>& s,
                          std::uint64_t trials, std::uint64_t seed, bool noiseless = false,
                          int workers = 1);

struct ExhaustiveCheck {
    std::uint64_t tuples = 0;
    std::uint64_t decode_mismatches = 0;
    std::uint64_t digit_mismatches = 0;  // lifted digits vs deterministic-channel digits
};

// Sweeps every message tuple through the noiseless real channel and checks
// (a) exact decoding and (b) digit-for-digit agreement with the deterministic
// channel output.
ExhaustiveCheck exhaustive_noiseless_check(const QaryConfig& cfg, const LinearScheme<PrimeFieldCtx>& s,
                                           std::uint64_t tuple_limit = 1u << 20);

}  // namespace xchan
