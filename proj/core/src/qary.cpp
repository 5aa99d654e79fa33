#include "xchannel/qary.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace xchan {

std::uint32_t largest_prime_at_most(std::uint32_t n) {
    for (std::uint32_t v = n; v >= 2; --v)
        if (is_prime(v)) return v;
    throw std::domain_error("no prime at or below bound");
}

Rational QaryConfig::alpha() const {
    return (Rational(nc) + epsilon * Rational(nd - nc)) / Rational(nd);
}

double QaryConfig::log2_rho() const {
    double corr = 1.0 - epsilon.to_double();
    return 2.0 * N * nd / corr * std::log2(static_cast<double>(Q));
}

std::int64_t QaryConfig::q_pow_digits() const {
    std::int64_t v = 1;
    for (int i = 0; i < num_digits(); ++i) v *= Q;
    return v;
}

QaryConfig QaryConfig::make(int Q, int N, int nc, int nd, Rational epsilon, std::uint32_t p,
                            bool nonzero_digits) {
    if (Q < 13) throw std::invalid_argument("Q must be at least 13");
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (nd < 1 || nc < 0 || nc > nd) throw std::invalid_argument("need 0 <= nc <= nd, nd >= 1");
    if (epsilon < Rational(0) || !(epsilon < Rational(1))) throw std::invalid_argument("need 0 <= eps < 1");

    QaryConfig cfg;
    cfg.Q = Q;
    cfg.N = N;
    cfg.nc = nc;
    cfg.nd = nd;
    cfg.epsilon = epsilon;
    cfg.nonzero_digits = nonzero_digits;
    cfg.p = p ? p : largest_prime_at_most(static_cast<std::uint32_t>((Q - 1) / 4));
    if (!is_prime(cfg.p)) throw std::invalid_argument("digit field modulus must be prime");

    if (cfg.num_digits() * std::log2(static_cast<double>(Q)) > 62.0)
        throw std::invalid_argument("Q^(N*nd) exceeds the exact integer range");

    // No-carry soundness: every pair of alphabet digits must sum below Q.
    std::uint32_t max_digit = nonzero_digits ? cfg.p : cfg.p - 1;
    for (std::uint32_t a = 0; a <= max_digit; ++a)
        for (std::uint32_t b = 0; b <= max_digit; ++b)
            if (a + b >= static_cast<std::uint32_t>(Q))
                throw std::invalid_argument("digit alphabet too large: sums would carry");
    return cfg;
}

std::int64_t modulate_int(const QaryConfig& cfg, const DigitVector& digits) {
    if (static_cast<int>(digits.size()) != cfg.num_digits())
        throw std::invalid_argument("digit vector length mismatch");
    std::uint32_t max_digit = cfg.nonzero_digits ? cfg.p : cfg.p - 1;
    std::int64_t acc = 0;
    for (auto d : digits) {
        if (d > max_digit) throw std::invalid_argument("digit outside the alphabet");
        acc = acc * cfg.Q + d;
    }
    return acc;
}

double modulate(const QaryConfig& cfg, const DigitVector& digits) {
    return static_cast<double>(modulate_int(cfg, digits)) / static_cast<double>(cfg.q_pow_digits());
}

DigitVector demodulate(const QaryConfig& cfg, double y) {
    double modulus = static_cast<double>(cfg.q_pow_digits());
    double m = std::fmod(std::fabs(y), modulus);
    std::int64_t v = static_cast<std::int64_t>(std::floor(m));
    DigitVector digits(cfg.num_digits());
    for (int i = cfg.num_digits() - 1; i >= 0; --i) {
        digits[i] = static_cast<std::uint32_t>(v % cfg.Q);
        v /= cfg.Q;
    }
    return digits;
}

DigitVector field_to_digits(const QaryConfig& cfg, const PrimeVector& v) {
    DigitVector d(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) d[i] = cfg.digit_symbol(v.get(i));
    return d;
}

PrimeVector digits_to_field(const QaryConfig& cfg, const DigitVector& d) {
    PrimeVector v(d.size(), cfg.p);
    for (std::size_t i = 0; i < d.size(); ++i) v.set(i, d[i] % cfg.p);
    return v;
}

LiftedScheme::LiftedScheme(const QaryConfig& cfg, const LinearScheme<PrimeFieldCtx>& s)
    : cfg_(cfg),
      field_(cfg.p),
      codec_(DetParams{cfg.N * cfg.nd, cfg.N * cfg.nc, cfg.N * cfg.nc, cfg.N * cfg.nd}, s, field_) {
    if (s.p11.modulus() != cfg.p) throw std::invalid_argument("scheme field does not match config");
    if (s.q != cfg.num_digits()) throw std::invalid_argument("scheme dimension does not match N*nd");
}

double LiftedScheme::sum_rate_qary_digits_per_use() const {
    double det_rate = codec_.scheme().sum_rate().to_double();
    return det_rate * std::log(static_cast<double>(cfg_.p)) / std::log(static_cast<double>(cfg_.Q));
}

std::vector<DigitVector> LiftedScheme::expected_digits(const std::vector<DigitVector>& tx1,
                                                       const std::vector<DigitVector>& tx2, int rx) const {
    const auto& own = (rx == 1) ? tx1 : tx2;
    const auto& other = (rx == 1) ? tx2 : tx1;
    int shift = cfg_.cross_shift();
    std::vector<DigitVector> out(own.size());
    for (std::size_t u = 0; u < own.size(); ++u) {
        DigitVector d(cfg_.num_digits(), 0);
        for (int m = 0; m < cfg_.num_digits(); ++m) {
            std::uint32_t v = own[u][m];
            if (m >= shift) v += other[u][m - shift];  // integer sum, never carries
            d[m] = v;
        }
        out[u] = std::move(d);
    }
    return out;
}

LiftedScheme::Transmission LiftedScheme::transmit(const Messages<PrimeFieldCtx>& m,
                                                  SplitMix64* noise_rng, double noise_scale) const {
    int ext = extension();
    int nd_digits = cfg_.num_digits();
    auto [x1, x2] = codec_.encode(m);

    Transmission t;
    double scale = static_cast<double>(cfg_.q_pow_digits());
    double cross = std::pow(static_cast<double>(cfg_.Q), -cfg_.cross_shift());

    std::vector<PrimeVector> y_field[2];
    for (int u = 0; u < ext; ++u) {
        PrimeVector c1(nd_digits, cfg_.p), c2(nd_digits, cfg_.p);
        for (int i = 0; i < nd_digits; ++i) {
            c1.set(i, x1.get(u * nd_digits + i));
            c2.set(i, x2.get(u * nd_digits + i));
        }
        DigitVector d1 = field_to_digits(cfg_, c1);
        DigitVector d2 = field_to_digits(cfg_, c2);
        t.tx_digits[0].push_back(d1);
        t.tx_digits[1].push_back(d2);

        double xb1 = static_cast<double>(modulate_int(cfg_, d1));
        double xb2 = static_cast<double>(modulate_int(cfg_, d2));
        double z1 = 0, z2 = 0;
        if (noise_rng && noise_scale != 0.0) {
            // Box-Muller
            constexpr double kTwoPi = 6.283185307179586476925286766559;
            double u1 = 1.0 - noise_rng->next_unit();
            double u2 = noise_rng->next_unit();
            double r = std::sqrt(-2.0 * std::log(u1));
            z1 = r * std::cos(kTwoPi * u2);
            z2 = r * std::sin(kTwoPi * u2);
        }
        double y1 = xb1 + cross * xb2 + noise_scale * z1;
        double y2 = xb2 + cross * xb1 + noise_scale * z2;
        t.y[0].push_back(y1 / scale);
        t.y[1].push_back(y2 / scale);

        DigitVector r1 = demodulate(cfg_, y1);
        DigitVector r2 = demodulate(cfg_, y2);
        t.rx_digits[0].push_back(r1);
        t.rx_digits[1].push_back(r2);
    }

    // Reduce digits mod p and decode through the deterministic solver.
    PrimeVector y1f(ext * nd_digits, cfg_.p), y2f(ext * nd_digits, cfg_.p);
    for (int u = 0; u < ext; ++u)
        for (int i = 0; i < nd_digits; ++i) {
            y1f.set(u * nd_digits + i, t.rx_digits[0][u][i] % cfg_.p);
            y2f.set(u * nd_digits + i, t.rx_digits[1][u][i] % cfg_.p);
        }
    t.decoded = codec_.decode(y1f, y2f);
    return t;
}

double SimReport::wilson_upper(std::size_t k, double z) const {
    if (trials == 0) return 1.0;
    double n = static_cast<double>(trials);
    double ph = p_hat(k);
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double centre = ph + z2 / (2.0 * n);
    double rad = z * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n));
    return (centre + rad) / denom;
}

namespace {

void run_trials(const LiftedScheme& lifted, std::uint64_t begin, std::uint64_t end, std::uint64_t seed,
                double noise_scale, SimReport& out) {
    const auto& cfg = lifted.config();
    int nd_digits = cfg.num_digits();
    double scale2 = static_cast<double>(cfg.q_pow_digits());
    scale2 *= scale2;

    out.level_errors.assign(nd_digits, 0);
    double power1 = 0, power2 = 0;
    std::uint64_t uses = 0;

    for (std::uint64_t trial = begin; trial < end; ++trial) {
        SplitMix64 rng(mix_seed(seed, trial));
        auto msgs = lifted.codec().random_messages(rng);
        auto t = lifted.transmit(msgs, &rng, noise_scale);

        auto exp1 = lifted.expected_digits(t.tx_digits[0], t.tx_digits[1], 1);
        auto exp2 = lifted.expected_digits(t.tx_digits[0], t.tx_digits[1], 2);

        std::vector<bool> level_bad(nd_digits, false);
        for (std::size_t u = 0; u < exp1.size(); ++u) {
            for (int m = 0; m < nd_digits; ++m) {
                int k = nd_digits - 1 - m;  // weight Q^k
                if (t.rx_digits[0][u][m] != exp1[u][m] || t.rx_digits[1][u][m] != exp2[u][m])
                    level_bad[k] = true;
            }
            double xb1 = static_cast<double>(modulate_int(cfg, t.tx_digits[0][u]));
            double xb2 = static_cast<double>(modulate_int(cfg, t.tx_digits[1][u]));
            power1 += xb1 * xb1 / scale2;
            power2 += xb2 * xb2 / scale2;
            ++uses;
        }
        for (int k = 0; k < nd_digits; ++k)
            if (level_bad[k]) ++out.level_errors[k];
    }
    out.trials = end - begin;
    out.mean_power_tx1 = uses ? power1 / static_cast<double>(uses) : 0.0;
    out.mean_power_tx2 = uses ? power2 / static_cast<double>(uses) : 0.0;
}

}  // namespace

SimReport run_monte_carlo(const QaryConfig& cfg, const LinearScheme<PrimeFieldCtx>& s,
                          std::uint64_t trials, std::uint64_t seed, bool noiseless, int workers) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    if (!(cfg.epsilon == Rational(0)))
        throw std::invalid_argument("simulation supports eps = 0 only");
    LiftedScheme lifted(cfg, s);
    double noise_scale = noiseless ? 0.0 : 1.0;

    if (workers < 1) workers = 1;
    workers = static_cast<int>(std::min<std::uint64_t>(workers, trials));

    std::vector<SimReport> parts(workers);
    if (workers == 1) {
        run_trials(lifted, 0, trials, seed, noise_scale, parts[0]);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t per = trials / workers, extra = trials % workers, at = 0;
        for (int w = 0; w < workers; ++w) {
            std::uint64_t take = per + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
            std::uint64_t begin = at, end = at + take;
            at = end;
            pool.emplace_back([&lifted, begin, end, seed, noise_scale, &parts, w] {
                run_trials(lifted, begin, end, seed, noise_scale, parts[w]);
            });
        }
        for (auto& th : pool) th.join();
    }

    SimReport merged;
    merged.seed = seed;
    merged.level_errors.assign(cfg.num_digits(), 0);
    double p1 = 0, p2 = 0;
    for (const auto& part : parts) {
        merged.trials += part.trials;
        for (std::size_t k = 0; k < merged.level_errors.size(); ++k)
            merged.level_errors[k] += part.level_errors[k];
        p1 += part.mean_power_tx1 * static_cast<double>(part.trials);
        p2 += part.mean_power_tx2 * static_cast<double>(part.trials);
    }
    merged.mean_power_tx1 = p1 / static_cast<double>(merged.trials);
    merged.mean_power_tx2 = p2 / static_cast<double>(merged.trials);
    return merged;
}

ExhaustiveCheck exhaustive_noiseless_check(const QaryConfig& cfg, const LinearScheme<PrimeFieldCtx>& s,
                                           std::uint64_t tuple_limit) {
    if (!(cfg.epsilon == Rational(0)))
        throw std::invalid_argument("simulation supports eps = 0 only");
    LiftedScheme lifted(cfg, s);
    const auto& codec = lifted.codec();

    double total = std::pow(static_cast<double>(cfg.p), static_cast<double>(codec.total_symbols()));
    if (total > static_cast<double>(tuple_limit))
        throw std::invalid_argument("message space too large for exhaustive sweep");
    std::uint64_t tuples = static_cast<std::uint64_t>(total);

    ExhaustiveCheck res;
    for (std::uint64_t idx = 0; idx < tuples; ++idx) {
        auto msgs = codec.messages_from_index(idx);
        auto t = lifted.transmit(msgs, nullptr, 0.0);
        ++res.tuples;
        if (!messages_equal(t.decoded, msgs)) ++res.decode_mismatches;

        // Digit-for-digit equivalence with the deterministic channel.
        auto [x1, x2] = codec.encode(msgs);
        int ext = lifted.extension(), ndd = cfg.num_digits();
        DetParams det{cfg.N * cfg.nd, cfg.N * cfg.nc, cfg.N * cfg.nc, cfg.N * cfg.nd};
        PrimeFieldCtx field(cfg.p);
        for (int u = 0; u < ext; ++u) {
            PrimeVector c1(ndd, cfg.p), c2(ndd, cfg.p);
            for (int i = 0; i < ndd; ++i) {
                c1.set(i, x1.get(u * ndd + i));
                c2.set(i, x2.get(u * ndd + i));
            }
            auto [y1, y2] = apply_channel(det, c1, c2, field);
            auto lifted1 = digits_to_field(cfg, t.rx_digits[0][u]);
            auto lifted2 = digits_to_field(cfg, t.rx_digits[1][u]);
            if (lifted1 != y1 || lifted2 != y2) ++res.digit_mismatches;
        }
    }
    return res;
}

}  // namespace xchan
