#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "xchannel/fields.hpp"
#include "xchannel/rational.hpp"

namespace xchan {

// Deterministic X channel with two transmitters and two receivers. n_ij is the
// number of signal levels on the link from transmitter j to receiver i. Vectors
// live in F^q with q = max of the four counts; level 1 (top, strongest) is
// entry 0.
struct DetParams {
    int n11 = 0, n12 = 0, n21 = 0, n22 = 0;

    int q() const { return std::max(std::max(n11, n12), std::max(n21, n22)); }
    void validate() const {
        if (n11 < 0 || n12 < 0 || n21 < 0 || n22 < 0) throw std::invalid_argument("negative level count");
        if (q() < 1) throw std::invalid_argument("unusable channel: all level counts zero");
    }
};

// Symmetric setting: both direct links carry nd levels, both cross links nc.
struct SymDetParams {
    int nc = 0;
    int nd = 0;

    DetParams to_det() const { return DetParams{nd, nc, nc, nd}; }
    void validate() const {
        if (nc < 0 || nd < 0) throw std::invalid_argument("negative level count");
        if (nc == 0 && nd == 0) throw std::invalid_argument("unusable channel: nc = nd = 0");
    }
};

struct RateTuple {
    Rational r11, r12, r21, r22;
    Rational sum() const { return r11 + r12 + r21 + r22; }
};

// y1 = S^(q-n11) x1 + S^(q-n12) x2,  y2 = S^(q-n21) x1 + S^(q-n22) x2.
// The field argument only selects the vector type.
template <class Field>
std::pair<typename Field::Vector, typename Field::Vector> apply_channel(
    const DetParams& p, const typename Field::Vector& x1, const typename Field::Vector& x2,
    const Field& = Field{}) {
    p.validate();
    std::size_t q = static_cast<std::size_t>(p.q());
    if (x1.size() != q || x2.size() != q) throw std::invalid_argument("channel input length mismatch");
    auto y1 = x1.shifted_down(q - p.n11);
    Field::vec_add(y1, x2.shifted_down(q - p.n12));
    auto y2 = x1.shifted_down(q - p.n21);
    Field::vec_add(y2, x2.shifted_down(q - p.n22));
    return {y1, y2};
}

struct CapacityValue {
    Rational value;
    std::string branch;
};

// Piecewise sum capacity of the symmetric deterministic X channel as a
// function of the ratio nc/nd. Exact rational arithmetic throughout.
CapacityValue sym_sum_capacity(const SymDetParams& s);

struct DetBound {
    std::string label;        // up1..up6
    std::string rate_subset;  // e.g. "R11+R12+R22"
    std::int64_t value;
};

// The six information-theoretic sum-rate constraints for the asymmetric
// deterministic X channel: four triple-rate bounds and two whole-tuple bounds.
std::array<DetBound, 6> det_outer_bounds(const DetParams& p);

struct SymUpperValue {
    Rational value;
    std::string binding;  // which of the four symmetric bounds attains the min
};

// min of the averaged triple bound, the two whole-tuple bounds, and (only when
// nc = nd) the single-receiver multiple-access bound nd.
SymUpperValue sym_sum_upper(const SymDetParams& s);

}  // namespace xchan
