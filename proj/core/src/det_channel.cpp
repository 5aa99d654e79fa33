#include "xchannel/det_channel.hpp"

namespace xchan {

namespace {
std::int64_t pos_part(std::int64_t v) { return v > 0 ? v : 0; }
}  // namespace

CapacityValue sym_sum_capacity(const SymDetParams& s) {
    s.validate();
    std::int64_t nc = s.nc, nd = s.nd;
    if (nd == 0) {
        // degenerate direct links; capacity follows from swapping the receivers
        CapacityValue sw = sym_sum_capacity(SymDetParams{static_cast<int>(nd), static_cast<int>(nc)});
        return sw;
    }
    // Branch tests are exact integer comparisons on nc/nd.
    if (2 * nc < nd) return {Rational(2 * (nd - nc)), "2nd-2nc"};
    if (4 * nc < 3 * nd) return {Rational(2 * nc), "2nc"};
    if (nc < nd) return {Rational(2) * (Rational(nd) - Rational(nc, 3)), "2(nd-nc/3)"};
    if (nc == nd) return {Rational(nd), "nd"};
    if (3 * nc <= 4 * nd) return {Rational(2) * (Rational(nc) - Rational(nd, 3)), "2(nc-nd/3)"};
    if (nc <= 2 * nd) return {Rational(2 * nd), "2nd"};
    return {Rational(2 * (nc - nd)), "2nc-2nd"};
}

std::array<DetBound, 6> det_outer_bounds(const DetParams& p) {
    std::int64_t n11 = p.n11, n12 = p.n12, n21 = p.n21, n22 = p.n22;
    return {
        DetBound{"up1", "R11+R12+R22", std::max(n11, n12) + pos_part(n22 - n12)},
        DetBound{"up2", "R11+R21+R22", std::max(n21, n22) + pos_part(n11 - n21)},
        DetBound{"up3", "R11+R21+R12", std::max(n11, n12) + pos_part(n21 - n11)},
        DetBound{"up4", "R21+R12+R22", std::max(n21, n22) + pos_part(n12 - n22)},
        DetBound{"up5", "R11+R12+R21+R22",
                 std::max(n12, pos_part(n11 - n21)) + std::max(n21, pos_part(n22 - n12))},
        DetBound{"up6", "R11+R12+R21+R22",
                 std::max(n11, pos_part(n12 - n22)) + std::max(n22, pos_part(n21 - n11))},
    };
}

SymUpperValue sym_sum_upper(const SymDetParams& s) {
    s.validate();
    std::int64_t nc = s.nc, nd = s.nd;

    Rational up_avg = Rational(4, 3) * Rational(std::max(nc, nd)) +
                      Rational(2, 3) * Rational(pos_part(nd - nc)) +
                      Rational(2, 3) * Rational(pos_part(nc - nd));
    Rational up_tuple1(2 * std::max(nc, nd - nc));
    Rational up_tuple2(2 * std::max(nd, nc - nd));

    SymUpperValue best{up_avg, "avg-triples"};
    if (up_tuple1 < best.value) best = {up_tuple1, "tuple1"};
    if (up_tuple2 < best.value) best = {up_tuple2, "tuple2"};
    if (nc == nd && Rational(nd) < best.value) best = {Rational(nd), "mac"};
    return best;
}

}  // namespace xchan
