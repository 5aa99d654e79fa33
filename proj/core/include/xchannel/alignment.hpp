#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "xchannel/det_channel.hpp"
#include "xchannel/fields.hpp"
#include "xchannel/rng.hpp"

namespace xchan {

// ---------------------------------------------------------------------------
// Cyclic chain decomposition
//
// H = S^(nd-nc) acting on F^nd splits the standard basis into disjoint chains
// e_i -> H e_i -> H^2 e_i -> ... whose last element lies in ker(H). The chain
// count equals dim ker(H) = nd-nc and chain lengths differ by at most one.
// The 3-symbol extension works in F^(3nd) under the block-diagonal H, whose
// chains are three copies of the single-space ones; reordering them by length
// gives the same staircase shape with every quantity tripled.
// ---------------------------------------------------------------------------

struct ChainDecomposition {
    int nd = 0;
    int nc = 0;
    int delta = 0;   // nd - nc, the shift H applies
    int blocks = 1;  // 1, or 3 for the symbol extension
    int dim = 0;     // blocks * nd
    // Basis indices per chain, in chain order (first element generates the
    // chain, last element is in ker(H)). Columns are sorted by length,
    // longest first.
    std::vector<std::vector<int>> columns;

    int kernel_dim() const { return static_cast<int>(columns.size()); }
    int non_kernel_cells() const { return dim - kernel_dim(); }
    int length_spread() const {
        std::size_t lo = columns.front().size(), hi = lo;
        for (const auto& c : columns) {
            lo = std::min(lo, c.size());
            hi = std::max(hi, c.size());
        }
        return static_cast<int>(hi - lo);
    }
};

ChainDecomposition cyclic_decompose(int nd, int nc);
ChainDecomposition extended_decompose(int nd, int nc);

// A box groups three chain cells ("circles") and represents the triple
// {v, Hv, H^2v} of its generator v. Vertical boxes take three consecutive
// cells of one column with v equal to the top cell. Cross boxes cover the
// cells left over above the kernel row; their generator sums the first
// covered cell with cells one and two steps up-chain of the second and third,
// so the triple reaches each covered cell at a distinct power of H.
struct Box {
    std::vector<int> generator_cells;  // basis indices whose sum is v
    std::vector<int> covered_cells;    // the three circles this box accounts for
    bool vertical = false;
};

struct BoxAssignment {
    std::vector<int> kernel_cells;
    std::vector<Box> boxes;
};

namespace detail {

struct Cell {
    int column;
    int pos;            // position within the chain, 0 = top
    int dist_to_kernel; // chain length - 1 - pos
    int index;          // basis index
};

inline void plan_boxes(const ChainDecomposition& d, const std::vector<std::vector<Cell>>& cross_triples,
                       BoxAssignment& out) {
    out.boxes.clear();
    out.kernel_cells.clear();
    for (const auto& col : d.columns) out.kernel_cells.push_back(col.back());

    for (std::size_t c = 0; c < d.columns.size(); ++c) {
        const auto& col = d.columns[c];
        int usable = static_cast<int>(col.size()) - 1;
        int verticals = usable / 3;
        for (int t = 0; t < verticals; ++t) {
            Box b;
            b.vertical = true;
            b.generator_cells = {col[3 * t]};
            b.covered_cells = {col[3 * t], col[3 * t + 1], col[3 * t + 2]};
            out.boxes.push_back(std::move(b));
        }
    }

    for (const auto& triple : cross_triples) {
        // Order so that cells closer to the kernel are raised less; this keeps
        // the generator a sum of three distinct cells.
        std::vector<Cell> ys = triple;
        std::sort(ys.begin(), ys.end(), [](const Cell& a, const Cell& b) {
            if (a.dist_to_kernel != b.dist_to_kernel) return a.dist_to_kernel < b.dist_to_kernel;
            return a.column < b.column;
        });
        Box b;
        b.vertical = false;
        for (int k = 0; k < 3; ++k) {
            const Cell& y = ys[k];
            int raised_pos = y.pos - k;
            if (raised_pos < 0) throw std::logic_error("box generator raised above the column top");
            b.generator_cells.push_back(d.columns[y.column][raised_pos]);
            b.covered_cells.push_back(y.index);
        }
        out.boxes.push_back(std::move(b));
    }
}

}  // namespace detail

// Block-diagonal S^(q-shift) repeated `blocks` times: the channel matrix of a
// symbol-extended link.
template <class Field>
typename Field::Matrix block_shift(const Field& f, std::size_t q, std::size_t k, int blocks) {
    auto single = f.shift(q, k);
    if (blocks == 1) return single;
    auto m = f.zero(q * blocks, q * blocks);
    for (int b = 0; b < blocks; ++b)
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t c = 0; c < q; ++c)
                if (single.get(r, c)) m.set(b * q + r, b * q + c, 1);
    return m;
}

template <class Field>
typename Field::Matrix box_generator_matrix(const ChainDecomposition& d, const BoxAssignment& ba,
                                            const Field& f) {
    auto v = f.zero(d.dim, ba.boxes.size());
    for (std::size_t b = 0; b < ba.boxes.size(); ++b)
        for (int cell : ba.boxes[b].generator_cells) v.set(cell, b, 1);
    return v;
}

// Groups every non-kernel circle into boxes and certifies that
// G = [V  HV  H^2V  V_null] has full rank over the requested field. A failed
// certificate triggers a bounded deterministic re-shuffle of the cross triples;
// exhausting the retries signals an implementation bug and throws.
template <class Field = Gf2Field>
BoxAssignment pack_boxes(const ChainDecomposition& d, const Field& f = Field{}) {
    long long nc_eff = static_cast<long long>(d.blocks) * d.nc;
    long long nd_eff = static_cast<long long>(d.blocks) * d.nd;
    if (!(4 * d.nc >= 3 * d.nd && d.nc < d.nd))
        throw std::domain_error("box packing requires 3/4 <= nc/nd < 1");
    if (d.non_kernel_cells() % 3 != 0)
        throw std::domain_error("non-kernel circle count not divisible by 3");
    if (d.non_kernel_cells() != nc_eff || d.dim != nd_eff)
        throw std::invalid_argument("inconsistent chain decomposition");

    // Leftover cells (above the kernel, below the vertical boxes), column-major
    // with the deeper cell first.
    std::vector<detail::Cell> leftovers;
    for (std::size_t c = 0; c < d.columns.size(); ++c) {
        const auto& col = d.columns[c];
        int len = static_cast<int>(col.size());
        int verticals = (len - 1) / 3;
        for (int pos = len - 2; pos >= 3 * verticals; --pos)
            leftovers.push_back({static_cast<int>(c), pos, len - 1 - pos, col[pos]});
    }

    auto h = block_shift(f, d.nd, d.delta, d.blocks);
    auto vnull = h.nullspace_basis();

    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        std::vector<detail::Cell> order = leftovers;
        if (attempt > 0) {
            SplitMix64 rng(mix_seed(0x626f786573ULL, attempt));
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[rng.next_below(i)]);
        }
        std::vector<std::vector<detail::Cell>> triples;
        for (std::size_t i = 0; i + 3 <= order.size(); i += 3)
            triples.push_back({order[i], order[i + 1], order[i + 2]});

        BoxAssignment ba;
        detail::plan_boxes(d, triples, ba);

        auto v = box_generator_matrix(d, ba, f);
        auto g = concat_cols({v, matmul(h, v), matmul(h, matmul(h, v)), vnull});
        if (g.rank() == static_cast<std::size_t>(d.dim)) return ba;
    }
    throw std::logic_error("box packing certificate failed after bounded backtracking");
}

// ---------------------------------------------------------------------------
// Linear schemes
// ---------------------------------------------------------------------------

template <class Field>
struct LinearScheme {
    int extension = 1;  // channel uses coded over jointly
    int q = 0;          // per-use vector length
    typename Field::Matrix p11, p12, p21, p22;  // precoder of W_ij, applied at transmitter j
    RateTuple rates;

    const typename Field::Matrix& precoder(int i, int j) const {
        if (i == 1 && j == 1) return p11;
        if (i == 1 && j == 2) return p12;
        if (i == 2 && j == 1) return p21;
        return p22;
    }
    typename Field::Matrix& precoder(int i, int j) {
        return const_cast<typename Field::Matrix&>(static_cast<const LinearScheme*>(this)->precoder(i, j));
    }
    Rational sum_rate() const { return rates.sum(); }
};

template <class Field>
struct Messages {
    typename Field::Vector m11, m12, m21, m22;
};

struct ReceiverCertificate {
    std::size_t desired_cols = 0;
    std::size_t rank_interference = 0;
    std::size_t rank_full = 0;
    bool ok = false;
};

struct ValidationResult {
    bool valid = false;
    ReceiverCertificate rx1, rx2;
};

namespace detail {

template <class Field>
void fill_rates(LinearScheme<Field>& s) {
    s.rates.r11 = Rational(static_cast<std::int64_t>(s.p11.cols()), s.extension);
    s.rates.r12 = Rational(static_cast<std::int64_t>(s.p12.cols()), s.extension);
    s.rates.r21 = Rational(static_cast<std::int64_t>(s.p21.cols()), s.extension);
    s.rates.r22 = Rational(static_cast<std::int64_t>(s.p22.cols()), s.extension);
}

// Columns of `m` picked by basis-index list.
template <class Field>
typename Field::Matrix columns_from_levels(const Field& f, int q, const std::vector<int>& levels) {
    auto m = f.zero(q, levels.size());
    for (std::size_t c = 0; c < levels.size(); ++c) m.set(levels[c], c, 1);
    return m;
}

}  // namespace detail

// Effective matrix seen at receiver i for a precoder applied at transmitter j.
template <class Field>
typename Field::Matrix received_matrix(const Field& f, const DetParams& p, int extension, int i, int j,
                                       const typename Field::Matrix& precoder) {
    int q = p.q();
    int n = (i == 1) ? (j == 1 ? p.n11 : p.n12) : (j == 1 ? p.n21 : p.n22);
    auto chan = block_shift(f, q, q - n, extension);
    return matmul(chan, precoder);
}

// Decodability certificate: at each receiver the desired columns must be
// resolvable through the interference, i.e.
// rank([A_des A_int]) - rank(A_int) = #desired columns.
template <class Field>
ValidationResult validate_linear_scheme(const DetParams& p, const LinearScheme<Field>& s,
                                        const Field& f = Field{}) {
    p.validate();
    std::size_t rows = static_cast<std::size_t>(s.extension) * p.q();
    if (s.q != p.q()) throw std::invalid_argument("scheme/channel dimension mismatch");
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            if (s.precoder(i, j).rows() != rows) throw std::invalid_argument("precoder row count mismatch");

    ValidationResult res;
    for (int rx = 1; rx <= 2; ++rx) {
        int other = 3 - rx;
        auto des = concat_cols({received_matrix(f, p, s.extension, rx, 1, s.precoder(rx, 1)),
                                received_matrix(f, p, s.extension, rx, 2, s.precoder(rx, 2))});
        auto intf = concat_cols({received_matrix(f, p, s.extension, rx, 1, s.precoder(other, 1)),
                                 received_matrix(f, p, s.extension, rx, 2, s.precoder(other, 2))});
        ReceiverCertificate cert;
        cert.desired_cols = des.cols();
        cert.rank_interference = intf.rank();
        cert.rank_full = concat_cols({des, intf}).rank();
        cert.ok = (cert.rank_full - cert.rank_interference == cert.desired_cols);
        (rx == 1 ? res.rx1 : res.rx2) = cert;
    }
    // Precoders themselves must be injective and the declared rates must match.
    bool precoders_ok = true;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            const auto& m = s.precoder(i, j);
            if (m.rank() != m.cols()) precoders_ok = false;
        }
    bool rates_ok = s.rates.r11 == Rational(static_cast<std::int64_t>(s.p11.cols()), s.extension) &&
                    s.rates.r12 == Rational(static_cast<std::int64_t>(s.p12.cols()), s.extension) &&
                    s.rates.r21 == Rational(static_cast<std::int64_t>(s.p21.cols()), s.extension) &&
                    s.rates.r22 == Rational(static_cast<std::int64_t>(s.p22.cols()), s.extension);
    res.valid = res.rx1.ok && res.rx2.ok && precoders_ok && rates_ok;
    return res;
}

// ---------------------------------------------------------------------------
// Scheme builders
// ---------------------------------------------------------------------------

// Interference-avoidance regime, 0 <= nc/nd < 2/3: the cross messages stay
// empty and each transmitter sends its direct message on a level set A with
// A and A shifted by nd-nc disjoint. The explicit sets below achieve
// max(2nd-2nc, 2nc); a lexicographic subset search backs them up should the
// certificate ever fail.
template <class Field>
LinearScheme<Field> build_scheme_case1(int nc, int nd, const Field& f = Field{});

// Alignment-by-position regime, 2/3 <= nc/nd < 3/4: with delta = nd-nc each
// transmitter sends its direct message on the top delta levels and the bottom
// 3nc-2nd levels, the cross message on the next delta levels, and keeps one
// delta block zero so both interfering signals land on it.
template <class Field>
LinearScheme<Field> build_scheme_case2(int nc, int nd, const Field& f = Field{});

// Subspace-alignment regime, 3/4 <= nc/nd < 1 with 3 | nc: precoders come from
// the box packing. X_i = V Xii(1) + Vnull Xii(2) + HV Xji.
template <class Field>
LinearScheme<Field> build_precoder_case3(int nc, int nd, const Field& f = Field{});

// Same regime without the divisibility assumption: code over 3 channel uses
// with the block-diagonal H; the extended packing supplies V with nc columns.
template <class Field>
LinearScheme<Field> build_precoder_extended(int nc, int nd, const Field& f = Field{});

// Dispatches on nc/nd; nc > nd reuses the mirrored channel by swapping the
// receiver labels (W11 <-> W21, W12 <-> W22).
template <class Field>
LinearScheme<Field> build_scheme(int nc, int nd, const Field& f = Field{});

// Executes a validated scheme end to end: encode, apply the deterministic
// channel per extension block, decode by solving the receiver systems from the
// validation certificate.
template <class Field>
class DetCodec {
public:
    DetCodec(const DetParams& p, const LinearScheme<Field>& s, const Field& f = Field{});

    const ValidationResult& certificate() const { return cert_; }
    const LinearScheme<Field>& scheme() const { return scheme_; }

    std::pair<typename Field::Vector, typename Field::Vector> encode(const Messages<Field>& m) const;
    std::pair<typename Field::Vector, typename Field::Vector> transmit(const Messages<Field>& m) const;
    Messages<Field> decode(const typename Field::Vector& y1, const typename Field::Vector& y2) const;
    Messages<Field> roundtrip(const Messages<Field>& m) const {
        auto [y1, y2] = transmit(m);
        return decode(y1, y2);
    }

    Messages<Field> zero_messages() const;
    std::size_t total_symbols() const {
        return scheme_.p11.cols() + scheme_.p12.cols() + scheme_.p21.cols() + scheme_.p22.cols();
    }
    Messages<Field> messages_from_index(unsigned long long index) const;
    Messages<Field> random_messages(SplitMix64& rng) const;

private:
    Field f_;
    DetParams params_;
    LinearScheme<Field> scheme_;
    ValidationResult cert_;
    typename Field::Solver solver1_, solver2_;
    std::size_t k11_, k12_, k21_, k22_;

    typename Field::Solver make_solver(int rx) const;
};

template <class Field>
Messages<Field> run_det_roundtrip(const DetParams& p, const LinearScheme<Field>& s,
                                  const Messages<Field>& m, const Field& f = Field{}) {
    DetCodec<Field> codec(p, s, f);
    return codec.roundtrip(m);
}

// ------------------------------ implementation ------------------------------

namespace detail {

// Independent column subset via greedy rank growth; returns a matrix whose
// columns form a basis of col(m).
template <class Field>
typename Field::Matrix column_basis(const Field& f, const typename Field::Matrix& m) {
    std::vector<std::size_t> picked;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        picked.push_back(c);
        auto trial = f.zero(m.rows(), picked.size());
        for (std::size_t i = 0; i < picked.size(); ++i)
            for (std::size_t r = 0; r < m.rows(); ++r) trial.set(r, i, m.get(r, picked[i]));
        if (trial.rank() != picked.size()) picked.pop_back();
    }
    auto basis = f.zero(m.rows(), picked.size());
    for (std::size_t i = 0; i < picked.size(); ++i)
        for (std::size_t r = 0; r < m.rows(); ++r) basis.set(r, i, m.get(r, picked[i]));
    return basis;
}

inline bool levels_clash(const std::vector<int>& levels, int delta, int nd) {
    std::vector<bool> in(nd, false);
    for (int a : levels) in[a] = true;
    for (int a : levels)
        if (a + delta < nd && in[a + delta]) return true;
    return false;
}

// Lexicographically first subset of {0..nd-1} of the given size that avoids
// colliding with its own shift. Used as the certified fallback for the
// interference-avoidance regime.
inline bool level_search(std::vector<int>& acc, int next, int want, int delta, int nd) {
    if (static_cast<int>(acc.size()) == want) return !levels_clash(acc, delta, nd);
    if (nd - next < want - static_cast<int>(acc.size())) return false;
    for (int lvl = next; lvl < nd; ++lvl) {
        acc.push_back(lvl);
        if (!levels_clash(acc, delta, nd) && level_search(acc, lvl + 1, want, delta, nd)) return true;
        acc.pop_back();
    }
    return false;
}

}  // namespace detail

template <class Field>
LinearScheme<Field> build_scheme_case1(int nc, int nd, const Field& f) {
    if (!(nd >= 1 && nc >= 0 && 3 * nc < 2 * nd)) throw std::domain_error("ratio out of range for case 1");
    int delta = nd - nc;
    std::vector<int> levels;
    if (2 * nc < nd) {
        for (int a = 0; a < delta; ++a) levels.push_back(a);
    } else {
        for (int a = 0; a < delta; ++a) levels.push_back(a);
        for (int a = 2 * delta; a < nd; ++a) levels.push_back(a);
    }

    auto assemble = [&](const std::vector<int>& lv) {
        LinearScheme<Field> s;
        s.extension = 1;
        s.q = nd;
        s.p11 = detail::columns_from_levels(f, nd, lv);
        s.p22 = detail::columns_from_levels(f, nd, lv);
        s.p12 = f.zero(nd, 0);
        s.p21 = f.zero(nd, 0);
        detail::fill_rates(s);
        return s;
    };

    auto s = assemble(levels);
    if (validate_linear_scheme(DetParams{nd, nc, nc, nd}, s, f).valid) return s;

    // Certified fallback: exhaustive lexicographic search over level subsets.
    if (nd <= 24) {
        std::vector<int> acc;
        if (detail::level_search(acc, 0, static_cast<int>(levels.size()), delta, nd)) {
            auto alt = assemble(acc);
            if (validate_linear_scheme(DetParams{nd, nc, nc, nd}, alt, f).valid) return alt;
        }
    }
    throw std::logic_error("interference-avoidance allocation failed certification");
}

template <class Field>
LinearScheme<Field> build_scheme_case2(int nc, int nd, const Field& f) {
    if (!(3 * nc >= 2 * nd && 4 * nc < 3 * nd)) throw std::domain_error("ratio out of range for case 2");
    int delta = nd - nc;
    std::vector<int> direct_levels, cross_levels;
    for (int a = 0; a < delta; ++a) direct_levels.push_back(a);
    for (int a = 3 * delta; a < nd; ++a) direct_levels.push_back(a);
    for (int a = delta; a < 2 * delta; ++a) cross_levels.push_back(a);

    LinearScheme<Field> s;
    s.extension = 1;
    s.q = nd;
    s.p11 = detail::columns_from_levels(f, nd, direct_levels);
    s.p22 = detail::columns_from_levels(f, nd, direct_levels);
    s.p21 = detail::columns_from_levels(f, nd, cross_levels);
    s.p12 = detail::columns_from_levels(f, nd, cross_levels);
    detail::fill_rates(s);
    return s;
}

template <class Field>
LinearScheme<Field> build_precoder_case3(int nc, int nd, const Field& f) {
    if (!(4 * nc >= 3 * nd && nc < nd)) throw std::domain_error("ratio out of range for case 3");
    if (nc % 3 != 0) throw std::domain_error("case 3 requires nc divisible by 3");

    auto d = cyclic_decompose(nd, nc);
    auto ba = pack_boxes(d, f);
    auto v = box_generator_matrix(d, ba, f);
    auto h = f.shift(nd, nd - nc);
    auto vnull = h.nullspace_basis();

    LinearScheme<Field> s;
    s.extension = 1;
    s.q = nd;
    s.p11 = concat_cols({v, vnull});
    s.p22 = s.p11;
    s.p21 = matmul(h, v);
    s.p12 = s.p21;
    detail::fill_rates(s);
    return s;
}

template <class Field>
LinearScheme<Field> build_precoder_extended(int nc, int nd, const Field& f) {
    if (!(4 * nc >= 3 * nd && nc < nd)) throw std::domain_error("ratio out of range for case 3");

    auto d = extended_decompose(nd, nc);
    auto ba = pack_boxes(d, f);
    auto v = box_generator_matrix(d, ba, f);
    auto h = block_shift(f, nd, nd - nc, 3);
    auto vnull = h.nullspace_basis();

    LinearScheme<Field> s;
    s.extension = 3;
    s.q = nd;
    s.p11 = concat_cols({v, vnull});
    s.p22 = s.p11;
    s.p21 = matmul(h, v);
    s.p12 = s.p21;
    detail::fill_rates(s);
    return s;
}

template <class Field>
LinearScheme<Field> build_scheme(int nc, int nd, const Field& f) {
    if (nc < 0 || nd < 0 || (nc == 0 && nd == 0))
        throw std::invalid_argument("unusable channel: nc = nd = 0");

    if (nc > nd) {
        // Mirrored channel: swapping the receivers turns (nc, nd) into (nd, nc).
        auto base = build_scheme(nd, nc, f);
        LinearScheme<Field> s;
        s.extension = base.extension;
        s.q = base.q;
        s.p11 = base.p21;
        s.p12 = base.p22;
        s.p21 = base.p11;
        s.p22 = base.p12;
        detail::fill_rates(s);
        return s;
    }

    if (nc == nd) {
        // Both receivers see the same signal; a single direct message uses all
        // levels.
        LinearScheme<Field> s;
        s.extension = 1;
        s.q = nd;
        s.p11 = f.identity(nd);
        s.p12 = f.zero(nd, 0);
        s.p21 = f.zero(nd, 0);
        s.p22 = f.zero(nd, 0);
        detail::fill_rates(s);
        return s;
    }

    if (3 * nc < 2 * nd) return build_scheme_case1(nc, nd, f);
    if (4 * nc < 3 * nd) return build_scheme_case2(nc, nd, f);
    if (nc % 3 == 0) return build_precoder_case3(nc, nd, f);
    return build_precoder_extended(nc, nd, f);
}

template <class Field>
typename Field::Solver DetCodec<Field>::make_solver(int rx) const {
    int other = 3 - rx;
    auto des = concat_cols({received_matrix(f_, params_, scheme_.extension, rx, 1, scheme_.precoder(rx, 1)),
                            received_matrix(f_, params_, scheme_.extension, rx, 2, scheme_.precoder(rx, 2))});
    auto intf = concat_cols({received_matrix(f_, params_, scheme_.extension, rx, 1, scheme_.precoder(other, 1)),
                             received_matrix(f_, params_, scheme_.extension, rx, 2, scheme_.precoder(other, 2))});
    auto basis = detail::column_basis(f_, intf);
    return typename Field::Solver(concat_cols({des, basis}));
}

template <class Field>
DetCodec<Field>::DetCodec(const DetParams& p, const LinearScheme<Field>& s, const Field& f)
    : f_(f),
      params_(p),
      scheme_(s),
      cert_(validate_linear_scheme(p, s, f)),
      solver1_((cert_.valid ? make_solver(1)
                            : throw std::invalid_argument("cannot run an invalid scheme"))),
      solver2_(make_solver(2)),
      k11_(s.p11.cols()),
      k12_(s.p12.cols()),
      k21_(s.p21.cols()),
      k22_(s.p22.cols()) {}

template <class Field>
std::pair<typename Field::Vector, typename Field::Vector> DetCodec<Field>::encode(
    const Messages<Field>& m) const {
    auto x1 = matvec(scheme_.p11, m.m11);
    Field::vec_add(x1, matvec(scheme_.p21, m.m21));
    auto x2 = matvec(scheme_.p12, m.m12);
    Field::vec_add(x2, matvec(scheme_.p22, m.m22));
    return {x1, x2};
}

template <class Field>
std::pair<typename Field::Vector, typename Field::Vector> DetCodec<Field>::transmit(
    const Messages<Field>& m) const {
    auto [x1, x2] = encode(m);
    std::size_t q = params_.q();
    auto y1 = f_.zero_vec(x1.size());
    auto y2 = f_.zero_vec(x1.size());
    for (int use = 0; use < scheme_.extension; ++use) {
        auto x1u = f_.zero_vec(q);
        auto x2u = f_.zero_vec(q);
        for (std::size_t i = 0; i < q; ++i) {
            Field::vec_set(x1u, i, Field::vec_get(x1, use * q + i));
            Field::vec_set(x2u, i, Field::vec_get(x2, use * q + i));
        }
        auto [y1u, y2u] = apply_channel(params_, x1u, x2u, f_);
        for (std::size_t i = 0; i < q; ++i) {
            Field::vec_set(y1, use * q + i, Field::vec_get(y1u, i));
            Field::vec_set(y2, use * q + i, Field::vec_get(y2u, i));
        }
    }
    return {y1, y2};
}

template <class Field>
Messages<Field> DetCodec<Field>::decode(const typename Field::Vector& y1,
                                        const typename Field::Vector& y2) const {
    auto z1 = solver1_.solve(y1);
    auto z2 = solver2_.solve(y2);
    if (!z1 || !z2) throw std::runtime_error("received vector outside the decodable span");
    Messages<Field> out;
    out.m11 = f_.zero_vec(k11_);
    out.m12 = f_.zero_vec(k12_);
    out.m21 = f_.zero_vec(k21_);
    out.m22 = f_.zero_vec(k22_);
    for (std::size_t i = 0; i < k11_; ++i) Field::vec_set(out.m11, i, Field::vec_get(*z1, i));
    for (std::size_t i = 0; i < k12_; ++i) Field::vec_set(out.m12, i, Field::vec_get(*z1, k11_ + i));
    for (std::size_t i = 0; i < k21_; ++i) Field::vec_set(out.m21, i, Field::vec_get(*z2, i));
    for (std::size_t i = 0; i < k22_; ++i) Field::vec_set(out.m22, i, Field::vec_get(*z2, k21_ + i));
    return out;
}

template <class Field>
Messages<Field> DetCodec<Field>::zero_messages() const {
    Messages<Field> m;
    m.m11 = f_.zero_vec(k11_);
    m.m12 = f_.zero_vec(k12_);
    m.m21 = f_.zero_vec(k21_);
    m.m22 = f_.zero_vec(k22_);
    return m;
}

template <class Field>
Messages<Field> DetCodec<Field>::messages_from_index(unsigned long long index) const {
    auto m = zero_messages();
    std::uint32_t base = f_.field_size();
    auto fill = [&](typename Field::Vector& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            Field::vec_set(v, i, static_cast<std::uint32_t>(index % base));
            index /= base;
        }
    };
    fill(m.m11);
    fill(m.m12);
    fill(m.m21);
    fill(m.m22);
    return m;
}

template <class Field>
Messages<Field> DetCodec<Field>::random_messages(SplitMix64& rng) const {
    auto m = zero_messages();
    std::uint32_t base = f_.field_size();
    auto fill = [&](typename Field::Vector& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            Field::vec_set(v, i, static_cast<std::uint32_t>(rng.next_below(base)));
    };
    fill(m.m11);
    fill(m.m12);
    fill(m.m21);
    fill(m.m22);
    return m;
}

template <class Field>
bool messages_equal(const Messages<Field>& a, const Messages<Field>& b) {
    return a.m11 == b.m11 && a.m12 == b.m12 && a.m21 == b.m21 && a.m22 == b.m22;
}

}  // namespace xchan
