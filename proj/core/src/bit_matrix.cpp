#include "xchannel/bit_matrix.hpp"

#include <stdexcept>

namespace xchan {

BitVector BitVector::unit(std::size_t n, std::size_t i) {
    BitVector v(n);
    if (i >= n) throw std::out_of_range("unit vector index out of range");
    v.set(i, true);
    return v;
}

void BitVector::xor_with(const BitVector& o) {
    if (size_ != o.size_) throw std::invalid_argument("vector size mismatch in xor");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
}

bool BitVector::is_zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

void BitVector::mask_tail() {
    std::size_t tail = size_ & 63;
    if (tail && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

BitVector BitVector::shifted_down(std::size_t k) const {
    BitVector out(size_);
    if (k >= size_) return out;
    std::size_t word_shift = k >> 6, bit_shift = k & 63;
    for (std::size_t i = words_.size(); i-- > word_shift;) {
        std::uint64_t w = words_[i - word_shift] << bit_shift;
        if (bit_shift && i > word_shift) w |= words_[i - word_shift - 1] >> (64 - bit_shift);
        out.words_[i] = w;
    }
    out.mask_tail();
    return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), words_(rows * wpr_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::shift(std::size_t q, std::size_t k) {
    if (q == 0) throw std::invalid_argument("shift matrix with empty dimension");
    BitMatrix m(q, q);
    for (std::size_t j = 0; j + k < q; ++j) m.set(j + k, j, true);
    return m;
}

bool BitMatrix::operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && words_ == o.words_;
}

BitVector BitMatrix::col(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.set(r, get(r, c));
    return v;
}

void BitMatrix::set_col(std::size_t c, const BitVector& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) set(r, c, v.get(r));
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    std::uint64_t* d = &words_[dst * wpr_];
    const std::uint64_t* s = &words_[src * wpr_];
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < wpr_; ++i) std::swap(words_[a * wpr_ + i], words_[b * wpr_ + i]);
}

std::size_t BitMatrix::rank() const {
    BitMatrix m = *this;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols_ && rank < m.rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows_ && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows_) continue;
        m.swap_rows(rank, pivot);
        for (std::size_t r = pivot + 1; r < m.rows_; ++r)
            if (m.get(r, c)) m.xor_row(r, rank);
        ++rank;
    }
    return rank;
}

BitMatrix BitMatrix::nullspace_basis() const {
    // Reduced row echelon form, tracking pivot columns.
    BitMatrix m = *this;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols_ && rank < m.rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows_ && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows_) continue;
        m.swap_rows(rank, pivot);
        for (std::size_t r = 0; r < m.rows_; ++r)
            if (r != rank && m.get(r, c)) m.xor_row(r, rank);
        pivot_col.push_back(c);
        ++rank;
    }

    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivot_col) is_pivot[c] = true;

    BitMatrix basis(cols_, cols_ - rank);
    std::size_t out = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        basis.set(f, out, true);
        for (std::size_t r = 0; r < rank; ++r)
            if (m.get(r, f)) basis.set(pivot_col[r], out, true);
        ++out;
    }
    return basis;
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul dimension mismatch");
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t* dst = &c.words_[i * c.wpr_];
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.get(i, j)) continue;
            const std::uint64_t* src = &b.words_[j * b.wpr_];
            for (std::size_t w = 0; w < b.wpr_; ++w) dst[w] ^= src[w];
        }
    }
    return c;
}

BitVector matvec(const BitMatrix& a, const BitVector& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matvec dimension mismatch");
    BitVector out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        bool acc = false;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.get(r, j) && v.get(j)) acc = !acc;
        out.set(r, acc);
    }
    return out;
}

BitMatrix concat_cols(const std::vector<BitMatrix>& parts) {
    std::size_t rows = 0, cols = 0;
    for (const auto& p : parts) {
        if (p.cols() == 0) continue;
        if (rows == 0)
            rows = p.rows();
        else if (p.rows() != rows)
            throw std::invalid_argument("concat_cols row mismatch");
        cols += p.cols();
    }
    if (rows == 0 && !parts.empty()) rows = parts.front().rows();
    BitMatrix out(rows, cols);
    std::size_t at = 0;
    for (const auto& p : parts) {
        for (std::size_t c = 0; c < p.cols(); ++c, ++at)
            for (std::size_t r = 0; r < p.rows(); ++r)
                if (p.get(r, c)) out.set(r, at, true);
    }
    return out;
}

Gf2Solver::Gf2Solver(const BitMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), full_rank_(false), transform_(BitMatrix::identity(m.rows())) {
    BitMatrix work = m;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !work.get(pivot, c)) ++pivot;
        if (pivot == rows_) return;  // column without pivot: not full column rank
        work.swap_rows(rank, pivot);
        transform_.swap_rows(rank, pivot);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != rank && work.get(r, c)) {
                work.xor_row(r, rank);
                transform_.xor_row(r, rank);
            }
        }
        ++rank;
    }
    full_rank_ = (rank == cols_);
}

std::optional<BitVector> Gf2Solver::solve(const BitVector& y) const {
    if (!full_rank_) throw std::logic_error("solver requires full column rank");
    if (y.size() != rows_) throw std::invalid_argument("solve dimension mismatch");
    BitVector t = matvec(transform_, y);
    for (std::size_t r = cols_; r < rows_; ++r)
        if (t.get(r)) return std::nullopt;
    BitVector z(cols_);
    for (std::size_t r = 0; r < cols_; ++r) z.set(r, t.get(r));
    return z;
}

}  // namespace xchan
