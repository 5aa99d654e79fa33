#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace xchan {

// Vector over GF(2), packed 64 bits per word.
class BitVector {
public:
    BitVector() : size_(0) {}
    explicit BitVector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static BitVector unit(std::size_t n, std::size_t i);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void xor_with(const BitVector& o);
    bool is_zero() const;
    bool operator==(const BitVector& o) const { return size_ == o.size_ && words_ == o.words_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }

    // Entry i of the result is entry i-k of the input; entries pushed past the
    // end are dropped.
    BitVector shifted_down(std::size_t k) const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t size_;
    std::vector<std::uint64_t> words_;
    void mask_tail();
    friend class BitMatrix;
};

// Dense matrix over GF(2), rows packed 64 entries per word. All arithmetic is
// exact; there is no floating point anywhere in this module.
class BitMatrix {
public:
    BitMatrix() : rows_(0), cols_(0), wpr_(0) {}
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix zero(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }
    // Entry (i,j) = 1 iff i = j+k. k >= q gives the zero matrix; q = 0 is an error.
    static BitMatrix shift(std::size_t q, std::size_t k);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (v)
            words_[r * wpr_ + (c >> 6)] |= mask;
        else
            words_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    bool operator==(const BitMatrix& o) const;
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

    BitVector col(std::size_t c) const;
    void set_col(std::size_t c, const BitVector& v);

    std::size_t rank() const;
    // Columns form a basis of the kernel; column count equals cols() - rank().
    BitMatrix nullspace_basis() const;

private:
    std::size_t rows_, cols_, wpr_;
    std::vector<std::uint64_t> words_;

    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);
    friend BitMatrix matmul(const BitMatrix&, const BitMatrix&);
    friend class Gf2Solver;
};

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);
BitVector matvec(const BitMatrix& a, const BitVector& v);
BitMatrix concat_cols(const std::vector<BitMatrix>& parts);

// Solves M z = y for matrices with full column rank via a precomputed
// Gauss-Jordan transform; solve() returns nullopt when y is inconsistent.
class Gf2Solver {
public:
    explicit Gf2Solver(const BitMatrix& m);
    bool full_column_rank() const { return full_rank_; }
    std::optional<BitVector> solve(const BitVector& y) const;

private:
    std::size_t rows_, cols_;
    bool full_rank_;
    BitMatrix transform_;  // rows x rows row-operation matrix T with T*M = [I; 0]
};

}  // namespace xchan
