#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace xchan {

bool is_prime(std::uint32_t n);

// Vector over F_p. Entries are kept reduced mod p.
class PrimeVector {
public:
    PrimeVector() : p_(2) {}
    PrimeVector(std::size_t n, std::uint32_t p) : p_(p), vals_(n, 0) {}

    static PrimeVector unit(std::size_t n, std::size_t i, std::uint32_t p);

    std::size_t size() const { return vals_.size(); }
    std::uint32_t modulus() const { return p_; }
    std::uint32_t get(std::size_t i) const { return vals_[i]; }
    void set(std::size_t i, std::uint32_t v) { vals_[i] = v % p_; }

    void add_with(const PrimeVector& o);
    bool is_zero() const;
    bool operator==(const PrimeVector& o) const { return p_ == o.p_ && vals_ == o.vals_; }
    bool operator!=(const PrimeVector& o) const { return !(*this == o); }

    PrimeVector shifted_down(std::size_t k) const;

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> vals_;
};

// Dense matrix over F_p for a runtime prime modulus. Mirrors BitMatrix so the
// alignment scheme builders can be instantiated over either field.
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix() : rows_(0), cols_(0), p_(2) {}
    PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static PrimeFieldMatrix identity(std::size_t n, std::uint32_t p);
    static PrimeFieldMatrix zero(std::size_t rows, std::size_t cols, std::uint32_t p) {
        return PrimeFieldMatrix(rows, cols, p);
    }
    static PrimeFieldMatrix shift(std::size_t q, std::size_t k, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }

    std::uint32_t get(std::size_t r, std::size_t c) const { return vals_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint32_t v) { vals_[r * cols_ + c] = v % p_; }

    bool operator==(const PrimeFieldMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && vals_ == o.vals_;
    }

    PrimeVector col(std::size_t c) const;
    void set_col(std::size_t c, const PrimeVector& v);

    std::size_t rank() const;
    PrimeFieldMatrix nullspace_basis() const;

private:
    std::size_t rows_, cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> vals_;

    std::uint32_t inv(std::uint32_t a) const;
    friend class PrimeSolver;
};

PrimeFieldMatrix matmul(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);
PrimeVector matvec(const PrimeFieldMatrix& a, const PrimeVector& v);
PrimeFieldMatrix concat_cols(const std::vector<PrimeFieldMatrix>& parts);

class PrimeSolver {
public:
    explicit PrimeSolver(const PrimeFieldMatrix& m);
    bool full_column_rank() const { return full_rank_; }
    std::optional<PrimeVector> solve(const PrimeVector& y) const;

private:
    std::size_t rows_, cols_;
    bool full_rank_;
    PrimeFieldMatrix transform_;
};

}  // namespace xchan
