#include "xchannel/prime_field.hpp"

#include <stdexcept>

namespace xchan {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeVector PrimeVector::unit(std::size_t n, std::size_t i, std::uint32_t p) {
    PrimeVector v(n, p);
    if (i >= n) throw std::out_of_range("unit vector index out of range");
    v.set(i, 1);
    return v;
}

void PrimeVector::add_with(const PrimeVector& o) {
    if (size() != o.size() || p_ != o.p_) throw std::invalid_argument("vector mismatch in add");
    for (std::size_t i = 0; i < vals_.size(); ++i) vals_[i] = (vals_[i] + o.vals_[i]) % p_;
}

bool PrimeVector::is_zero() const {
    for (auto v : vals_)
        if (v) return false;
    return true;
}

PrimeVector PrimeVector::shifted_down(std::size_t k) const {
    PrimeVector out(size(), p_);
    for (std::size_t i = k; i < size(); ++i) out.vals_[i] = vals_[i - k];
    return out;
}

PrimeFieldMatrix::PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), vals_(rows * cols, 0) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
}

PrimeFieldMatrix PrimeFieldMatrix::identity(std::size_t n, std::uint32_t p) {
    PrimeFieldMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

PrimeFieldMatrix PrimeFieldMatrix::shift(std::size_t q, std::size_t k, std::uint32_t p) {
    if (q == 0) throw std::invalid_argument("shift matrix with empty dimension");
    PrimeFieldMatrix m(q, q, p);
    for (std::size_t j = 0; j + k < q; ++j) m.set(j + k, j, 1);
    return m;
}

PrimeVector PrimeFieldMatrix::col(std::size_t c) const {
    PrimeVector v(rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r) v.set(r, get(r, c));
    return v;
}

void PrimeFieldMatrix::set_col(std::size_t c, const PrimeVector& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) set(r, c, v.get(r));
}

std::uint32_t PrimeFieldMatrix::inv(std::uint32_t a) const {
    // Fermat: a^(p-2) mod p
    std::uint64_t base = a % p_, acc = 1;
    std::uint32_t e = p_ - 2;
    while (e) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

namespace {

struct Rref {
    PrimeFieldMatrix m;
    std::vector<std::size_t> pivot_col;
};

Rref rref_of(const PrimeFieldMatrix& in, std::uint32_t p) {
    Rref out{in, {}};
    auto& m = out.m;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.get(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                auto t = m.get(rank, j);
                m.set(rank, j, m.get(pivot, j));
                m.set(pivot, j, t);
            }
        // scale pivot row to 1
        std::uint64_t s = 1;
        {
            std::uint64_t base = m.get(rank, c), acc = 1;
            std::uint32_t e = p - 2;
            while (e) {
                if (e & 1) acc = acc * base % p;
                base = base * base % p;
                e >>= 1;
            }
            s = acc;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) m.set(rank, j, static_cast<std::uint32_t>(m.get(rank, j) * s % p));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            std::uint64_t f = m.get(r, c);
            if (!f) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::uint64_t v = m.get(r, j) + (p - 1ull) * f % p * m.get(rank, j);
                m.set(r, j, static_cast<std::uint32_t>(v % p));
            }
        }
        out.pivot_col.push_back(c);
        ++rank;
    }
    return out;
}

}  // namespace

std::size_t PrimeFieldMatrix::rank() const { return rref_of(*this, p_).pivot_col.size(); }

PrimeFieldMatrix PrimeFieldMatrix::nullspace_basis() const {
    Rref r = rref_of(*this, p_);
    std::size_t rank = r.pivot_col.size();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : r.pivot_col) is_pivot[c] = true;

    PrimeFieldMatrix basis(cols_, cols_ - rank, p_);
    std::size_t out = 0;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        basis.set(f, out, 1);
        for (std::size_t row = 0; row < rank; ++row) {
            std::uint32_t coeff = r.m.get(row, f);
            if (coeff) basis.set(r.pivot_col[row], out, p_ - coeff);
        }
        ++out;
    }
    return basis;
}

PrimeFieldMatrix matmul(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul dimension mismatch");
    if (a.modulus() != b.modulus()) throw std::invalid_argument("matmul modulus mismatch");
    std::uint64_t p = a.modulus();
    PrimeFieldMatrix c(a.rows(), b.cols(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint64_t f = a.get(i, k);
            if (!f) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                std::uint64_t v = c.get(i, j) + f * b.get(k, j);
                c.set(i, j, static_cast<std::uint32_t>(v % p));
            }
        }
    return c;
}

PrimeVector matvec(const PrimeFieldMatrix& a, const PrimeVector& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matvec dimension mismatch");
    std::uint64_t p = a.modulus();
    PrimeVector out(a.rows(), a.modulus());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += static_cast<std::uint64_t>(a.get(r, j)) * v.get(j) % p;
        out.set(r, static_cast<std::uint32_t>(acc % p));
    }
    return out;
}

PrimeFieldMatrix concat_cols(const std::vector<PrimeFieldMatrix>& parts) {
    if (parts.empty()) throw std::invalid_argument("concat_cols of nothing");
    std::size_t rows = parts.front().rows(), cols = 0;
    std::uint32_t p = parts.front().modulus();
    for (const auto& part : parts) {
        if (part.rows() != rows || part.modulus() != p) throw std::invalid_argument("concat_cols mismatch");
        cols += part.cols();
    }
    PrimeFieldMatrix out(rows, cols, p);
    std::size_t at = 0;
    for (const auto& part : parts)
        for (std::size_t c = 0; c < part.cols(); ++c, ++at)
            for (std::size_t r = 0; r < rows; ++r) out.set(r, at, part.get(r, c));
    return out;
}

PrimeSolver::PrimeSolver(const PrimeFieldMatrix& m)
    : rows_(m.rows()),
      cols_(m.cols()),
      full_rank_(false),
      transform_(PrimeFieldMatrix::identity(m.rows(), m.modulus())) {
    std::uint64_t p = m.modulus();
    PrimeFieldMatrix work = m;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && work.get(pivot, c) == 0) ++pivot;
        if (pivot == rows_) return;
        if (pivot != rank)
            for (std::size_t j = 0; j < rows_ || j < cols_; ++j) {
                if (j < cols_) {
                    auto t = work.get(rank, j);
                    work.set(rank, j, work.get(pivot, j));
                    work.set(pivot, j, t);
                }
                if (j < rows_) {
                    auto t = transform_.get(rank, j);
                    transform_.set(rank, j, transform_.get(pivot, j));
                    transform_.set(pivot, j, t);
                }
            }
        std::uint64_t s;
        {
            std::uint64_t base = work.get(rank, c), acc = 1;
            std::uint32_t e = static_cast<std::uint32_t>(p) - 2;
            while (e) {
                if (e & 1) acc = acc * base % p;
                base = base * base % p;
                e >>= 1;
            }
            s = acc;
        }
        for (std::size_t j = 0; j < cols_; ++j) work.set(rank, j, static_cast<std::uint32_t>(work.get(rank, j) * s % p));
        for (std::size_t j = 0; j < rows_; ++j)
            transform_.set(rank, j, static_cast<std::uint32_t>(transform_.get(rank, j) * s % p));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            std::uint64_t f = work.get(r, c);
            if (!f) continue;
            std::uint64_t neg = (p - f) % p;
            for (std::size_t j = 0; j < cols_; ++j)
                work.set(r, j, static_cast<std::uint32_t>((work.get(r, j) + neg * work.get(rank, j)) % p));
            for (std::size_t j = 0; j < rows_; ++j)
                transform_.set(r, j, static_cast<std::uint32_t>((transform_.get(r, j) + neg * transform_.get(rank, j)) % p));
        }
        ++rank;
    }
    full_rank_ = (rank == cols_);
}

std::optional<PrimeVector> PrimeSolver::solve(const PrimeVector& y) const {
    if (!full_rank_) throw std::logic_error("solver requires full column rank");
    if (y.size() != rows_) throw std::invalid_argument("solve dimension mismatch");
    PrimeVector t = matvec(transform_, y);
    for (std::size_t r = cols_; r < rows_; ++r)
        if (t.get(r)) return std::nullopt;
    PrimeVector z(cols_, y.modulus());
    for (std::size_t r = 0; r < cols_; ++r) z.set(r, t.get(r));
    return z;
}

}  // namespace xchan
