#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "xchannel/prime_field.hpp"
#include "xchannel/rng.hpp"

using namespace xchan;

namespace {

std::size_t naive_rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
    if (m.empty()) return 0;
    auto inv = [&](long long a) {
        long long base = a % p, acc = 1, e = p - 2;
        while (e) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return acc;
    };
    std::size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        long long s = inv(m[rank][c]);
        for (auto& v : m[rank]) v = v * s % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            long long f = m[r][c];
            for (std::size_t j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

PrimeFieldMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, std::uint32_t p) {
    PrimeFieldMatrix m(rows, cols, p);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, static_cast<std::uint32_t>(rng.next_below(p)));
    return m;
}

}  // namespace

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(23));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(21));
    CHECK_THROWS(PrimeFieldMatrix(2, 2, 4));
}

TEST_CASE("shift and identity mirror the binary API") {
    CHECK(PrimeFieldMatrix::shift(3, 0, 5) == PrimeFieldMatrix::identity(3, 5));
    CHECK(PrimeFieldMatrix::shift(3, 3, 5) == PrimeFieldMatrix::zero(3, 3, 5));
    CHECK_THROWS(PrimeFieldMatrix::shift(0, 1, 5));
    CHECK(PrimeFieldMatrix::shift(5, 2, 3).nullspace_basis().cols() == 2);
    CHECK(matmul(PrimeFieldMatrix::shift(4, 1, 7), PrimeFieldMatrix::shift(4, 1, 7)) ==
          PrimeFieldMatrix::shift(4, 2, 7));
}

TEST_CASE("rank against the naive oracle") {
    SplitMix64 rng(17);
    for (std::uint32_t p : {3u, 5u, 23u}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t rows = 1 + rng.next_below(12);
            std::size_t cols = 1 + rng.next_below(12);
            auto m = random_matrix(rng, rows, cols, p);
            std::vector<std::vector<long long>> plain(rows, std::vector<long long>(cols));
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c) plain[r][c] = m.get(r, c);
            CHECK(m.rank() == naive_rank_mod_p(plain, p));
            CHECK(m.rank() + m.nullspace_basis().cols() == cols);
            auto basis = m.nullspace_basis();
            for (std::size_t c = 0; c < basis.cols(); ++c) CHECK(matvec(m, basis.col(c)).is_zero());
        }
    }
}

TEST_CASE("solver over F_p") {
    SplitMix64 rng(31);
    for (std::uint32_t p : {3u, 23u}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t cols = 1 + rng.next_below(8);
            std::size_t rows = cols + rng.next_below(5);
            PrimeFieldMatrix m(rows, cols, p);
            do {
                m = random_matrix(rng, rows, cols, p);
            } while (m.rank() != cols);
            PrimeSolver solver(m);
            REQUIRE(solver.full_column_rank());
            PrimeVector z(cols, p);
            for (std::size_t i = 0; i < cols; ++i) z.set(i, static_cast<std::uint32_t>(rng.next_below(p)));
            auto back = solver.solve(matvec(m, z));
            REQUIRE(back.has_value());
            CHECK(*back == z);
        }
    }
}

TEST_CASE("vector shift over F_p") {
    PrimeVector v(5, 7);
    v.set(0, 3);
    v.set(4, 6);
    auto s = v.shifted_down(2);
    CHECK(s.get(2) == 3);
    CHECK(s.get(0) == 0);
    CHECK(s.get(4) == 0);  // entry 4 came from entry 2, which was zero
}
