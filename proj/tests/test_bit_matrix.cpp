#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "xchannel/bit_matrix.hpp"
#include "xchannel/hex_io.hpp"
#include "xchannel/rng.hpp"

using namespace xchan;

namespace {

// Independent plain-int elimination, used as the oracle for the packed code.
std::size_t naive_rank(std::vector<std::vector<int>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && m[r][c])
                for (std::size_t j = 0; j < cols; ++j) m[r][j] ^= m[rank][j];
        ++rank;
    }
    return rank;
}

std::vector<std::vector<int>> unpack(const BitMatrix& m) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
    return out;
}

BitMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.next_unit() < density) m.set(r, c, true);
    return m;
}

}  // namespace

TEST_CASE("shift matrix basics") {
    CHECK(BitMatrix::shift(3, 0) == BitMatrix::identity(3));
    CHECK(BitMatrix::shift(3, 3) == BitMatrix::zero(3, 3));
    CHECK(BitMatrix::shift(3, 7) == BitMatrix::zero(3, 3));
    CHECK_THROWS(BitMatrix::shift(0, 1));

    // dim ker(S^k) = min(k, q)
    CHECK(BitMatrix::shift(5, 2).nullspace_basis().cols() == 2);
}

TEST_CASE("rank examples") {
    CHECK(BitMatrix::zero(4, 4).rank() == 0);
    CHECK(BitMatrix::identity(5).rank() == 5);
    CHECK(BitMatrix::shift(5, 1).rank() == 4);
}

TEST_CASE("nullspace examples") {
    auto k1 = BitMatrix::shift(5, 1).nullspace_basis();
    REQUIRE(k1.cols() == 1);
    CHECK(k1.col(0) == BitVector::unit(5, 4));  // the last standard basis vector

    CHECK(BitMatrix::identity(4).nullspace_basis().cols() == 0);

    // S^3 on 15 levels: kernel must be exactly span{e13, e14, e15}
    auto m = BitMatrix::shift(15, 3);
    auto basis = m.nullspace_basis();
    REQUIRE(basis.cols() == 3);
    for (std::size_t c = 0; c < 3; ++c) {
        CHECK(matvec(m, basis.col(c)).is_zero());
        for (std::size_t r = 0; r < 12; ++r) CHECK_FALSE(basis.get(r, c));
    }
    CHECK(naive_rank(unpack(basis)) == 3);
}

TEST_CASE("products and concatenation") {
    CHECK(matmul(BitMatrix::shift(4, 1), BitMatrix::shift(4, 1)) == BitMatrix::shift(4, 2));

    auto cat = concat_cols({BitMatrix::identity(2), BitMatrix::identity(2)});
    CHECK(cat.rows() == 2);
    CHECK(cat.cols() == 4);
    CHECK(cat.rank() == 2);

    CHECK(matvec(BitMatrix::shift(3, 1), BitVector::unit(3, 0)) == BitVector::unit(3, 1));

    CHECK_THROWS(matmul(BitMatrix::identity(3), BitMatrix::identity(4)));
}

TEST_CASE("shift power law") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t q = 1 + rng.next_below(20);
        std::size_t a = rng.next_below(q + 3);
        std::size_t b = rng.next_below(q + 3);
        CHECK(matmul(BitMatrix::shift(q, a), BitMatrix::shift(q, b)) == BitMatrix::shift(q, a + b));
    }
}

TEST_CASE("rank-nullity and the naive oracle") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng.next_below(18);
        std::size_t cols = 1 + rng.next_below(18);
        auto m = random_matrix(rng, rows, cols);
        CHECK(m.rank() == naive_rank(unpack(m)));
        CHECK(m.rank() + m.nullspace_basis().cols() == cols);
        // every basis column is annihilated
        auto basis = m.nullspace_basis();
        for (std::size_t c = 0; c < basis.cols(); ++c) CHECK(matvec(m, basis.col(c)).is_zero());
    }
}

TEST_CASE("rank invariant under permutations") {
    SplitMix64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + rng.next_below(14);
        auto m = random_matrix(rng, n, n);
        auto before = m.rank();

        std::vector<std::size_t> rp(n), cp(n);
        for (std::size_t i = 0; i < n; ++i) rp[i] = cp[i] = i;
        for (std::size_t i = n; i > 1; --i) {
            std::swap(rp[i - 1], rp[rng.next_below(i)]);
            std::swap(cp[i - 1], cp[rng.next_below(i)]);
        }
        BitMatrix perm(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) perm.set(r, c, m.get(rp[r], cp[c]));
        CHECK(perm.rank() == before);
    }
}

TEST_CASE("vector shifting") {
    BitVector v(70);
    v.set(0, true);
    v.set(64, true);
    auto s = v.shifted_down(3);
    CHECK(s.get(3));
    CHECK(s.get(67));
    CHECK_FALSE(s.get(0));
    CHECK(v.shifted_down(70).is_zero());
    CHECK(v.shifted_down(0) == v);
}

TEST_CASE("solver on full column rank systems") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t cols = 1 + rng.next_below(10);
        std::size_t rows = cols + rng.next_below(6);
        BitMatrix m(rows, cols);
        do {
            m = random_matrix(rng, rows, cols);
        } while (m.rank() != cols);

        Gf2Solver solver(m);
        REQUIRE(solver.full_column_rank());
        BitVector z(cols);
        for (std::size_t i = 0; i < cols; ++i) z.set(i, rng.next() & 1);
        auto y = matvec(m, z);
        auto back = solver.solve(y);
        REQUIRE(back.has_value());
        CHECK(*back == z);
    }

    // rank-deficient input is reported, not silently accepted
    BitMatrix bad(3, 2);
    bad.set(0, 0, true);
    bad.set(0, 1, true);
    Gf2Solver s(bad);
    CHECK_FALSE(s.full_column_rank());
}

TEST_CASE("hex row serialization round trip") {
    SplitMix64 rng(59);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + rng.next_below(8);
        std::size_t cols = 1 + rng.next_below(70);
        auto m = random_matrix(rng, rows, cols);
        auto hex = rows_to_hex(m);
        CHECK(matrix_from_hex(rows, cols, hex) == m);
    }
    // MSB of the hex string is column 0
    BitMatrix m(1, 3);
    m.set(0, 0, true);
    m.set(0, 2, true);
    CHECK(rows_to_hex(m) == std::vector<std::string>{"a"});
}
