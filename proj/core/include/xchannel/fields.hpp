#pragma once

#include <cstdint>
#include <stdexcept>

#include "xchannel/bit_matrix.hpp"
#include "xchannel/prime_field.hpp"

namespace xchan {

// Field adapters so the scheme builders can be written once and instantiated
// over GF(2) (the default for all deterministic-channel work) or F_p.

struct Gf2Field {
    using Matrix = BitMatrix;
    using Vector = BitVector;
    using Solver = Gf2Solver;

    std::uint32_t field_size() const { return 2; }
    Matrix identity(std::size_t n) const { return BitMatrix::identity(n); }
    Matrix zero(std::size_t r, std::size_t c) const { return BitMatrix::zero(r, c); }
    Matrix shift(std::size_t q, std::size_t k) const { return BitMatrix::shift(q, k); }
    Vector zero_vec(std::size_t n) const { return BitVector(n); }
    Vector unit_vec(std::size_t n, std::size_t i) const { return BitVector::unit(n, i); }
    static void vec_set(Vector& v, std::size_t i, std::uint32_t val) { v.set(i, val & 1u); }
    static std::uint32_t vec_get(const Vector& v, std::size_t i) { return v.get(i) ? 1u : 0u; }
    static void vec_add(Vector& dst, const Vector& src) { dst.xor_with(src); }
};

struct PrimeFieldCtx {
    std::uint32_t p;

    explicit PrimeFieldCtx(std::uint32_t prime) : p(prime) {
        if (!is_prime(prime)) throw std::invalid_argument("field modulus must be prime");
    }

    using Matrix = PrimeFieldMatrix;
    using Vector = PrimeVector;
    using Solver = PrimeSolver;

    std::uint32_t field_size() const { return p; }
    Matrix identity(std::size_t n) const { return PrimeFieldMatrix::identity(n, p); }
    Matrix zero(std::size_t r, std::size_t c) const { return PrimeFieldMatrix::zero(r, c, p); }
    Matrix shift(std::size_t q, std::size_t k) const { return PrimeFieldMatrix::shift(q, k, p); }
    Vector zero_vec(std::size_t n) const { return PrimeVector(n, p); }
    Vector unit_vec(std::size_t n, std::size_t i) const { return PrimeVector::unit(n, i, p); }
    static void vec_set(Vector& v, std::size_t i, std::uint32_t val) { v.set(i, val); }
    static std::uint32_t vec_get(const Vector& v, std::size_t i) { return v.get(i); }
    static void vec_add(Vector& dst, const Vector& src) { dst.add_with(src); }
};

}  // namespace xchan
