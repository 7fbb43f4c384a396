#pragma once

#include <cstdint>
#include <ostream>
#include <random>

namespace apolab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u64 kDefaultPrime = 2147483647ULL; // 2^31 - 1

// Residue in [0, p). The modulus lives in PrimeField; elements carry only
// the canonical representative.
struct FieldElem {
    u64 value = 0;

    friend constexpr bool operator==(FieldElem, FieldElem) = default;
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

inline std::ostream& operator<<(std::ostream& os, FieldElem a) { return os << a.value; }

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n) noexcept;

class SeededRng;

/// Arithmetic modulo a fixed prime p. The constructor rejects composites;
/// callers that also need p > e use `require_exceeds`.
class PrimeField {
public:
    explicit PrimeField(u64 prime = kDefaultPrime);

    u64 prime() const noexcept { return p_; }

    FieldElem zero() const noexcept { return {0}; }
    FieldElem one() const noexcept { return {1}; }

    /// Reduces an arbitrary unsigned integer into the field.
    FieldElem from_uint(u64 v) const noexcept { return {v % p_}; }
    FieldElem from_int(long long v) const noexcept;

    FieldElem add(FieldElem a, FieldElem b) const noexcept {
        u64 s = a.value + b.value; // both < p < 2^64, but the sum can wrap
        if (s < a.value || s >= p_) s -= p_;
        return {s};
    }
    FieldElem sub(FieldElem a, FieldElem b) const noexcept {
        return {a.value >= b.value ? a.value - b.value : a.value + (p_ - b.value)};
    }
    FieldElem neg(FieldElem a) const noexcept { return {a.value == 0 ? 0 : p_ - a.value}; }
    FieldElem mul(FieldElem a, FieldElem b) const noexcept {
        return {static_cast<u64>(static_cast<u128>(a.value) * b.value % p_)};
    }
    FieldElem pow(FieldElem a, u64 exponent) const noexcept;

    /// a^(p-2). Throws Error(ZeroInverse) on a == 0.
    FieldElem inv(FieldElem a) const;

    /// Uniform over [1, p).
    FieldElem random_nonzero(SeededRng& rng) const;
    /// Uniform over [0, p).
    FieldElem random(SeededRng& rng) const;

    /// Throws Error(InvalidArgument) unless p > bound.
    void require_exceeds(u64 bound) const;

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

private:
    u64 p_;
};

/// Single-owner pseudo-random stream. Never shared between tasks; derive a
/// child stream with `derive_seed` instead.
class SeededRng {
public:
    explicit SeededRng(u64 seed) : seed_(seed), engine_(seed) {}

    u64 seed() const noexcept { return seed_; }
    std::mt19937_64& engine() noexcept { return engine_; }

    /// Uniform over [lo, hi].
    u64 uniform(u64 lo, u64 hi) {
        return std::uniform_int_distribution<u64>(lo, hi)(engine_);
    }

private:
    u64 seed_;
    std::mt19937_64 engine_;
};

/// SplitMix64 mixing of (master, index); gives independent per-task seeds.
u64 derive_seed(u64 master, u64 index) noexcept;

} // namespace apolab
