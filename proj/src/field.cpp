#include "apolab/field.hpp"

#include "apolab/errors.hpp"

#include <array>
#include <string>

namespace apolab {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) noexcept { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exponent, u64 m) noexcept {
    u64 result = 1 % m;
    base %= m;
    while (exponent > 0) {
        if (exponent & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exponent >>= 1U;
    }
    return result;
}

} // namespace

bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    constexpr std::array<u64, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 w : witnesses) {
        if (n % w == 0) return n == w;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (u64 w : witnesses) {
        u64 x = powmod(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(u64 prime) : p_(prime) {
    if (!is_prime(prime)) {
        throw Error(ErrorCode::InvalidArgument, "modulus " + std::to_string(prime) + " is not prime");
    }
}

FieldElem PrimeField::from_int(long long v) const noexcept {
    if (v >= 0) return from_uint(static_cast<u64>(v));
    // -(v+1) avoids overflow at LLONG_MIN
    u64 magnitude = static_cast<u64>(-(v + 1)) + 1;
    return neg(from_uint(magnitude));
}

FieldElem PrimeField::pow(FieldElem a, u64 exponent) const noexcept { return {powmod(a.value, exponent, p_)}; }

FieldElem PrimeField::inv(FieldElem a) const {
    if (a.value == 0) throw Error(ErrorCode::ZeroInverse, "inverse of zero requested");
    return pow(a, p_ - 2);
}

FieldElem PrimeField::random_nonzero(SeededRng& rng) const { return {rng.uniform(1, p_ - 1)}; }

FieldElem PrimeField::random(SeededRng& rng) const { return {rng.uniform(0, p_ - 1)}; }

void PrimeField::require_exceeds(u64 bound) const {
    if (p_ <= bound) {
        throw Error(ErrorCode::InvalidArgument,
                    "prime " + std::to_string(p_) + " must exceed the socle degree " + std::to_string(bound));
    }
}

u64 derive_seed(u64 master, u64 index) noexcept {
    u64 z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
}

} // namespace apolab
