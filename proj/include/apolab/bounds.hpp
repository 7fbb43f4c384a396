#pragma once

#include "apolab/hvector.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace apolab {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction with positive denominator.
class RationalValue {
public:
    RationalValue() = default;
    RationalValue(BigInt numerator, BigInt denominator);
    explicit RationalValue(BigInt integer) : numerator_(std::move(integer)), denominator_(1) {}

    const BigInt& numerator() const noexcept { return numerator_; }
    const BigInt& denominator() const noexcept { return denominator_; }
    bool is_integer() const noexcept { return denominator_ == 1; }
    BigInt ceil() const;

    /// "91/40", or just "3" for integers.
    std::string to_string() const;

    friend bool operator==(const RationalValue&, const RationalValue&) = default;

private:
    BigInt numerator_ = 0;
    BigInt denominator_ = 1;
};

/// Both vectors run over indices 0..d; index 0 holds H_0 = 1.
struct LowerBound {
    std::vector<RationalValue> exact;
    std::vector<std::uint64_t> ceiling;
    /// h_d = 1: the truncation is Gorenstein and H = (h_0..h_d) exactly.
    bool degenerate = false;
};

/// Lower bound ((h_d - c) h_{d-i} + (c h_d - 1) h_i) / (h_d^2 - 1) on H_i for
/// a relatively compressed level quotient of type c and socle degree d.
/// When h_d = 1 the formula is not evaluated; the degenerate answer h_i is
/// returned instead.
///
/// Throws Error(InvalidArgument) on a malformed h or c = 0,
/// Error(DegreeOutOfRange) unless 1 <= d <= e, Error(TypeTooLarge) if c > h_d.
LowerBound lower_bound(const HVector& h, unsigned d, std::uint64_t c);

/// min(h_i, c h_{d-i}) for i = 0..d. Same preconditions as lower_bound.
std::vector<std::uint64_t> upper_bound(const HVector& h, unsigned d, std::uint64_t c);

struct WithinVerdict {
    std::vector<bool> lower_ok; // indices 0..d
    std::vector<bool> upper_ok;
    bool pass = true;
    /// Smallest index with a violated bound.
    std::optional<unsigned> first_failure;
};

/// Checks a candidate H against both bounds. Throws Error(ShapeMismatch) if
/// H does not have length d + 1 and H_d = c.
WithinVerdict check_within(const HVector& candidate, const HVector& h, unsigned d, std::uint64_t c);

struct BoundsReport {
    HVector h;
    unsigned d = 0;
    std::uint64_t c = 0;
    std::vector<RationalValue> lower_exact;
    std::vector<std::uint64_t> lower_int;
    std::vector<std::uint64_t> upper;
    bool degenerate_case = false;
};

BoundsReport bounds_report(const HVector& h, unsigned d, std::uint64_t c);

} // namespace apolab
