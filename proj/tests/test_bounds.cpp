#include "apolab/bounds.hpp"
#include "apolab/constructions.hpp"
#include "apolab/errors.hpp"
#include "apolab/inverse_system.hpp"

#include <doctest.h>

#include <numeric>

using namespace apolab;

namespace {

const HVector kH{{1, 4, 9, 13, 13, 13, 9, 6, 4}};

// numerator/denominator of the lower-bound expression, in plain integers
std::pair<long long, long long> lower_fraction(const HVector& h, unsigned d, long long c, unsigned i) {
    const long long hd = static_cast<long long>(h[d]);
    long long num = (hd - c) * static_cast<long long>(h[d - i]) + (c * hd - 1) * static_cast<long long>(h[i]);
    long long den = hd * hd - 1;
    const long long g = std::gcd(num, den);
    return {num / g, den / g};
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an apolab::Error");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("rational values") {
    const RationalValue r(BigInt(182), BigInt(80));
    CHECK(r.numerator() == 91);
    CHECK(r.denominator() == 40);
    CHECK(r.ceil() == 3);
    CHECK(r.to_string() == "91/40");
    CHECK(RationalValue(BigInt(240), BigInt(80)).to_string() == "3");
    CHECK(RationalValue(BigInt(240), BigInt(80)).is_integer());
    CHECK(RationalValue(BigInt(-3), BigInt(-6)) == RationalValue(BigInt(1), BigInt(2)));
    CHECK(RationalValue(BigInt(-7), BigInt(2)).ceil() == -3);
    CHECK_THROWS_AS(RationalValue(BigInt(1), BigInt(0)), Error);
}

TEST_CASE("bounds example with socle degree 8") {
    const LowerBound lower = lower_bound(kH, 6, 3);
    CHECK_FALSE(lower.degenerate);
    CHECK(lower.ceiling == std::vector<std::uint64_t>{1, 3, 4, 6, 5, 5, 3});
    CHECK(lower.exact[1].to_string() == "91/40");
    for (unsigned i = 1; i <= 6; ++i) {
        const auto [num, den] = lower_fraction(kH, 6, 3, i);
        CHECK(lower.exact[i] == RationalValue(BigInt(num), BigInt(den)));
        CHECK(lower.ceiling[i] == static_cast<std::uint64_t>((num + den - 1) / den));
    }
    CHECK(upper_bound(kH, 6, 3) == std::vector<std::uint64_t>{1, 4, 9, 13, 13, 12, 3});

    const BoundsReport report = bounds_report(kH, 6, 3);
    CHECK(report.lower_int == lower.ceiling);
    CHECK(report.upper == upper_bound(kH, 6, 3));
    CHECK_FALSE(report.degenerate_case);
}

TEST_CASE("c = h_d collapses the lower bound onto h") {
    const PrimeField F;
    SeededRng rng(31);
    std::vector<HVector> samples{kH};
    for (int k = 0; k < 10; ++k) {
        PowerSumSpec spec = PowerSumSpec::generic(3 + k % 2, 4 + k % 3, {1 + static_cast<std::size_t>(k % 4), 2});
        samples.push_back(hvector(F, power_sum_presentation(F, spec, rng)));
    }
    for (const HVector& h : samples) {
        for (unsigned d = 1; d <= h.socle_degree(); ++d) {
            if (h[d] < 2) continue;
            const BoundsReport r = bounds_report(h, d, h[d]);
            for (unsigned i = 1; i <= d; ++i) {
                CHECK(r.lower_exact[i] == RationalValue(BigInt(h[i])));
                CHECK(r.lower_int[i] == h[i]);
                if (h[i] <= h[d] * h[d - i]) CHECK(r.upper[i] == h[i]);
            }
        }
    }
}

TEST_CASE("upper bound pinches at the socle") {
    for (unsigned d = 1; d <= 8; ++d) {
        for (std::uint64_t c = 1; c <= kH[d]; ++c) {
            CHECK(upper_bound(kH, d, c)[d] == c);
            if (kH[d] > 1) CHECK(lower_bound(kH, d, c).ceiling[d] == c);
        }
    }
    // symmetric h, c = 1, d = e
    const HVector sym{{1, 3, 5, 3, 1}};
    CHECK(upper_bound(sym, 4, 1) == sym.entries);
}

TEST_CASE("degenerate socle") {
    const HVector h{{1, 3, 3, 1, 2}};
    const BoundsReport r = bounds_report(h, 3, 1);
    CHECK(r.degenerate_case);
    CHECK(r.lower_int == std::vector<std::uint64_t>{1, 3, 3, 1});
    CHECK(r.upper == std::vector<std::uint64_t>{1, 3, 3, 1});
    CHECK(lower_bound(h, 3, 1).degenerate);
    CHECK(code_of([&] { lower_bound(h, 3, 2); }) == ErrorCode::TypeTooLarge);
}

TEST_CASE("argument validation") {
    CHECK(code_of([&] { bounds_report(kH, 6, 10); }) == ErrorCode::TypeTooLarge);
    CHECK(code_of([&] { upper_bound(kH, 6, 10); }) == ErrorCode::TypeTooLarge);
    CHECK(code_of([&] { bounds_report(kH, 0, 1); }) == ErrorCode::DegreeOutOfRange);
    CHECK(code_of([&] { bounds_report(kH, 9, 1); }) == ErrorCode::DegreeOutOfRange);
    CHECK(code_of([&] { bounds_report(kH, 6, 0); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { bounds_report(HVector{{2, 3}}, 1, 1); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([&] { bounds_report(HVector{{1, 3, 0}}, 1, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("check_within") {
    const HVector compressed{{1, 3, 6, 10, 15, 12, 6, 2}};
    const HVector H{{1, 3, 6, 10, 12, 6, 2}};
    const WithinVerdict v = check_within(H, compressed, 6, 2);
    CHECK(v.pass);
    const auto upper = upper_bound(compressed, 6, 2);
    CHECK(upper == H.entries);

    CHECK(check_within(HVector{upper_bound(kH, 6, 3)}, kH, 6, 3).pass);

    std::vector<std::uint64_t> inflated = upper_bound(kH, 6, 3);
    inflated[3] += 1;
    const WithinVerdict bad = check_within(HVector{inflated}, kH, 6, 3);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.first_failure.has_value());
    CHECK(*bad.first_failure == 3);
    for (unsigned i = 1; i <= 6; ++i) {
        CHECK(bad.lower_ok[i]);
        CHECK(bad.upper_ok[i] == (i != 3));
    }

    CHECK(code_of([&] { check_within(HVector{{1, 3, 3}}, kH, 6, 3); }) == ErrorCode::ShapeMismatch);
    CHECK(code_of([&] { check_within(HVector{{1, 4, 9, 13, 13, 12, 2}}, kH, 6, 3); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("block-family scaling identity") {
    for (unsigned t = 2; t <= 5; ++t) {
        for (unsigned p = 1; p <= 4; ++p) {
            for (unsigned e = 3; e <= 6; ++e) {
                const BlockFamilyParams params{t, p, e};
                const HVector h = expected_block_family_h(params);
                for (unsigned c = 1; c <= t; ++c) {
                    const LowerBound lower = lower_bound(h, e, c);
                    for (unsigned i = 1; i < e; ++i) {
                        CHECK(lower.exact[i] == RationalValue(BigInt((c + 1) * p)));
                    }
                    CHECK(lower.exact[e] == RationalValue(BigInt(c)));
                }
            }
        }
    }
}

TEST_CASE("lower never exceeds upper on computed h-vectors") {
    const PrimeField F;
    SeededRng rng(64);
    for (int k = 0; k < 25; ++k) {
        const std::size_t r = 2 + k % 3;
        const unsigned e = 2 + k % 5;
        std::vector<std::size_t> counts(1 + k % 3);
        for (auto& n : counts) n = 1 + rng.uniform(0, r);
        LevelPresentation p;
        try {
            p = power_sum_presentation(F, PowerSumSpec::generic(r, e, counts), rng);
        } catch (const Error&) {
            continue;
        }
        const HVector h = hvector(F, p);
        for (unsigned d = 1; d <= e; ++d) {
            for (std::uint64_t c = 1; c <= h[d]; ++c) {
                const BoundsReport rep = bounds_report(h, d, c);
                for (unsigned i = 0; i <= d; ++i) CHECK(rep.lower_int[i] <= rep.upper[i]);
                CHECK(rep.lower_int[d] == c);
                CHECK(rep.upper[d] == c);
            }
        }
    }
}
