#include "apolab/bounds.hpp"

#include "apolab/errors.hpp"

#include <algorithm>

namespace apolab {

namespace {

void require_valid(const HVector& h, unsigned d, std::uint64_t c) {
    h.validate();
    if (d < 1 || d > h.socle_degree()) {
        throw Error(ErrorCode::DegreeOutOfRange,
                    "d = " + std::to_string(d) + " outside 1.." + std::to_string(h.socle_degree()));
    }
    if (c == 0) throw Error(ErrorCode::InvalidArgument, "type c must be positive");
    if (c > h[d]) {
        throw Error(ErrorCode::TypeTooLarge,
                    "c = " + std::to_string(c) + " exceeds h_" + std::to_string(d) + " = " + std::to_string(h[d]));
    }
}

} // namespace

RationalValue::RationalValue(BigInt numerator, BigInt denominator) {
    if (denominator == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    BigInt g = boost::multiprecision::gcd(numerator, denominator);
    if (g == 0) g = 1;
    numerator_ = numerator / g;
    denominator_ = denominator / g;
}

BigInt RationalValue::ceil() const {
    BigInt q = numerator_ / denominator_; // truncates toward zero
    if (numerator_ > 0 && q * denominator_ != numerator_) q += 1;
    return q;
}

std::string RationalValue::to_string() const {
    if (is_integer()) return numerator_.str();
    return numerator_.str() + "/" + denominator_.str();
}

LowerBound lower_bound(const HVector& h, unsigned d, std::uint64_t c) {
    require_valid(h, d, c);
    LowerBound out;
    const BigInt hd = h[d];
    if (hd == 1) {
        out.degenerate = true;
        for (unsigned i = 0; i <= d; ++i) {
            out.exact.emplace_back(BigInt(h[i]));
            out.ceiling.push_back(h[i]);
        }
        return out;
    }
    const BigInt denominator = hd * hd - 1;
    const BigInt big_c = c;
    out.exact.emplace_back(BigInt(1));
    out.ceiling.push_back(1);
    for (unsigned i = 1; i <= d; ++i) {
        const BigInt numerator = (hd - big_c) * h[d - i] + (big_c * hd - 1) * h[i];
        RationalValue value(numerator, denominator);
        out.ceiling.push_back(value.ceil().convert_to<std::uint64_t>());
        out.exact.push_back(std::move(value));
    }
    return out;
}

std::vector<std::uint64_t> upper_bound(const HVector& h, unsigned d, std::uint64_t c) {
    require_valid(h, d, c);
    std::vector<std::uint64_t> out{1};
    for (unsigned i = 1; i <= d; ++i) {
        const BigInt scaled = BigInt(c) * h[d - i];
        out.push_back(scaled < h[i] ? scaled.convert_to<std::uint64_t>() : h[i]);
    }
    return out;
}

BoundsReport bounds_report(const HVector& h, unsigned d, std::uint64_t c) {
    LowerBound lower = lower_bound(h, d, c);
    BoundsReport report;
    report.h = h;
    report.d = d;
    report.c = c;
    report.degenerate_case = lower.degenerate;
    // Degenerate socle: the truncation is Gorenstein, so both sides are h.
    report.upper = lower.degenerate ? lower.ceiling : upper_bound(h, d, c);
    report.lower_exact = std::move(lower.exact);
    report.lower_int = std::move(lower.ceiling);
    return report;
}

WithinVerdict check_within(const HVector& candidate, const HVector& h, unsigned d, std::uint64_t c) {
    if (candidate.size() != static_cast<std::size_t>(d) + 1) {
        throw Error(ErrorCode::ShapeMismatch, "candidate has length " + std::to_string(candidate.size()) +
                                                  ", expected " + std::to_string(d + 1));
    }
    if (candidate[d] != c) {
        throw Error(ErrorCode::ShapeMismatch,
                    "candidate ends in " + std::to_string(candidate[d]) + ", expected type " + std::to_string(c));
    }
    const BoundsReport report = bounds_report(h, d, c);
    WithinVerdict v;
    v.lower_ok.assign(d + 1, true);
    v.upper_ok.assign(d + 1, true);
    for (unsigned i = 1; i <= d; ++i) {
        v.lower_ok[i] = candidate[i] >= report.lower_int[i];
        v.upper_ok[i] = candidate[i] <= report.upper[i];
        if ((!v.lower_ok[i] || !v.upper_ok[i]) && !v.first_failure) v.first_failure = i;
    }
    v.pass = !v.first_failure.has_value();
    return v;
}

} // namespace apolab
