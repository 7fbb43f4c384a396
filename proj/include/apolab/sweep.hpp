#pragma once

#include "apolab/field.hpp"
#include "apolab/hvector.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace apolab {

/// Inclusive integer range; lo > hi is the empty range.
struct IntRange {
    unsigned lo = 1;
    unsigned hi = 0;

    bool empty() const noexcept { return lo > hi; }
    /// "3" or "1..4". Throws Error(ParseError).
    static IntRange parse(std::string_view text);
};

struct SweepConfig {
    IntRange num_vars{1, 4};
    IntRange socle_degree{1, 6};
    IntRange type{1, 3};
    unsigned trials = 5;
    u64 seed = 1;
    /// Instances whose top degree has more monomials than this are skipped.
    std::size_t max_cols = 5000;
    /// 0 picks the hardware concurrency.
    unsigned threads = 0;
};

struct SweepRecord {
    std::size_t r = 0;
    unsigned e = 0;
    std::size_t t = 0;
    unsigned d = 0;
    std::uint64_t c = 0;
    u64 seed = 0; // seed of the generic_quotient stream for this record
    HVector ambient_h;
    HVector quotient_h;
    std::vector<std::uint64_t> lower_int; // indices 0..d
    std::vector<std::uint64_t> upper;     // indices 0..d
    bool within = false;
    std::vector<std::int64_t> lower_gap; // H_i - lower_i, i = 1..d
    std::vector<std::int64_t> upper_gap; // upper_i - H_i, i = 1..d
};

struct SweepResult {
    std::vector<SweepRecord> records;
    std::vector<std::string> skipped; // one human-readable reason per skipped instance
    std::size_t instances = 0;
};

/// Audits the two-sided bound on generic quotients of random level
/// algebras. Instances are enumerated as (r, e, t, trial); trial mod 3
/// picks dense random forms, sums of generic powers, or sparse monomial
/// sums as generators. Every (d, c) with 1 <= d <= e, 1 <= c <= h_d yields
/// one record. Output order is independent of the thread count.
SweepResult run_sweep(const PrimeField& field, const SweepConfig& config);

inline constexpr std::string_view kSweepHeader =
    "r,e,t,d,c,seed,ambient_h,quotient_H,lower_int,upper,within,lower_gap,upper_gap";

/// Header plus one line per record. Vectors are '-'-separated inside their
/// field; a negative entry is written with a leading '~'.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);

/// "records N within N violations N lower_gap min M mean X upper_gap ...".
std::string sweep_summary(const SweepResult& result);

} // namespace apolab
