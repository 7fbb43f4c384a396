#pragma once

#include "apolab/bounds.hpp"
#include "apolab/field.hpp"
#include "apolab/hvector.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace apolab {

struct VerifyRow {
    std::string label;
    std::string expected;
    std::string computed;
    bool ok = false;
    std::string detail; // first mismatching index, when !ok
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyRow> rows;

    bool pass() const;
    const VerifyRow* first_failure() const;
};

using LowerBoundFn = std::function<LowerBound(const HVector&, unsigned, std::uint64_t)>;

struct VerifyContext {
    PrimeField field;
    u64 seed = 1;
    /// Lower-bound routine under test; defaults to apolab::lower_bound.
    LowerBoundFn lower = lower_bound;
    /// Seeds used for the seed-robustness checks.
    unsigned seed_count = 5;
};

/// Row comparing two integer vectors; `detail` names the first index that
/// differs (or the length mismatch).
VerifyRow compare_vectors(std::string label, const std::vector<std::uint64_t>& expected,
                          const std::vector<std::uint64_t>& computed);

VerifyReport verify_example4(const VerifyContext& ctx);
VerifyReport verify_remark5(const VerifyContext& ctx);
VerifyReport verify_remark6(const VerifyContext& ctx);

/// "example4", "remark5", "remark6" or "all". Throws Error(InvalidArgument)
/// on anything else.
std::vector<VerifyReport> run_verify_suite(const std::string& suite, const VerifyContext& ctx);

} // namespace apolab
