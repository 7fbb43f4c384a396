#include "apolab/verify.hpp"

#include "apolab/constructions.hpp"
#include "apolab/errors.hpp"
#include "apolab/inverse_system.hpp"

#include <algorithm>

namespace apolab {

namespace {

std::string join(const std::vector<std::uint64_t>& v) { return HVector{v}.join(); }

VerifyRow check_flag(std::string label, bool ok, std::string detail) {
    VerifyRow row;
    row.label = std::move(label);
    row.expected = "true";
    row.computed = ok ? "true" : "false";
    row.ok = ok;
    if (!ok) row.detail = std::move(detail);
    return row;
}

std::string params_label(const BlockFamilyParams& p) {
    return "t=" + std::to_string(p.type) + " p=" + std::to_string(p.block_size) + " e=" +
           std::to_string(p.socle_degree);
}

// Bounds example: a socle-degree-8 level h-vector, type-3 quotients of
// socle degree 6.
const HVector kExampleH{{1, 4, 9, 13, 13, 13, 9, 6, 4}};
constexpr unsigned kExampleD = 6;
constexpr std::uint64_t kExampleC = 3;
const std::vector<std::uint64_t> kExampleLower{1, 3, 4, 6, 5, 5, 3};
const std::vector<std::uint64_t> kExampleUpper{1, 4, 9, 13, 13, 12, 3};

// Two generic ternary septics and the {dF/dy1, dG/dy2} quotient.
const std::vector<std::uint64_t> kSepticsH{1, 3, 6, 10, 15, 12, 6, 2};
const std::vector<std::uint64_t> kSepticsQuotientH{1, 3, 6, 10, 12, 6, 2};

} // namespace

bool VerifyReport::pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.ok; });
}

const VerifyRow* VerifyReport::first_failure() const {
    for (const VerifyRow& r : rows) {
        if (!r.ok) return &r;
    }
    return nullptr;
}

VerifyRow compare_vectors(std::string label, const std::vector<std::uint64_t>& expected,
                          const std::vector<std::uint64_t>& computed) {
    VerifyRow row;
    row.label = std::move(label);
    row.expected = join(expected);
    row.computed = join(computed);
    row.ok = expected == computed;
    if (!row.ok) {
        const std::size_t n = std::min(expected.size(), computed.size());
        std::size_t i = 0;
        while (i < n && expected[i] == computed[i]) ++i;
        if (i < n) {
            row.detail = "first mismatch at index " + std::to_string(i) + ": expected " +
                         std::to_string(expected[i]) + ", got " + std::to_string(computed[i]);
        } else {
            row.detail = "length mismatch: expected " + std::to_string(expected.size()) + " entries, got " +
                         std::to_string(computed.size());
        }
    }
    return row;
}

VerifyReport verify_example4(const VerifyContext& ctx) {
    VerifyReport report{"example4", {}};
    const LowerBound lower = ctx.lower(kExampleH, kExampleD, kExampleC);
    report.rows.push_back(compare_vectors("lower bound (ceiling)", kExampleLower, lower.ceiling));
    report.rows.push_back(compare_vectors("upper bound", kExampleUpper, upper_bound(kExampleH, kExampleD, kExampleC)));
    return report;
}

VerifyReport verify_remark5(const VerifyContext& ctx) {
    VerifyReport report{"remark5", {}};
    const PrimeField& field = ctx.field;

    // Lower-bound sharpness on the block family.
    u64 stream = 0;
    for (unsigned t = 1; t <= 3; ++t) {
        for (unsigned p = 1; p <= 3; ++p) {
            for (unsigned e = 3; e <= 5; ++e) {
                const BlockFamilyParams params{t, p, e};
                const std::string tag = params_label(params);
                const LevelPresentation family = block_family(field, params);
                const HVector h = hvector(field, family);
                report.rows.push_back(compare_vectors("family h " + tag, expected_block_family_h(params).entries,
                                                      h.entries));
                for (unsigned c = 1; c <= t; ++c) {
                    SeededRng rng(derive_seed(ctx.seed, stream++));
                    const HVector quotient = hvector(field, generic_quotient(field, family, e, c, rng));
                    const std::string ctag = tag + " c=" + std::to_string(c);
                    report.rows.push_back(compare_vectors("quotient h " + ctag,
                                                          expected_block_quotient_h(params, c).entries,
                                                          quotient.entries));
                    const LowerBound lower = ctx.lower(h, e, c);
                    report.rows.push_back(compare_vectors("lower bound " + ctag, quotient.entries, lower.ceiling));
                    bool integral = true;
                    std::string where;
                    for (unsigned i = 1; i < e && integral; ++i) {
                        if (!lower.exact[i].is_integer()) {
                            integral = false;
                            where = "index " + std::to_string(i) + " is " + lower.exact[i].to_string();
                        }
                    }
                    report.rows.push_back(check_flag("exact lower bound integral " + ctag, integral, where));
                }
            }
        }
    }

    // Upper-bound sharpness on random ternary septics.
    const HVector closed_form = compressed_hvector(3, 7, 2);
    report.rows.push_back(compare_vectors("compressed closed form r=3 e=7 t=2", kSepticsH, closed_form.entries));
    for (unsigned s = 0; s < ctx.seed_count; ++s) {
        SeededRng rng(derive_seed(ctx.seed, 1000 + s));
        const AmbientAndQuotient pair = septics_upper_sharp(field, rng);
        const HVector h = hvector(field, pair.ambient);
        const HVector H = hvector(field, pair.quotient);
        const std::string tag = " seed#" + std::to_string(s);
        report.rows.push_back(compare_vectors("septics ambient h" + tag, kSepticsH, h.entries));
        report.rows.push_back(compare_vectors("septics quotient H" + tag, kSepticsQuotientH, H.entries));
        report.rows.push_back(compare_vectors("septics upper bound" + tag, H.entries, upper_bound(h, 6, 2)));
    }
    return report;
}

VerifyReport verify_remark6(const VerifyContext& ctx) {
    VerifyReport report{"remark6", {}};
    const PrimeField& field = ctx.field;
    const BlockFamilyParams params{2, 2, 4};
    SeededRng rng(derive_seed(ctx.seed, 2000));
    const EqualHPair pair = equal_h_pair(field, params, rng);
    const std::vector<std::uint64_t> expected_h = expected_block_family_h(params).entries;
    report.rows.push_back(compare_vectors("h(A1)", expected_h, hvector(field, pair.block).entries));
    report.rows.push_back(compare_vectors("h(A2)", expected_h, hvector(field, pair.power_sums).entries));

    const HVector first = hvector(field, generic_quotient(field, pair.block, params.socle_degree, 1, rng));
    // (1, 2p, ..., 2p, 1)
    report.rows.push_back(compare_vectors("Gorenstein quotient of A1", {1, 4, 4, 4, 1}, first.entries));
    const HVector second = hvector(field, pair.designated_quotient());
    // (1, (t+1)p - (t-1), ..., 1)
    report.rows.push_back(compare_vectors("designated quotient of A2", {1, 5, 5, 5, 1}, second.entries));

    bool dominates = first.size() == second.size();
    std::string where;
    for (unsigned i = 1; dominates && i < params.socle_degree; ++i) {
        if (second[i] <= first[i]) {
            dominates = false;
            where = "index " + std::to_string(i) + ": " + std::to_string(second[i]) + " <= " + std::to_string(first[i]);
        }
    }
    report.rows.push_back(check_flag("strict dominance on 1..e-1", dominates, where));

    // Contrast only: the generic Gorenstein quotient of A2.
    const HVector generic = hvector(field, generic_quotient(field, pair.power_sums, params.socle_degree, 1, rng));
    VerifyRow contrast = compare_vectors("generic Gorenstein quotient of A2 (info)", generic.entries, generic.entries);
    report.rows.push_back(std::move(contrast));
    return report;
}

std::vector<VerifyReport> run_verify_suite(const std::string& suite, const VerifyContext& ctx) {
    if (suite == "example4") return {verify_example4(ctx)};
    if (suite == "remark5") return {verify_remark5(ctx)};
    if (suite == "remark6") return {verify_remark6(ctx)};
    if (suite == "all") return {verify_example4(ctx), verify_remark5(ctx), verify_remark6(ctx)};
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "' (example4, remark5, remark6, all)");
}

} // namespace apolab
