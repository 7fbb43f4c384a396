#pragma once

#include "apolab/field.hpp"
#include "apolab/hvector.hpp"
#include "apolab/inverse_system.hpp"
#include "apolab/multipoly.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace apolab {

/// Parameters of the block family: t generators in r = (t+1)p variables,
///   F_j = sum_{m=1..p} y_{jp+m} y_m^{e-1},   j = 1..t.
/// Variables y_1..y_p are shared; block j owns y_{jp+1}..y_{(j+1)p}.
struct BlockFamilyParams {
    unsigned type = 1;       // t >= 1
    unsigned block_size = 1; // p >= 1
    unsigned socle_degree = 3; // e >= 3

    std::size_t num_vars() const noexcept { return static_cast<std::size_t>(type + 1) * block_size; }
    /// Throws Error(InvalidArgument).
    void validate() const;
};

/// Builds the block family. 1-based y_k maps to internal index k - 1.
LevelPresentation block_family(const PrimeField& field, const BlockFamilyParams& params);

/// (1, (t+1)p, ..., (t+1)p, t), length e + 1.
HVector expected_block_family_h(const BlockFamilyParams& params);

/// (1, (c+1)p, ..., (c+1)p, c): every level quotient of type c <= t and
/// socle degree e of the block family has this h-vector.
HVector expected_block_quotient_h(const BlockFamilyParams& params, unsigned c);

/// A linear form whose e-th power enters a generator. An empty `coeffs`
/// means "draw generic coefficients".
struct LinearSummand {
    std::optional<std::vector<FieldElem>> coeffs;

    static LinearSummand generic() { return {}; }
};

struct PowerSumSpec {
    std::size_t num_vars = 1;
    unsigned degree = 1;
    /// generators[j] lists the linear forms whose powers sum to generator j.
    std::vector<std::vector<LinearSummand>> generators;

    /// Convenience: generator j is a sum of counts[j] generic powers.
    static PowerSumSpec generic(std::size_t num_vars, unsigned degree, const std::vector<std::size_t>& counts);
};

/// Each generator is the sum of the e-th powers of its linear forms.
/// Dependent draws are retried (three attempts in total) before
/// Error(DependentGenerators) is raised.
LevelPresentation power_sum_presentation(const PrimeField& field, const PowerSumSpec& spec, SeededRng& rng);

/// h_i = min(C(i+r-1, r-1), t C(e-i+r-1, r-1)), the h-vector of a
/// compressed level algebra of type t.
HVector compressed_hvector(std::size_t num_vars, unsigned socle_degree, std::size_t type);

struct AmbientAndQuotient {
    LevelPresentation ambient;
    LevelPresentation quotient;
};

/// Two random ternary septics F, G (a compressed algebra) and the type-2
/// quotient generated by dF/dy_1 and dG/dy_2, whose h-vector meets the
/// upper bound at every index.
AmbientAndQuotient septics_upper_sharp(const PrimeField& field, SeededRng& rng);

/// Two presentations with the same h-vector (1, (t+1)p, ..., (t+1)p, t)
/// whose Gorenstein quotients of socle degree e differ:
///  - `block` is block_family(t, p, e);
///  - `power_sums` has one generator F summing (t+1)p - (t-1) generic e-th
///    powers and t - 1 generators that are single generic e-th powers.
struct EqualHPair {
    LevelPresentation block;
    LevelPresentation power_sums;

    /// The Gorenstein quotient of `power_sums` generated by F alone.
    LevelPresentation designated_quotient() const;
};

/// Requires t > 1, p > 1 and e >= 3 (Error(InvalidArgument) otherwise).
EqualHPair equal_h_pair(const PrimeField& field, const BlockFamilyParams& params, SeededRng& rng);

} // namespace apolab
