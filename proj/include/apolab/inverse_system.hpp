#pragma once

#include "apolab/field.hpp"
#include "apolab/hvector.hpp"
#include "apolab/linalg.hpp"
#include "apolab/multipoly.hpp"

#include <vector>

namespace apolab {

/// t forms of common degree e in r variables generating an inverse-system
/// module. The algebra R/Ann(M) is level of type t and socle degree e when
/// the generators are independent (see validate_level).
struct LevelPresentation {
    std::size_t num_vars = 0;
    unsigned socle_degree = 0;
    std::vector<Form> generators;

    /// Reads r and e off the first generator. Throws Error(InvalidArgument)
    /// on an empty list; shape checks happen in validate_level.
    static LevelPresentation from_generators(std::vector<Form> generators);
};

/// Degree-i piece of the derivative closure of a presentation.
struct DerivativeSpace {
    unsigned degree = 0;
    ReducedBasis basis;
};

/// Confirms the presentation is a minimal generating set of common degree
/// and ring, and that p > e. Returns the type t.
///
/// Throws Error(InvalidArgument) on an empty list, Error(DegreeOutOfRange)
/// for e = 0, Error(MixedDegrees), Error(MixedVariableCounts), or
/// Error(DependentGenerators) naming the first generator in the span of the
/// ones before it.
std::size_t validate_level(const PrimeField& field, const LevelPresentation& p);

/// Span of all order-(e - i) partial derivatives of the generators, in
/// degree-i monomial coordinates.
DerivativeSpace derivative_space(const PrimeField& field, const LevelPresentation& p, unsigned degree);

/// derivative_space for every degree 0..e, indexed by degree.
std::vector<DerivativeSpace> derivative_spaces(const PrimeField& field, const LevelPresentation& p);

HVector hvector(const PrimeField& field, const LevelPresentation& p);

/// The RREF basis of the degree-d derivative space as forms: generators of
/// the inverse system of the truncation A / A_{d+1}.
std::vector<Form> truncation_basis(const PrimeField& field, const LevelPresentation& p, unsigned d);

/// Same as truncation_basis, packaged as a presentation of socle degree d.
LevelPresentation truncation(const PrimeField& field, const LevelPresentation& p, unsigned d);

/// Generic level quotient of type c and socle degree d of the truncation:
/// c random combinations of truncation_basis(p, d).
/// Throws Error(TypeTooLarge) when c > h_d, Error(GenericityFailure) from
/// random_combinations.
LevelPresentation generic_quotient(const PrimeField& field, const LevelPresentation& p, unsigned d, std::size_t c,
                                   SeededRng& rng);

} // namespace apolab
