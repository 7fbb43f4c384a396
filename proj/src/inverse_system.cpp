#include "apolab/inverse_system.hpp"

#include "apolab/errors.hpp"

#include <string>

namespace apolab {

namespace {

// For each degree-i monomial (by rank) and variable j: the rank of
// m / y_j in degree i - 1 and the multiplier m_j, or no entry if m_j = 0.
struct FirstDerivativeTable {
    struct Entry {
        std::size_t target;
        unsigned multiplier;
    };
    std::size_t source_cols = 0;
    std::size_t target_cols = 0;
    std::vector<std::vector<Entry>> per_var; // [j][k]; multiplier 0 means absent

    FirstDerivativeTable(std::size_t num_vars, unsigned degree)
        : source_cols(monomial_count(num_vars, degree)),
          target_cols(monomial_count(num_vars, degree - 1)),
          per_var(num_vars, std::vector<Entry>(source_cols, Entry{0, 0})) {
        std::size_t k = 0;
        for (const Monomial& m : monomials_of_degree(num_vars, degree)) {
            for (std::size_t j = 0; j < num_vars; ++j) {
                if (m[j] == 0) continue;
                std::vector<unsigned> e = m.exponents();
                e[j] -= 1;
                per_var[j][k] = Entry{monomial_rank(Monomial(std::move(e))), m[j]};
            }
            ++k;
        }
    }
};

ReducedBasis differentiate_once(const PrimeField& field, const ReducedBasis& upper, std::size_t num_vars,
                                unsigned degree) {
    const FirstDerivativeTable table(num_vars, degree);
    MatrixFp rows(upper.rank * num_vars, table.target_cols);
    std::size_t out = 0;
    for (std::size_t b = 0; b < upper.rank; ++b) {
        auto source = upper.basis_rows.row(b);
        for (std::size_t j = 0; j < num_vars; ++j, ++out) {
            auto target = rows.row(out);
            const auto& entries = table.per_var[j];
            for (std::size_t k = 0; k < table.source_cols; ++k) {
                if (source[k].value == 0 || entries[k].multiplier == 0) continue;
                target[entries[k].target] = field.mul(source[k], field.from_uint(entries[k].multiplier));
            }
        }
    }
    return rref(field, rows);
}

ReducedBasis top_degree_basis(const PrimeField& field, const LevelPresentation& p) {
    MatrixFp rows(0, monomial_count(p.num_vars, p.socle_degree));
    for (const Form& g : p.generators) rows.append_row(form_to_coord_row(g));
    return rref(field, rows);
}

void require_degree(const LevelPresentation& p, unsigned degree, unsigned lowest) {
    if (degree < lowest || degree > p.socle_degree) {
        throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(degree) + " outside " +
                                                     std::to_string(lowest) + ".." +
                                                     std::to_string(p.socle_degree));
    }
}

std::vector<Form> basis_to_forms(const DerivativeSpace& space, std::size_t num_vars) {
    std::vector<Form> out;
    out.reserve(space.basis.rank);
    for (std::size_t i = 0; i < space.basis.rank; ++i) {
        out.push_back(form_from_coord_row(num_vars, space.degree, space.basis.basis_rows.row(i)));
    }
    return out;
}

} // namespace

LevelPresentation LevelPresentation::from_generators(std::vector<Form> generators) {
    if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "a presentation needs at least one generator");
    LevelPresentation p;
    p.num_vars = generators.front().num_vars();
    p.socle_degree = generators.front().degree();
    p.generators = std::move(generators);
    return p;
}

std::size_t validate_level(const PrimeField& field, const LevelPresentation& p) {
    if (p.generators.empty()) throw Error(ErrorCode::InvalidArgument, "a presentation needs at least one generator");
    if (p.socle_degree == 0) {
        throw Error(ErrorCode::DegreeOutOfRange, "socle degree 0 is not supported (the algebra is just the field)");
    }
    field.require_exceeds(p.socle_degree);
    for (std::size_t j = 0; j < p.generators.size(); ++j) {
        const Form& g = p.generators[j];
        if (g.num_vars() != p.num_vars) {
            throw Error(ErrorCode::MixedVariableCounts, "generator " + std::to_string(j + 1) + " has " +
                                                            std::to_string(g.num_vars()) + " variables, expected " +
                                                            std::to_string(p.num_vars));
        }
        if (g.degree() != p.socle_degree) {
            throw Error(ErrorCode::MixedDegrees, "generator " + std::to_string(j + 1) + " has degree " +
                                                     std::to_string(g.degree()) + ", expected " +
                                                     std::to_string(p.socle_degree));
        }
    }
    MatrixFp rows(0, monomial_count(p.num_vars, p.socle_degree));
    for (std::size_t j = 0; j < p.generators.size(); ++j) {
        rows.append_row(form_to_coord_row(p.generators[j]));
        if (rref(field, rows).rank != j + 1) {
            throw Error(ErrorCode::DependentGenerators,
                        "generator " + std::to_string(j + 1) + " lies in the span of the preceding generators");
        }
    }
    return p.generators.size();
}

std::vector<DerivativeSpace> derivative_spaces(const PrimeField& field, const LevelPresentation& p) {
    validate_level(field, p);
    std::vector<DerivativeSpace> spaces(p.socle_degree + 1);
    spaces[p.socle_degree] = {p.socle_degree, top_degree_basis(field, p)};
    // Order-(k+1) derivatives span the same space as first derivatives of the
    // order-k ones, so each degree only needs r·h_{i+1} rows.
    for (unsigned i = p.socle_degree; i > 0; --i) {
        spaces[i - 1] = {i - 1, differentiate_once(field, spaces[i].basis, p.num_vars, i)};
    }
    return spaces;
}

DerivativeSpace derivative_space(const PrimeField& field, const LevelPresentation& p, unsigned degree) {
    validate_level(field, p);
    require_degree(p, degree, 0);
    DerivativeSpace space{p.socle_degree, top_degree_basis(field, p)};
    for (unsigned i = p.socle_degree; i > degree; --i) {
        space = {i - 1, differentiate_once(field, space.basis, p.num_vars, i)};
    }
    return space;
}

HVector hvector(const PrimeField& field, const LevelPresentation& p) {
    HVector h;
    for (const DerivativeSpace& s : derivative_spaces(field, p)) h.entries.push_back(s.basis.rank);
    return h;
}

std::vector<Form> truncation_basis(const PrimeField& field, const LevelPresentation& p, unsigned d) {
    validate_level(field, p);
    require_degree(p, d, 1);
    return basis_to_forms(derivative_space(field, p, d), p.num_vars);
}

LevelPresentation truncation(const PrimeField& field, const LevelPresentation& p, unsigned d) {
    LevelPresentation out;
    out.num_vars = p.num_vars;
    out.socle_degree = d;
    out.generators = truncation_basis(field, p, d);
    return out;
}

LevelPresentation generic_quotient(const PrimeField& field, const LevelPresentation& p, unsigned d, std::size_t c,
                                   SeededRng& rng) {
    validate_level(field, p);
    require_degree(p, d, 1);
    const DerivativeSpace space = derivative_space(field, p, d);
    if (c == 0) throw Error(ErrorCode::InvalidArgument, "type c must be positive");
    if (c > space.basis.rank) {
        throw Error(ErrorCode::TypeTooLarge, "type " + std::to_string(c) + " requested but h_" + std::to_string(d) +
                                                 " = " + std::to_string(space.basis.rank));
    }
    const MatrixFp combos = random_combinations(field, space.basis, c, rng);
    LevelPresentation out;
    out.num_vars = p.num_vars;
    out.socle_degree = d;
    for (std::size_t i = 0; i < combos.rows(); ++i) {
        out.generators.push_back(form_from_coord_row(p.num_vars, d, combos.row(i)));
    }
    return out;
}

} // namespace apolab
