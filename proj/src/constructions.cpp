#include "apolab/constructions.hpp"

#include "apolab/errors.hpp"

#include <algorithm>
#include <string>

namespace apolab {

namespace {

constexpr int kDrawAttempts = 3;

bool independent(const PrimeField& field, const LevelPresentation& p) {
    try {
        validate_level(field, p);
        return true;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DependentGenerators) return false;
        throw;
    }
}

std::vector<FieldElem> random_linear_coeffs(const PrimeField& field, std::size_t num_vars, SeededRng& rng) {
    std::vector<FieldElem> c(num_vars);
    for (auto& x : c) x = field.random_nonzero(rng);
    return c;
}

} // namespace

void BlockFamilyParams::validate() const {
    if (type < 1) throw Error(ErrorCode::InvalidArgument, "t must be at least 1");
    if (block_size < 1) throw Error(ErrorCode::InvalidArgument, "p must be at least 1");
    if (socle_degree < 3) throw Error(ErrorCode::InvalidArgument, "e must be at least 3");
}

LevelPresentation block_family(const PrimeField& field, const BlockFamilyParams& params) {
    params.validate();
    const std::size_t r = params.num_vars();
    const unsigned e = params.socle_degree;
    const unsigned p = params.block_size;
    LevelPresentation out;
    out.num_vars = r;
    out.socle_degree = e;
    for (unsigned j = 1; j <= params.type; ++j) {
        Form f(r, e);
        for (unsigned m = 1; m <= p; ++m) {
            std::vector<unsigned> exps(r, 0);
            exps[m - 1] = e - 1;         // y_m^{e-1}
            exps[j * p + m - 1] = 1;     // y_{jp+m}
            f.add_term(field, Monomial(std::move(exps)), field.one());
        }
        out.generators.push_back(std::move(f));
    }
    return out;
}

HVector expected_block_family_h(const BlockFamilyParams& params) {
    return expected_block_quotient_h(params, params.type);
}

HVector expected_block_quotient_h(const BlockFamilyParams& params, unsigned c) {
    params.validate();
    if (c < 1 || c > params.type) {
        throw Error(ErrorCode::TypeTooLarge, "c = " + std::to_string(c) + " outside 1.." + std::to_string(params.type));
    }
    HVector h;
    h.entries.assign(params.socle_degree + 1, static_cast<std::uint64_t>(c + 1) * params.block_size);
    h.entries.front() = 1;
    h.entries.back() = c;
    return h;
}

PowerSumSpec PowerSumSpec::generic(std::size_t num_vars, unsigned degree, const std::vector<std::size_t>& counts) {
    PowerSumSpec spec;
    spec.num_vars = num_vars;
    spec.degree = degree;
    for (std::size_t n : counts) spec.generators.emplace_back(n, LinearSummand::generic());
    return spec;
}

LevelPresentation power_sum_presentation(const PrimeField& field, const PowerSumSpec& spec, SeededRng& rng) {
    if (spec.generators.empty()) throw Error(ErrorCode::InvalidArgument, "power-sum spec has no generators");
    if (spec.degree < 1) throw Error(ErrorCode::InvalidArgument, "power-sum degree must be positive");
    bool any_generic = false;
    for (std::size_t j = 0; j < spec.generators.size(); ++j) {
        if (spec.generators[j].empty()) {
            throw Error(ErrorCode::InvalidArgument, "generator " + std::to_string(j + 1) + " has no summands");
        }
        for (const LinearSummand& s : spec.generators[j]) {
            if (!s.coeffs) {
                any_generic = true;
            } else if (s.coeffs->size() != spec.num_vars) {
                throw Error(ErrorCode::VariableMismatch, "linear form with " + std::to_string(s.coeffs->size()) +
                                                             " coefficients in " + std::to_string(spec.num_vars) +
                                                             " variables");
            }
        }
    }

    for (int attempt = 0; attempt < kDrawAttempts; ++attempt) {
        LevelPresentation out;
        out.num_vars = spec.num_vars;
        out.socle_degree = spec.degree;
        for (const auto& summands : spec.generators) {
            Form g(spec.num_vars, spec.degree);
            for (const LinearSummand& s : summands) {
                const std::vector<FieldElem> coeffs =
                    s.coeffs ? *s.coeffs : random_linear_coeffs(field, spec.num_vars, rng);
                g.add_scaled(field, power_of_linear_form(field, coeffs, spec.degree), field.one());
            }
            out.generators.push_back(std::move(g));
        }
        if (independent(field, out)) return out;
        if (!any_generic) break;
    }
    throw Error(ErrorCode::DependentGenerators, "power-sum generators are linearly dependent");
}

HVector compressed_hvector(std::size_t num_vars, unsigned socle_degree, std::size_t type) {
    if (num_vars < 1 || socle_degree < 1 || type < 1) {
        throw Error(ErrorCode::InvalidArgument, "compressed h-vector needs r, e, t >= 1");
    }
    HVector h;
    for (unsigned i = 0; i <= socle_degree; ++i) {
        const std::uint64_t ring = monomial_count(num_vars, i);
        const std::uint64_t dual = type * monomial_count(num_vars, socle_degree - i);
        h.entries.push_back(std::min(ring, dual));
    }
    return h;
}

AmbientAndQuotient septics_upper_sharp(const PrimeField& field, SeededRng& rng) {
    constexpr std::size_t kVars = 3;
    constexpr unsigned kDegree = 7;
    for (int attempt = 0; attempt < kDrawAttempts; ++attempt) {
        Form f = random_form(field, kVars, kDegree, rng);
        Form g = random_form(field, kVars, kDegree, rng);
        AmbientAndQuotient out;
        out.quotient = LevelPresentation::from_generators({differentiate(field, Monomial::variable(kVars, 0), f),
                                                           differentiate(field, Monomial::variable(kVars, 1), g)});
        out.ambient = LevelPresentation::from_generators({std::move(f), std::move(g)});
        if (independent(field, out.ambient) && independent(field, out.quotient)) return out;
    }
    throw Error(ErrorCode::DependentGenerators, "random septics stayed dependent after 3 draws");
}

LevelPresentation EqualHPair::designated_quotient() const {
    return LevelPresentation::from_generators({power_sums.generators.front()});
}

EqualHPair equal_h_pair(const PrimeField& field, const BlockFamilyParams& params, SeededRng& rng) {
    params.validate();
    if (params.type < 2 || params.block_size < 2) {
        throw Error(ErrorCode::InvalidArgument, "the pair needs t > 1 and p > 1");
    }
    const std::size_t r = params.num_vars();
    std::vector<std::size_t> counts{r - (params.type - 1)};
    counts.resize(params.type, 1);
    EqualHPair out;
    out.block = block_family(field, params);
    out.power_sums = power_sum_presentation(field, PowerSumSpec::generic(r, params.socle_degree, counts), rng);
    return out;
}

} // namespace apolab
