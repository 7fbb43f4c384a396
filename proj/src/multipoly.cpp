#include "apolab/multipoly.hpp"

#include "apolab/errors.hpp"

#include <limits>
#include <numeric>
#include <string>

namespace apolab {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        // result * (n - k + i) is divisible by i at every step
        std::size_t factor = n - k + i;
        if (result > std::numeric_limits<std::size_t>::max() / factor) {
            throw Error(ErrorCode::InvalidArgument,
                        "binomial C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
        }
        result = result * factor / i;
    }
    return result;
}

std::size_t monomial_count(std::size_t num_vars, unsigned degree) {
    if (num_vars == 0) throw Error(ErrorCode::InvalidArgument, "at least one variable is required");
    return binomial(degree + num_vars - 1, num_vars - 1);
}

Monomial::Monomial(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0U)) {}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "variable " + std::to_string(index) + " outside 0.." + std::to_string(num_vars - 1));
    }
    std::vector<unsigned> e(num_vars, 0);
    e[index] = 1;
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (num_vars() != other.num_vars()) {
        throw Error(ErrorCode::VariableMismatch, "monomials over different variable counts");
    }
    std::vector<unsigned> e(exponents_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
    return Monomial(std::move(e));
}

std::size_t monomial_rank(const Monomial& m) {
    const std::size_t r = m.num_vars();
    if (r == 0) throw Error(ErrorCode::InvalidArgument, "empty monomial");
    std::size_t rank = 0;
    unsigned remaining = m.degree();
    for (std::size_t j = 0; j + 1 < r; ++j) {
        const unsigned a = m[j];
        // Monomials sharing the prefix but with a larger exponent at j: their
        // tails have degree < remaining - a in the last r - j - 1 variables.
        if (a < remaining) rank += monomial_count(r - j, remaining - a - 1);
        remaining -= a;
    }
    return rank;
}

Monomial monomial_unrank(std::size_t num_vars, unsigned degree, std::size_t rank) {
    const std::size_t total = monomial_count(num_vars, degree);
    if (rank >= total) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "rank " + std::to_string(rank) + " outside [0," + std::to_string(total) + ")");
    }
    std::vector<unsigned> e(num_vars, 0);
    unsigned remaining = degree;
    for (std::size_t j = 0; j + 1 < num_vars; ++j) {
        for (unsigned v = remaining + 1; v-- > 0;) {
            const std::size_t block = monomial_count(num_vars - j - 1, remaining - v);
            if (rank < block) {
                e[j] = v;
                break;
            }
            rank -= block;
        }
        remaining -= e[j];
    }
    e[num_vars - 1] = remaining;
    return Monomial(std::move(e));
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree) {
    const std::size_t n = monomial_count(num_vars, degree);
    std::vector<Monomial> out;
    out.reserve(n);
    // Walk the order directly rather than unranking each index.
    std::vector<unsigned> e(num_vars, 0);
    e[0] = degree;
    for (std::size_t k = 0; k < n; ++k) {
        out.emplace_back(e);
        if (k + 1 == n) break;
        // Next in decreasing lex order: find the rightmost non-last position
        // with a positive exponent, move one unit right and gather the tail.
        std::size_t j = num_vars - 1;
        while (j-- > 0 && e[j] == 0) {}
        const unsigned tail = e[num_vars - 1];
        e[num_vars - 1] = 0;
        e[j] -= 1;
        e[j + 1] = tail + 1;
    }
    return out;
}

Form::Form(std::size_t num_vars, unsigned degree) : num_vars_(num_vars), degree_(degree) {
    if (num_vars == 0) throw Error(ErrorCode::InvalidArgument, "a form needs at least one variable");
}

FieldElem Form::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElem{} : it->second;
}

void Form::add_term(const PrimeField& field, const Monomial& m, FieldElem c) {
    if (m.num_vars() != num_vars_) {
        throw Error(ErrorCode::VariableMismatch, "term has " + std::to_string(m.num_vars()) +
                                                     " variables, form has " + std::to_string(num_vars_));
    }
    if (m.degree() != degree_) {
        throw Error(ErrorCode::DegreeOutOfRange, "term of degree " + std::to_string(m.degree()) +
                                                     " in a form of degree " + std::to_string(degree_));
    }
    if (c.value == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = field.add(it->second, c);
    if (it->second.value == 0) terms_.erase(it);
}

void Form::set_coefficient(const Monomial& m, FieldElem c) {
    if (m.num_vars() != num_vars_) throw Error(ErrorCode::VariableMismatch, "term over the wrong ring");
    if (m.degree() != degree_) throw Error(ErrorCode::DegreeOutOfRange, "term of the wrong degree");
    if (c.value == 0) {
        terms_.erase(m);
    } else {
        terms_.insert_or_assign(m, c);
    }
}

void Form::add_scaled(const PrimeField& field, const Form& other, FieldElem scale) {
    if (other.num_vars_ != num_vars_) throw Error(ErrorCode::VariableMismatch, "forms over different rings");
    if (other.degree_ != degree_) throw Error(ErrorCode::DegreeOutOfRange, "forms of different degrees");
    for (const auto& [m, c] : other.terms_) add_term(field, m, field.mul(c, scale));
}

Form differentiate(const PrimeField& field, const Monomial& op, const Form& form) {
    if (op.num_vars() != form.num_vars()) {
        throw Error(ErrorCode::VariableMismatch, "operator has " + std::to_string(op.num_vars()) +
                                                     " variables, form has " + std::to_string(form.num_vars()));
    }
    if (op.degree() > form.degree()) {
        throw Error(ErrorCode::DegreeExceeded, "operator of degree " + std::to_string(op.degree()) +
                                                   " applied to a form of degree " +
                                                   std::to_string(form.degree()));
    }
    Form out(form.num_vars(), form.degree() - op.degree());
    std::vector<unsigned> e(form.num_vars());
    for (const auto& [m, c] : form.terms()) {
        FieldElem coeff = c;
        bool survives = true;
        for (std::size_t i = 0; i < e.size() && survives; ++i) {
            if (m[i] < op[i]) {
                survives = false;
                break;
            }
            for (unsigned k = 0; k < op[i]; ++k) coeff = field.mul(coeff, field.from_uint(m[i] - k));
            e[i] = m[i] - op[i];
        }
        if (survives) out.add_term(field, Monomial(e), coeff);
    }
    return out;
}

Form power_of_linear_form(const PrimeField& field, std::span<const FieldElem> coeffs, unsigned exponent) {
    if (coeffs.empty()) throw Error(ErrorCode::InvalidArgument, "linear form needs at least one variable");
    if (exponent == 0) throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
    bool all_zero = true;
    for (FieldElem c : coeffs) all_zero = all_zero && c.value == 0;
    if (all_zero) throw Error(ErrorCode::ZeroForm, "linear form has only zero coefficients");

    // Pascal's triangle mod p keeps this free of inverses.
    std::vector<std::vector<FieldElem>> pascal(exponent + 1);
    for (unsigned n = 0; n <= exponent; ++n) {
        pascal[n].assign(n + 1, field.one());
        for (unsigned k = 1; k < n; ++k) pascal[n][k] = field.add(pascal[n - 1][k - 1], pascal[n - 1][k]);
    }
    std::vector<std::vector<FieldElem>> powers(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        powers[i].resize(exponent + 1);
        powers[i][0] = field.one();
        for (unsigned k = 1; k <= exponent; ++k) powers[i][k] = field.mul(powers[i][k - 1], coeffs[i]);
    }

    Form out(coeffs.size(), exponent);
    for (const Monomial& m : monomials_of_degree(coeffs.size(), exponent)) {
        FieldElem c = field.one();
        unsigned partial = 0;
        for (std::size_t i = 0; i < coeffs.size() && c.value != 0; ++i) {
            partial += m[i];
            c = field.mul(c, field.mul(pascal[partial][m[i]], powers[i][m[i]]));
        }
        out.add_term(field, m, c);
    }
    return out;
}

std::vector<FieldElem> form_to_coord_row(const Form& form) {
    std::vector<FieldElem> row(monomial_count(form.num_vars(), form.degree()));
    for (const auto& [m, c] : form.terms()) row[monomial_rank(m)] = c;
    return row;
}

Form form_from_coord_row(std::size_t num_vars, unsigned degree, std::span<const FieldElem> row) {
    const std::size_t n = monomial_count(num_vars, degree);
    if (row.size() != n) {
        throw Error(ErrorCode::ShapeMismatch,
                    "row of length " + std::to_string(row.size()) + ", expected " + std::to_string(n));
    }
    Form out(num_vars, degree);
    std::size_t k = 0;
    for (const Monomial& m : monomials_of_degree(num_vars, degree)) out.set_coefficient(m, row[k++]);
    return out;
}

Form random_form(const PrimeField& field, std::size_t num_vars, unsigned degree, SeededRng& rng) {
    Form out(num_vars, degree);
    for (const Monomial& m : monomials_of_degree(num_vars, degree)) out.add_term(field, m, field.random(rng));
    return out;
}

} // namespace apolab
