#pragma once

#include "apolab/field.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace apolab {

/// C(n, k) with an overflow check (throws Error(InvalidArgument)).
std::size_t binomial(std::size_t n, std::size_t k);

/// Number of monomials of degree d in r variables, C(d + r - 1, r - 1).
std::size_t monomial_count(std::size_t num_vars, unsigned degree);

/// Exponent vector over r variables. The same type indexes both the dual
/// variables y_i (terms of a Form) and the operators x_i acting on them.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exponents);

    /// The degree-1 monomial in variable `index` (0-based).
    static Monomial variable(std::size_t num_vars, std::size_t index);
    static Monomial one(std::size_t num_vars) { return Monomial(std::vector<unsigned>(num_vars, 0)); }

    const std::vector<unsigned>& exponents() const noexcept { return exponents_; }
    std::size_t num_vars() const noexcept { return exponents_.size(); }
    unsigned degree() const noexcept { return degree_; }
    unsigned operator[](std::size_t i) const { return exponents_[i]; }

    /// Componentwise exponent sum. Throws Error(VariableMismatch).
    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<unsigned> exponents_;
    unsigned degree_ = 0;
};

/// Project-wide monomial order: lexicographic on exponent vectors, the
/// largest first exponent first. Rank 0 is y_1^d.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        return a.exponents() > b.exponents();
    }
};

/// Position of `m` among the degree-|m| monomials in MonomialOrder.
std::size_t monomial_rank(const Monomial& m);

/// Inverse of monomial_rank. Throws Error(IndexOutOfRange) when
/// rank >= monomial_count(num_vars, degree).
Monomial monomial_unrank(std::size_t num_vars, unsigned degree, std::size_t rank);

/// All degree-d monomials in r variables, in rank order.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned degree);

/// Homogeneous form in y_1..y_r with coefficients in F_p. Zero coefficients
/// are never stored, so an empty term map is the zero form.
class Form {
public:
    using Terms = std::map<Monomial, FieldElem, MonomialOrder>;

    Form(std::size_t num_vars, unsigned degree);

    std::size_t num_vars() const noexcept { return num_vars_; }
    unsigned degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    FieldElem coefficient(const Monomial& m) const;

    /// Adds c·m to the form, dropping the term if it cancels. Throws
    /// Error(VariableMismatch) or Error(DegreeOutOfRange) if m does not fit.
    void add_term(const PrimeField& field, const Monomial& m, FieldElem c);

    /// Overwrites the coefficient of m (erasing it when c is zero). c must
    /// already be a canonical residue.
    void set_coefficient(const Monomial& m, FieldElem c);

    /// this += scale·other.
    void add_scaled(const PrimeField& field, const Form& other, FieldElem scale);

    friend bool operator==(const Form&, const Form&) = default;

private:
    std::size_t num_vars_;
    unsigned degree_;
    Terms terms_;
};

/// Applies the operator x^a to F as partial differentiation. Coefficients
/// pick up falling factorials, reduced mod p.
Form differentiate(const PrimeField& field, const Monomial& op, const Form& form);

/// (c_1 y_1 + ... + c_r y_r)^e.
Form power_of_linear_form(const PrimeField& field, std::span<const FieldElem> coeffs, unsigned exponent);

/// Dense coefficient row of length monomial_count(r, d) in rank order.
std::vector<FieldElem> form_to_coord_row(const Form& form);
Form form_from_coord_row(std::size_t num_vars, unsigned degree, std::span<const FieldElem> row);

/// Every monomial coefficient drawn uniformly from F_p.
Form random_form(const PrimeField& field, std::size_t num_vars, unsigned degree, SeededRng& rng);

} // namespace apolab
