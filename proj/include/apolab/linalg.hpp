#pragma once

#include "apolab/field.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace apolab {

/// Dense row-major matrix over F_p.
class MatrixFp {
public:
    MatrixFp() = default;
    MatrixFp(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Builds from a list of equal-length rows. Throws Error(RaggedInput).
    static MatrixFp from_rows(const std::vector<std::vector<FieldElem>>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    FieldElem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<FieldElem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const FieldElem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const FieldElem> values);

    friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElem> data_;
};

/// Canonical reduced row-echelon basis of a row space.
struct ReducedBasis {
    std::size_t rank = 0;
    MatrixFp basis_rows;                 // rank x cols
    std::vector<std::size_t> pivot_cols; // strictly increasing, one per row

    friend bool operator==(const ReducedBasis&, const ReducedBasis&) = default;
};

ReducedBasis rref(const PrimeField& field, const MatrixFp& m);

/// Dimension of the span of `rows`; 0 for an empty list. Throws
/// Error(RaggedInput) if the rows differ in length.
std::size_t rank_of_span(const PrimeField& field, const std::vector<std::vector<FieldElem>>& rows);

/// c random combinations of the basis rows (every coefficient drawn from
/// F_p^*). Redrawn until the rows are independent, at most three attempts.
/// Throws Error(TypeTooLarge) if c > rank, Error(InvalidArgument) if c == 0, Error(GenericityFailure)
/// when all attempts are dependent.
MatrixFp random_combinations(const PrimeField& field, const ReducedBasis& basis, std::size_t c, SeededRng& rng);

} // namespace apolab
