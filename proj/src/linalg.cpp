#include "apolab/linalg.hpp"

#include "apolab/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace apolab {

MatrixFp MatrixFp::from_rows(const std::vector<std::vector<FieldElem>>& rows, std::size_t cols) {
    MatrixFp m(0, cols);
    m.data_.reserve(rows.size() * cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void MatrixFp::append_row(std::span<const FieldElem> values) {
    if (values.size() != cols_) {
        throw Error(ErrorCode::RaggedInput, "row of length " + std::to_string(values.size()) +
                                                " appended to a matrix with " + std::to_string(cols_) +
                                                " columns");
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

ReducedBasis rref(const PrimeField& field, const MatrixFp& m) {
    MatrixFp work = m;
    const std::size_t rows = work.rows();
    const std::size_t cols = work.cols();
    std::vector<std::size_t> pivots;
    std::size_t next = 0;

    for (std::size_t col = 0; col < cols && next < rows; ++col) {
        std::size_t found = next;
        while (found < rows && work(found, col).value == 0) ++found;
        if (found == rows) continue;
        if (found != next) {
            auto a = work.row(found);
            auto b = work.row(next);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto pivot_row = work.row(next);
        const FieldElem scale = field.inv(pivot_row[col]);
        for (std::size_t j = col; j < cols; ++j) pivot_row[j] = field.mul(pivot_row[j], scale);

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == next) continue;
            auto target = work.row(i);
            const FieldElem factor = target[col];
            if (factor.value == 0) continue;
            // entries left of col are zero in the pivot row
            for (std::size_t j = col; j < cols; ++j) {
                if (pivot_row[j].value != 0) target[j] = field.sub(target[j], field.mul(factor, pivot_row[j]));
            }
        }
        pivots.push_back(col);
        ++next;
    }

    ReducedBasis out;
    out.rank = pivots.size();
    out.pivot_cols = std::move(pivots);
    out.basis_rows = MatrixFp(0, cols);
    for (std::size_t i = 0; i < out.rank; ++i) out.basis_rows.append_row(work.row(i));
    return out;
}

std::size_t rank_of_span(const PrimeField& field, const std::vector<std::vector<FieldElem>>& rows) {
    if (rows.empty()) return 0;
    return rref(field, MatrixFp::from_rows(rows, rows.front().size())).rank;
}

MatrixFp random_combinations(const PrimeField& field, const ReducedBasis& basis, std::size_t c, SeededRng& rng) {
    if (c == 0) throw Error(ErrorCode::InvalidArgument, "at least one combination is required");
    if (c > basis.rank) {
        throw Error(ErrorCode::TypeTooLarge, "requested " + std::to_string(c) +
                                                 " combinations of a rank-" + std::to_string(basis.rank) +
                                                 " basis");
    }
    const std::size_t cols = basis.basis_rows.cols();
    constexpr int kAttempts = 3;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        MatrixFp out(c, cols);
        for (std::size_t i = 0; i < c; ++i) {
            auto target = out.row(i);
            for (std::size_t k = 0; k < basis.rank; ++k) {
                const FieldElem w = field.random_nonzero(rng);
                auto source = basis.basis_rows.row(k);
                for (std::size_t j = 0; j < cols; ++j) {
                    if (source[j].value != 0) target[j] = field.add(target[j], field.mul(w, source[j]));
                }
            }
        }
        if (rref(field, out).rank == c) return out;
    }
    throw Error(ErrorCode::GenericityFailure,
                "random combinations stayed dependent after 3 attempts (prime " + std::to_string(field.prime()) +
                    ")");
}

} // namespace apolab
