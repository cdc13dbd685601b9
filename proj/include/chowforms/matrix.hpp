#pragma once

#include <optional>
#include <vector>

#include "chowforms/field.hpp"

namespace chowforms::exactalg {

// Dense matrix over an exact field, row-major.
class ExactMatrix {
public:
    ExactMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)),
          rows_(rows),
          cols_(cols),
          a_(rows * cols, Scalar(0)) {}

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    std::vector<Scalar> mul_vector(const std::vector<Scalar>& v) const;

    bool operator==(const ExactMatrix& o) const = default;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

// Reduced row echelon form with pivot bookkeeping.  Pivot choice is the
// first nonzero entry in column order, so the result is deterministic.
// Over the rationals the forward phase is fraction-free (Bareiss) on an
// integer-scaled copy; only the back-substitution divides.
struct Echelon {
    ExactMatrix R;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

Echelon rref(const ExactMatrix& M);

std::size_t rank(const ExactMatrix& M);

// Basis of the right null space, one vector per free column, in reduced
// echelon form; size = cols - rank.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& M);

// One exact solution of M x = b with free variables set to zero, or
// nullopt if the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const ExactMatrix& M,
                                         const std::vector<Scalar>& b);

// Incremental row-reduction workspace: rows can be added one batch at a
// time and the running rank queried.  Used by rank-span oracles and by
// span-membership tests.
class RowSpan {
public:
    RowSpan(Field field, std::size_t cols)
        : field_(std::move(field)), cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduces v against the current rows; if a new pivot survives, absorbs
    // it and returns true.
    bool add_row(std::vector<Scalar> v);

    // True iff v lies in the current row span.
    bool contains(std::vector<Scalar> v) const;

    // Fully reduced basis rows (sorted by pivot column).
    std::vector<std::vector<Scalar>> reduced_rows() const;

private:
    void reduce_inplace(std::vector<Scalar>& v) const;

    Field field_;
    std::size_t cols_;
    std::vector<std::vector<Scalar>> rows_;   // pivot-normalized
    std::vector<std::size_t> pivots_;         // pivot column of rows_[k]
};

}  // namespace chowforms::exactalg
