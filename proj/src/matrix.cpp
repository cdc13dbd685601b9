#include "chowforms/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace chowforms::exactalg {

std::vector<Scalar> ExactMatrix::mul_vector(
    const std::vector<Scalar>& v) const {
    assert(v.size() == cols_);
    std::vector<Scalar> out(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc(0);
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& a = at(i, j);
            if (Field::is_zero(a) || Field::is_zero(v[j])) continue;
            acc = field_.add(acc, field_.mul(a, v[j]));
        }
        out[i] = acc;
    }
    return out;
}

namespace {

// Multiplies each row by the lcm of its denominators so the fraction-free
// phase works on integers.  Row scaling does not change the RREF.
void scale_rows_integral(ExactMatrix& A) {
    for (std::size_t i = 0; i < A.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < A.cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                    A.at(i, j).get_den().get_mpz_t());
        }
        if (l == 1) continue;
        Scalar f(l);
        for (std::size_t j = 0; j < A.cols(); ++j) A.at(i, j) *= f;
    }
}

void swap_rows(ExactMatrix& A, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A.at(a, j), A.at(b, j));
}

}  // namespace

Echelon rref(const ExactMatrix& M) {
    ExactMatrix A = M;
    const Field& F = A.field();
    const std::size_t rows = A.rows(), cols = A.cols();
    std::vector<std::size_t> pivots;

    if (F.is_prime_field()) {
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t p = r;
            while (p < rows && Field::is_zero(A.at(p, c))) ++p;
            if (p == rows) continue;
            swap_rows(A, r, p);
            Scalar ipiv = F.inv(A.at(r, c));
            for (std::size_t j = c; j < cols; ++j)
                A.at(r, j) = F.mul(A.at(r, j), ipiv);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || Field::is_zero(A.at(i, c))) continue;
                Scalar f = A.at(i, c);
                for (std::size_t j = c; j < cols; ++j)
                    F.submul(A.at(i, j), f, A.at(r, j));
            }
            pivots.push_back(c);
            ++r;
        }
        return {std::move(A), std::move(pivots)};
    }

    // Rationals: Bareiss fraction-free forward elimination, then an exact
    // division back phase.
    scale_rows_integral(A);
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && Field::is_zero(A.at(p, c))) ++p;
        if (p == rows) continue;
        swap_rows(A, r, p);
        const mpz_class piv = A.at(r, c).get_num();
        for (std::size_t i = r + 1; i < rows; ++i) {
            const mpz_class fi = A.at(i, c).get_num();
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class v = piv * A.at(i, j).get_num() -
                              fi * A.at(r, j).get_num();
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                A.at(i, j) = Scalar(q);
            }
            A.at(i, c) = Scalar(0);
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t pc = pivots[k];
        Scalar ipiv = 1 / A.at(k, pc);
        for (std::size_t j = pc; j < cols; ++j) A.at(k, j) *= ipiv;
        for (std::size_t i = 0; i < k; ++i) {
            if (Field::is_zero(A.at(i, pc))) continue;
            Scalar f = A.at(i, pc);
            for (std::size_t j = pc; j < cols; ++j) A.at(i, j) -= f * A.at(k, j);
        }
    }
    return {std::move(A), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& M) { return rref(M).rank(); }

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& M) {
    Echelon E = rref(M);
    const Field& F = M.field();
    const std::size_t cols = M.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : E.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[fc] = F.one();
        for (std::size_t k = 0; k < E.pivot_cols.size(); ++k)
            v[E.pivot_cols[k]] = F.neg(E.R.at(k, fc));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const ExactMatrix& M,
                                         const std::vector<Scalar>& b) {
    assert(b.size() == M.rows());
    ExactMatrix A(M.field(), M.rows(), M.cols() + 1);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) A.at(i, j) = M.at(i, j);
        A.at(i, M.cols()) = b[i];
    }
    Echelon E = rref(A);
    if (!E.pivot_cols.empty() && E.pivot_cols.back() == M.cols())
        return std::nullopt;
    std::vector<Scalar> x(M.cols(), Scalar(0));
    for (std::size_t k = 0; k < E.pivot_cols.size(); ++k)
        x[E.pivot_cols[k]] = E.R.at(k, M.cols());
    return x;
}

void RowSpan::reduce_inplace(std::vector<Scalar>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = v[pivots_[k]];
        if (Field::is_zero(c)) continue;
        Scalar f = c;
        const std::vector<Scalar>& row = rows_[k];
        for (std::size_t j = pivots_[k]; j < cols_; ++j) {
            if (Field::is_zero(row[j])) continue;
            field_.submul(v[j], f, row[j]);
        }
    }
}

bool RowSpan::add_row(std::vector<Scalar> v) {
    assert(v.size() == cols_);
    reduce_inplace(v);
    std::size_t p = 0;
    while (p < cols_ && Field::is_zero(v[p])) ++p;
    if (p == cols_) return false;
    Scalar ipiv = field_.inv(v[p]);
    for (std::size_t j = p; j < cols_; ++j) v[j] = field_.mul(v[j], ipiv);
    // keep existing rows fully reduced against the new pivot
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Scalar f = rows_[k][p];
        if (Field::is_zero(f)) continue;
        for (std::size_t j = p; j < cols_; ++j)
            field_.submul(rows_[k][j], f, v[j]);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool RowSpan::contains(std::vector<Scalar> v) const {
    assert(v.size() == cols_);
    reduce_inplace(v);
    for (const Scalar& c : v)
        if (!Field::is_zero(c)) return false;
    return true;
}

std::vector<std::vector<Scalar>> RowSpan::reduced_rows() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<std::vector<Scalar>> out;
    out.reserve(rows_.size());
    for (std::size_t i : order) out.push_back(rows_[i]);
    return out;
}

}  // namespace chowforms::exactalg
