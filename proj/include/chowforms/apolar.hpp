#pragma once

#include <optional>

#include "chowforms/polyring.hpp"

namespace chowforms::apolar {

using exactalg::ExactMatrix;
using exactalg::Field;
using exactalg::Scalar;
using polyring::Form;
using polyring::LinearForm;
using polyring::Ring;

// Graded piece (f^perp)_s: operators of degree s annihilating f, as an
// echelonized basis of forms in T.
struct PerpPiece {
    int n, d, s;
    std::vector<Form> basis;
    std::size_t dim() const { return basis.size(); }
};

// Matrix of the contraction T_s -> S_{d-s}, D |-> D o f, in the fixed
// monomial bases: C(d-s+n, n) rows by C(s+n, n) columns.
ExactMatrix catalecticant(const Form& f, int s);

PerpPiece perp_space(const Form& f, int s);

// Basis of {g in S_e : D o g = 0}; all of S_e when e < deg D.
std::vector<Form> inverse_system(const Form& D, int e);

// Basis of (I_X)_s for the point set X = {l_1, ..., l_k} in the dual
// projective space: operators of degree s vanishing at every point.
std::vector<Form> point_ideal_piece(std::span<const LinearForm> points,
                                    int s);

// Exact coefficients c with f = sum c_i l_i^d, or nullopt if f is outside
// the span of the powers.
std::optional<std::vector<Scalar>> waring_fit(
    const Form& f, std::span<const LinearForm> points);

}  // namespace chowforms::apolar
