#pragma once

#include <span>
#include <string>
#include <vector>

#include "chowforms/matrix.hpp"

namespace chowforms::polyring {

using exactalg::Field;
using exactalg::Rng;
using exactalg::Scalar;

// S = k[X_0..X_n] (polynomials), T = k[d_0..d_n] (differential operators).
enum class Ring { S, T };

struct MultiIndex {
    std::vector<int> e;  // n+1 exponents
    int degree() const;
    bool operator==(const MultiIndex&) const = default;
};

// All C(d+n, n) degree-d multi-indices in n+1 variables, graded
// lexicographic (exponent vectors in descending lex order).  This order is
// the frozen contract for every coefficient sequence in the project.
std::vector<MultiIndex> monomial_basis(int n, int d);

std::size_t monomial_count(int n, int d);  // C(d+n, n)

// Position of mi in monomial_basis(n, mi.degree()).
std::size_t monomial_index(int n, const MultiIndex& mi);

// Dense homogeneous form in n+1 variables, tagged with the ring it lives
// in.  Immutable after construction.
class Form {
public:
    Form(Field field, int n, int degree, Ring ring);
    Form(Field field, int n, int degree, Ring ring, std::vector<Scalar> coeffs);

    const Field& field() const { return field_; }
    int n() const { return n_; }
    int degree() const { return degree_; }
    Ring ring() const { return ring_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& coeff(std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const;
    bool operator==(const Form&) const = default;

    std::string to_string() const;  // human-readable, for reports

private:
    Field field_;
    int n_, degree_;
    Ring ring_;
    std::vector<Scalar> coeffs_;
};

// Projectively normalized linear form: first nonzero coefficient is 1.
class LinearForm {
public:
    LinearForm(Field field, Ring ring, std::vector<Scalar> coeffs);

    const Field& field() const { return field_; }
    Ring ring() const { return ring_; }
    int n() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Form as_form() const;
    bool operator==(const LinearForm&) const = default;

    std::string to_string() const;

private:
    Field field_;
    Ring ring_;
    std::vector<Scalar> coeffs_;
};

bool proportional(const LinearForm& a, const LinearForm& b);
bool pairwise_non_proportional(std::span<const LinearForm> ls);

Form add(const Form& a, const Form& b);
Form sub(const Form& a, const Form& b);
Form scale(const Scalar& c, const Form& a);

// Differentiation action of T on S; degree drops by deg(D).  The
// multinomial constants are exactly what repeated partial derivation
// produces, which is why prime moduli must exceed the degree in play.
Form apply(const Form& D, const Form& f);

Form multiply(const Form& a, const Form& b);
Form product(std::span<const Form> factors);
Form product(std::span<const LinearForm> factors);

// l^d via repeated multiplication.
Form power(const LinearForm& l, int d);

Scalar evaluate(const Form& f, std::span<const Scalar> point);

// Pairing value of D in T_1 against the coefficient point of l in S_1 (and
// vice versa): sum of coordinate-wise products.
Scalar pair_linear(const LinearForm& D, const LinearForm& l);

Form random_form(const Field& field, int n, int d, Ring ring, Rng& rng);
LinearForm random_linear(const Field& field, int n, Ring ring, Rng& rng);
// k pairwise non-proportional linear forms; retries internally.
std::vector<LinearForm> random_distinct_linears(const Field& field, int n,
                                                Ring ring, int k, Rng& rng);

// Random element of the span of the given coefficient vectors, with
// nonzero coordinates on every basis vector.
std::vector<Scalar> random_combination(
    const Field& field, const std::vector<std::vector<Scalar>>& basis,
    Rng& rng);

}  // namespace chowforms::polyring
