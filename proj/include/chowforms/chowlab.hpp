#pragma once

#include <map>
#include <string>

#include "chowforms/apolar.hpp"

namespace chowforms::chowlab {

using exactalg::Field;
using exactalg::Rng;
using exactalg::Scalar;
using polyring::Form;
using polyring::LinearForm;
using polyring::Ring;

// Outcome of one randomized oracle run; pass iff computed == expected on
// every key.  Everything needed to reproduce the run is recorded.
struct VerificationReport {
    std::string oracle_name;
    std::map<std::string, long> params;
    std::uint64_t seed = 0;
    Field field = Field::rationals();
    std::map<std::string, mpz_class> computed;
    std::map<std::string, mpz_class> expected;
    bool pass = false;
    int retries_used = 0;

    void finalize() { pass = computed == expected; }
};

inline constexpr int kDefaultRetries = 5;
inline constexpr long kDefaultEnumGuard = 10'000'000;

// Basis of the affine tangent space to the Chow variety at the product
// L_1 ... L_s: span of all products with one factor replaced by each
// coordinate operator.
std::vector<Form> chow_tangent_basis(std::span<const LinearForm> Ls);

// Degree-t forms on the dual projective space vanishing on every pairwise
// intersection {L_i = L_j = 0}.  Conditions are imposed coefficient-wise
// on the restriction of each monomial to a parametrization of the
// codimension-2 subspace.
std::vector<Form> forms_through_pairwise_meets(std::span<const LinearForm> Ls,
                                               int t);

VerificationReport verify_chow_tangent(const Field& field, int n, int s,
                                       std::uint64_t seed,
                                       int retries = kDefaultRetries);

VerificationReport ideal_claim_hilbert_check(const Field& field, int n, int s,
                                             int t_lo, int t_hi,
                                             std::uint64_t seed,
                                             int retries = kDefaultRetries);

// Affine tangent space to the cone over the variety of codimension-one
// forms at g, where L o g = 0: the fiber directions (L^{-1})_d plus one
// particular solution of L o x = -(d_v o g) per coordinate direction.
std::vector<Form> vhat_tangent_basis(const LinearForm& L, const Form& g);

// Projective dimension of the span of tangent spaces at s random points
// of the codimension-one variety (Terracini criterion for the secant).
long terracini_dim(const Field& field, int n, int d, int s,
                   std::uint64_t seed);

// Smallest s for which the tangent span fills P S_d.
long smin_oracle(const Field& field, int n, int d, std::uint64_t seed,
                 int retries = kDefaultRetries);

// Brute-force degree of the Chow variety: partitions of ns random dual
// points into s unordered blocks of n, each block spanning a hyperplane.
mpz_class chow_degree_oracle(const Field& field, int n, int s,
                             std::uint64_t seed,
                             long enum_guard = kDefaultEnumGuard,
                             int retries = kDefaultRetries);

VerificationReport verify_chow_degree(const Field& field, int n, int s,
                                      std::uint64_t seed,
                                      long enum_guard = kDefaultEnumGuard,
                                      int retries = kDefaultRetries);

VerificationReport verify_terracini(const Field& field, int n, int d,
                                    std::uint64_t seed,
                                    int retries = kDefaultRetries);

}  // namespace chowforms::chowlab
