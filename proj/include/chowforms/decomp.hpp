#pragma once

#include "chowforms/chowlab.hpp"

namespace chowforms::decomp {

using chowlab::VerificationReport;
using exactalg::Field;
using exactalg::Rng;
using exactalg::Scalar;
using polyring::Form;
using polyring::LinearForm;
using polyring::Ring;

// A form together with a codimension-one decomposition witness: s
// pairwise non-proportional annihilating operators, and (when known) the
// summands themselves with L_i o f_i = 0 and sum f_i = f.
struct CodimOneInstance {
    int n = 0, d = 0, s = 0;
    Form f;
    std::vector<LinearForm> hyperplanes;
    std::vector<Form> summands;  // may be empty

    bool check_invariants() const;
};

// Point budget per hyperplane for reconstruction: C(d+n-1, n-1).
struct SamplingPlan {
    long points_per_hyperplane = 0;
    std::uint64_t seed = 0;
    int retries = chowlab::kDefaultRetries;

    static SamplingPlan standard(int n, int d, std::uint64_t seed);
};

CodimOneInstance synth_instance(const Field& field, int n, int d, int s,
                                std::uint64_t seed);

// True iff (L_1 ... L_s) o f = 0.
bool forward_check(const Form& f, std::span<const LinearForm> Ls);

// Constructive half of the decomposition lemma: sample points on each
// hyperplane, fit f as a sum of d-th powers of the samples, and group the
// powers per hyperplane into codimension-one summands.
std::optional<CodimOneInstance> reconstruct(const Form& f,
                                            std::span<const LinearForm> Ls,
                                            const SamplingPlan& plan);

// Sylvester decomposition of a binary form over a prime field: power-sum
// decomposition with ceil((d+1)/2) summands when an apolar operator of
// that degree splits over the field.
struct PowerTerm {
    Scalar coefficient;
    LinearForm point;  // l with term c * l^d
};
std::optional<std::vector<PowerTerm>> sylvester_binary(const Form& f);

// Rational points of the reduced decomposition locus over a small prime
// field: s-subsets of rational hyperplanes whose product is apolar to f.
long vsh_point_count(const Form& f, int s,
                     long enum_guard = chowlab::kDefaultEnumGuard);

// Checks dim (g^perp)_s = dim (I_X)_s for g a sum of ns generic powers,
// in the zero-dimensional case ns = C(d-s+n, n).
VerificationReport verify_smoothness_case(const Field& field, int n, int d,
                                          std::uint64_t seed,
                                          int retries = chowlab::kDefaultRetries);

VerificationReport verify_roundtrip(const Field& field, int n, int d,
                                    std::uint64_t seed,
                                    int retries = chowlab::kDefaultRetries);

}  // namespace chowforms::decomp
