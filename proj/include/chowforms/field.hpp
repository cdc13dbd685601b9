#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "chowforms/errors.hpp"

namespace chowforms::exactalg {

// Canonical scalar: reduced fraction with positive denominator.  Over a
// prime field the denominator is always 1 and the numerator lies in [0, p).
using Scalar = mpq_class;

enum class FieldKind { PrimeField, Rationals };

// Exact coefficient field: Z/p for a prime p, or Q.  Copyable value type;
// all arithmetic returns canonical representatives so that equality of
// field elements is structural equality of Scalars.
class Field {
public:
    static Field prime(mpz_class modulus);
    static Field rationals();

    FieldKind kind() const { return kind_; }
    const mpz_class& modulus() const { return modulus_; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long v) const;
    Scalar from_mpz(const mpz_class& v) const;
    // Parses "a" or "a/b" (the serialization format).
    Scalar from_string(const std::string& s) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const;

    // acc <- acc - f * x, used by elimination inner loops.
    void submul(Scalar& acc, const Scalar& f, const Scalar& x) const;

    static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

    bool operator==(const Field& o) const {
        return kind_ == o.kind_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string describe() const;

private:
    Field(FieldKind k, mpz_class m) : kind_(k), modulus_(std::move(m)) {}
    Scalar reduce(mpz_class v) const;

    FieldKind kind_;
    mpz_class modulus_;  // 0 for Rationals
};

// Default modulus: the Mersenne prime 2^31 - 1.
inline const mpz_class kDefaultPrime = mpz_class(2147483647);

// Deterministic seeded source of field elements and small integers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }
    // Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }

    // Uniform residue over a prime field; bounded integer in [-999, 999]
    // over the rationals.
    Scalar scalar(const Field& f);
    Scalar nonzero_scalar(const Field& f);

    // Derive an independent stream, used by retry logic.
    Rng fork() { return Rng(gen_() ^ 0x9e3779b97f4a7c15ull); }

private:
    std::mt19937_64 gen_;
};

}  // namespace chowforms::exactalg
