#include "chowforms/field.hpp"

namespace chowforms::exactalg {

Field Field::prime(mpz_class modulus) {
    if (modulus < 2 || mpz_probab_prime_p(modulus.get_mpz_t(), 30) == 0) {
        throw DomainError("Field::prime: modulus " + modulus.get_str() +
                          " is not prime");
    }
    return Field(FieldKind::PrimeField, std::move(modulus));
}

Field Field::rationals() { return Field(FieldKind::Rationals, 0); }

Scalar Field::reduce(mpz_class v) const {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
    return Scalar(r);
}

Scalar Field::from_int(long v) const {
    if (is_prime_field()) return reduce(mpz_class(v));
    return Scalar(v);
}

Scalar Field::from_mpz(const mpz_class& v) const {
    if (is_prime_field()) return reduce(v);
    return Scalar(v);
}

Scalar Field::from_string(const std::string& s) const {
    Scalar q(s);
    q.canonicalize();
    if (is_prime_field()) {
        if (q.get_den() != 1) {
            // a/b mod p
            return mul(reduce(q.get_num()), inv(reduce(q.get_den())));
        }
        return reduce(q.get_num());
    }
    return q;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (is_prime_field()) {
        mpz_class v = a.get_num() + b.get_num();
        if (v >= modulus_) v -= modulus_;
        return Scalar(v);
    }
    return a + b;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (is_prime_field()) {
        mpz_class v = a.get_num() - b.get_num();
        if (v < 0) v += modulus_;
        return Scalar(v);
    }
    return a - b;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (is_prime_field()) return reduce(a.get_num() * b.get_num());
    return a * b;
}

Scalar Field::neg(const Scalar& a) const {
    if (is_prime_field()) {
        if (sgn(a) == 0) return a;
        return Scalar(mpz_class(modulus_ - a.get_num()));
    }
    return -a;
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw DomainError("Field::inv: division by zero");
    if (is_prime_field()) {
        mpz_class r;
        mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(),
                   modulus_.get_mpz_t());
        return Scalar(r);
    }
    return 1 / a;
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
    return mul(a, inv(b));
}

void Field::submul(Scalar& acc, const Scalar& f, const Scalar& x) const {
    if (is_prime_field()) {
        mpz_class v = acc.get_num() - f.get_num() * x.get_num();
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
        acc = Scalar(r);
        return;
    }
    acc -= f * x;
}

std::string Field::describe() const {
    if (is_prime_field()) return "GF(" + modulus_.get_str() + ")";
    return "QQ";
}

Scalar Rng::scalar(const Field& f) {
    if (f.is_prime_field()) {
        const mpz_class& p = f.modulus();
        size_t bits = mpz_sizeinbase(p.get_mpz_t(), 2);
        mpz_class v = 0;
        for (size_t got = 0; got < bits + 64; got += 32) {
            v <<= 32;
            v += static_cast<unsigned long>(gen_() & 0xffffffffull);
        }
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        return Scalar(r);
    }
    long v = static_cast<long>(gen_() % 1999) - 999;
    return Scalar(v);
}

Scalar Rng::nonzero_scalar(const Field& f) {
    for (;;) {
        Scalar s = scalar(f);
        if (!Field::is_zero(s)) return s;
    }
}

}  // namespace chowforms::exactalg
