#pragma once

#include <gmpxx.h>

#include <random>
#include <string>
#include <vector>

namespace vgs {

// A field element. For K = Q this is an arbitrary exact rational; for
// K = F_p it is the canonical representative in [0, p) with denominator 1.
// All arithmetic goes through the owning FieldSpec.
using Elem = mpq_class;

class FieldSpec {
  public:
    enum class Kind { rationals, prime_field };

    static FieldSpec rationals();
    static FieldSpec prime_field(const mpz_class& p);  // p must be prime
    // "Q" or "Fp:<p>"
    static FieldSpec parse(const std::string& s);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::prime_field; }
    const mpz_class& characteristic() const { return p_; }
    std::string str() const;

    bool operator==(const FieldSpec& o) const {
        return kind_ == o.kind_ && p_ == o.p_;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_integer(const mpz_class& n) const;
    // For F_p the denominator must be invertible mod p.
    Elem from_rational(const mpq_class& q) const;

    Elem add(const Elem& a, const Elem& b) const { return reduce(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return reduce(a - b); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
    Elem neg(const Elem& a) const { return reduce(-a); }
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(const Elem& a, unsigned long e) const;
    bool is_zero(const Elem& a) const { return a == 0; }

    std::string str(const Elem& a) const;

    // Canonical small-element ordering used by exhaustive enumerations and
    // witness tie-breaks: F_p lists 0,1,...,p-1; Q lists 0,1,-1.
    std::vector<Elem> small_elements() const;

    // Uniform over F_p; over Q, numerator in [-9,9] and denominator in [1,4].
    Elem random_element(std::mt19937_64& rng) const;
    Elem random_nonzero(std::mt19937_64& rng) const;

    // Maps into the canonical representative (mod p for prime fields).
    Elem reduce(const Elem& a) const;

  private:
    FieldSpec(Kind k, mpz_class p) : kind_(k), p_(std::move(p)) {}

    Kind kind_;
    mpz_class p_;  // 0 for rationals
};

}  // namespace vgs
