#include "vgs/field.hpp"

#include <stdexcept>

namespace vgs {

FieldSpec FieldSpec::rationals() { return FieldSpec(Kind::rationals, 0); }

FieldSpec FieldSpec::prime_field(const mpz_class& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("FieldSpec: characteristic " + p.get_str() + " is not prime");
    return FieldSpec(Kind::prime_field, p);
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "Q")
        return rationals();
    if (s.rfind("Fp:", 0) == 0) {
        mpz_class p;
        if (p.set_str(s.substr(3), 10) != 0)
            throw std::invalid_argument("FieldSpec: bad field spec '" + s + "'");
        return prime_field(p);
    }
    throw std::invalid_argument("FieldSpec: bad field spec '" + s + "' (expected Q or Fp:<p>)");
}

std::string FieldSpec::str() const {
    return kind_ == Kind::rationals ? "Q" : "Fp:" + p_.get_str();
}

Elem FieldSpec::reduce(const Elem& a) const {
    if (kind_ == Kind::rationals)
        return a;
    // Denominators stay 1 throughout F_p arithmetic; from_rational clears
    // any incoming denominator first.
    mpz_class num = a.get_num();
    if (a.get_den() != 1)
        return from_rational(a);
    mpz_class r;
    mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p_.get_mpz_t());
    return Elem(r);
}

Elem FieldSpec::from_integer(const mpz_class& n) const { return reduce(Elem(n)); }

Elem FieldSpec::from_rational(const mpq_class& q) const {
    if (kind_ == Kind::rationals)
        return q;
    Elem num = Elem(mpz_class(q.get_num()));
    Elem den = Elem(mpz_class(q.get_den()));
    return mul(reduce(num), inv(reduce(den)));
}

Elem FieldSpec::inv(const Elem& a) const {
    if (is_zero(a))
        throw std::domain_error("FieldSpec::inv: division by zero");
    if (kind_ == Kind::rationals)
        return Elem(1) / a;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_num().get_mpz_t(), p_.get_mpz_t()) == 0)
        throw std::domain_error("FieldSpec::inv: element not invertible mod p");
    return Elem(inv);
}

Elem FieldSpec::pow(const Elem& a, unsigned long e) const {
    Elem acc = one();
    Elem base = reduce(a);
    while (e > 0) {
        if (e & 1)
            acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::string FieldSpec::str(const Elem& a) const { return a.get_str(); }

std::vector<Elem> FieldSpec::small_elements() const {
    std::vector<Elem> out;
    if (kind_ == Kind::prime_field) {
        for (mpz_class v = 0; v < p_; ++v)
            out.emplace_back(v);
    } else {
        out.emplace_back(0);
        out.emplace_back(1);
        out.emplace_back(-1);
    }
    return out;
}

Elem FieldSpec::random_element(std::mt19937_64& rng) const {
    if (kind_ == Kind::prime_field) {
        std::uniform_int_distribution<unsigned long> d(0, p_.get_ui() - 1);
        return Elem(static_cast<long>(d(rng)));
    }
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

Elem FieldSpec::random_nonzero(std::mt19937_64& rng) const {
    for (;;) {
        Elem e = random_element(rng);
        if (!is_zero(e))
            return e;
    }
}

}  // namespace vgs
