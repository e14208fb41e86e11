#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vgs/field.hpp"

namespace vgs {

// Exact dense univariate polynomial over Q or F_p, lowest degree first.
// Canonical form: no trailing zero coefficients; the zero polynomial has
// an empty coefficient vector and degree "none".
class Poly {
  public:
    explicit Poly(FieldSpec field) : field_(std::move(field)) {}
    Poly(FieldSpec field, std::vector<Elem> coeffs);

    static Poly zero(const FieldSpec& field) { return Poly(field); }
    static Poly constant(const FieldSpec& field, const Elem& c);
    static Poly x(const FieldSpec& field);
    // c * x^k
    static Poly monomial(const FieldSpec& field, const Elem& c, unsigned k);

    const FieldSpec& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const;
    std::optional<int> degree() const;
    // Coefficient of x^i (zero beyond the degree).
    Elem coeff(size_t i) const;
    Elem leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly negated() const;
    Poly scaled(const Elem& c) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Degree-major, then lexicographic over (a_d, ..., a_0) with rational
    // coefficient order. Deterministic tie-break for witness selection.
    static int compare(const Poly& a, const Poly& b);

    std::string str() const;

  private:
    void normalize();

    FieldSpec field_;
    std::vector<Elem> coeffs_;
};

// Exact division with remainder by a monic divisor of degree >= 1.
// Post: f = q*g + r with r = 0 or deg(r) < deg(g).
std::pair<Poly, Poly> poly_divrem(const Poly& f, const Poly& g);

// Base-Q positional expansion f = sum f_i * base^i with every stored part
// nonzero and deg(f_i) < deg(base).
struct Expansion {
    Poly base;
    std::vector<std::pair<Poly, unsigned>> parts;  // (f_i, i), i ascending

    Poly reconstruct() const;
};

Expansion q_expansion(const Poly& f, const Poly& q);

// Monic gcd (Euclid); gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// True iff g divides f exactly (g monic, deg >= 1 not required: any nonzero g).
bool poly_divides(const Poly& g, const Poly& f);

}  // namespace vgs
