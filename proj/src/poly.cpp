#include "vgs/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace vgs {

Poly::Poly(FieldSpec field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_)
        c = field_.reduce(c);
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back()))
        coeffs_.pop_back();
}

Poly Poly::constant(const FieldSpec& field, const Elem& c) {
    return Poly(field, {c});
}

Poly Poly::x(const FieldSpec& field) { return Poly(field, {Elem(0), Elem(1)}); }

Poly Poly::monomial(const FieldSpec& field, const Elem& c, unsigned k) {
    std::vector<Elem> cs(k + 1, Elem(0));
    cs[k] = c;
    return Poly(field, std::move(cs));
}

bool Poly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == 1;
}

std::optional<int> Poly::degree() const {
    if (coeffs_.empty())
        return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

Elem Poly::coeff(size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Elem(0);
}

Elem Poly::leading() const {
    if (coeffs_.empty())
        throw std::logic_error("Poly::leading: zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
    if (field_ != o.field_)
        throw std::invalid_argument("Poly: field mismatch");
    std::vector<Elem> cs(std::max(coeffs_.size(), o.coeffs_.size()), Elem(0));
    for (size_t i = 0; i < cs.size(); ++i)
        cs[i] = field_.add(coeff(i), o.coeff(i));
    return Poly(field_, std::move(cs));
}

Poly Poly::operator-(const Poly& o) const { return *this + o.negated(); }

Poly Poly::operator*(const Poly& o) const {
    if (field_ != o.field_)
        throw std::invalid_argument("Poly: field mismatch");
    if (is_zero() || o.is_zero())
        return Poly(field_);
    std::vector<Elem> cs(coeffs_.size() + o.coeffs_.size() - 1, Elem(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            cs[i + j] = field_.add(cs[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
    return Poly(field_, std::move(cs));
}

Poly Poly::negated() const {
    std::vector<Elem> cs(coeffs_);
    for (auto& c : cs)
        c = field_.neg(c);
    return Poly(field_, std::move(cs));
}

Poly Poly::scaled(const Elem& c) const {
    std::vector<Elem> cs(coeffs_);
    for (auto& e : cs)
        e = field_.mul(e, c);
    return Poly(field_, std::move(cs));
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(field_, field_.one());
    Poly base = *this;
    while (e > 0) {
        if (e & 1u)
            acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size())
        return a.coeffs_.size() < b.coeffs_.size() ? -1 : 1;
    for (size_t i = a.coeffs_.size(); i-- > 0;) {
        if (a.coeffs_[i] != b.coeffs_[i])
            return a.coeffs_[i] < b.coeffs_[i] ? -1 : 1;
    }
    return 0;
}

namespace {

void append_term(std::ostringstream& os, bool first, const Elem& c, unsigned deg) {
    Elem abs_c = c;
    bool neg = c < 0;
    if (neg)
        abs_c = -c;
    if (first)
        os << (neg ? "-" : "");
    else
        os << (neg ? " - " : " + ");
    if (deg == 0) {
        os << abs_c.get_str();
        return;
    }
    if (abs_c != 1)
        os << abs_c.get_str() << "*";
    os << "x";
    if (deg > 1)
        os << "^" << deg;
}

}  // namespace

std::string Poly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (field_.is_zero(coeffs_[i]))
            continue;
        append_term(os, first, coeffs_[i], static_cast<unsigned>(i));
        first = false;
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divrem(const Poly& f, const Poly& g) {
    if (!g.is_monic())
        throw std::invalid_argument("poly_divrem: divisor must be monic");
    auto dg = g.degree();
    if (!dg || *dg < 1)
        throw std::invalid_argument("poly_divrem: divisor must have degree >= 1");
    const FieldSpec& field = f.field();
    if (field != g.field())
        throw std::invalid_argument("poly_divrem: field mismatch");

    std::vector<Elem> rem(f.coeffs());
    int dr = static_cast<int>(rem.size()) - 1;
    int dq = dr - *dg;
    if (dq < 0)
        return {Poly(field), f};
    std::vector<Elem> quot(static_cast<size_t>(dq) + 1, Elem(0));
    while (dr >= *dg) {
        Elem lead = rem[static_cast<size_t>(dr)];
        if (!field.is_zero(lead)) {
            int shift = dr - *dg;
            quot[static_cast<size_t>(shift)] = lead;
            for (int i = 0; i <= *dg; ++i) {
                size_t pos = static_cast<size_t>(shift + i);
                rem[pos] = field.sub(rem[pos], field.mul(lead, g.coeff(static_cast<size_t>(i))));
            }
        }
        --dr;
    }
    rem.resize(static_cast<size_t>(*dg));
    return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

Poly Expansion::reconstruct() const {
    Poly acc(base.field());
    for (const auto& [fi, i] : parts)
        acc = acc + fi * base.pow(i);
    return acc;
}

Expansion q_expansion(const Poly& f, const Poly& q) {
    if (!q.is_monic())
        throw std::invalid_argument("q_expansion: base must be monic");
    auto dq = q.degree();
    if (!dq || *dq < 1)
        throw std::invalid_argument("q_expansion: base must have degree >= 1");

    Expansion e{q, {}};
    Poly rest = f;
    unsigned i = 0;
    while (!rest.is_zero()) {
        if (*rest.degree() < *dq) {
            e.parts.emplace_back(rest, i);
            break;
        }
        auto [quot, rem] = poly_divrem(rest, q);
        if (!rem.is_zero())
            e.parts.emplace_back(rem, i);
        rest = quot;
        ++i;
    }
    return e;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly f = a, g = b;
    while (!g.is_zero()) {
        if (g.is_constant())
            return Poly::constant(f.field(), f.field().one());
        Poly monic = g.scaled(g.field().inv(g.leading()));
        Poly r = poly_divrem(f, monic).second;
        f = monic;
        g = r;
    }
    if (f.is_zero())
        return f;
    return f.scaled(f.field().inv(f.leading()));
}

bool poly_divides(const Poly& g, const Poly& f) {
    if (g.is_zero())
        return f.is_zero();
    if (f.is_zero())
        return true;
    if (g.is_constant())
        return true;
    Poly monic = g.scaled(g.field().inv(g.leading()));
    return poly_divrem(f, monic).second.is_zero();
}

}  // namespace vgs
