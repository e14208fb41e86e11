#include "vgs/value.hpp"

#include <ostream>
#include <stdexcept>

namespace vgs {

Value Value::finite(mpq_class q) {
    Value v;
    v.kind_ = Kind::finite;
    q.canonicalize();
    v.q_ = std::move(q);
    return v;
}

Value Value::finite(long num, long den) {
    return finite(mpq_class(num, den));
}

Value Value::plus_infinity() {
    Value v;
    v.kind_ = Kind::plus_inf;
    return v;
}

Value Value::minus_infinity() {
    Value v;
    v.kind_ = Kind::minus_inf;
    return v;
}

const mpq_class& Value::rational() const {
    if (kind_ != Kind::finite)
        throw std::logic_error("Value::rational: value is not finite");
    return q_;
}

Value Value::operator+(const Value& o) const {
    if (kind_ == Kind::minus_inf || o.kind_ == Kind::minus_inf)
        throw std::logic_error("Value: minus_infinity is not an addition operand");
    if (kind_ == Kind::plus_inf || o.kind_ == Kind::plus_inf)
        return plus_infinity();
    return finite(q_ + o.q_);
}

Value Value::operator-(const Value& o) const {
    if (kind_ == Kind::plus_inf && o.kind_ == Kind::finite)
        return plus_infinity();
    if (kind_ == Kind::finite && o.kind_ == Kind::finite)
        return finite(q_ - o.q_);
    throw std::logic_error("Value: unsupported subtraction operands");
}

Value Value::times(const mpz_class& n) const {
    if (n < 0)
        throw std::logic_error("Value::times: negative multiplier");
    if (n == 0)
        return finite(0);
    if (kind_ != Kind::finite)
        return *this;
    return finite(q_ * mpq_class(n));
}

Value Value::div(unsigned long k) const {
    if (k == 0)
        throw std::logic_error("Value::div: zero divisor");
    if (kind_ != Kind::finite)
        return *this;
    return finite(q_ / mpq_class(static_cast<long>(k)));
}

Value Value::negated() const {
    switch (kind_) {
        case Kind::finite: return finite(-q_);
        case Kind::plus_inf: return minus_infinity();
        case Kind::minus_inf: return plus_infinity();
    }
    throw std::logic_error("Value::negated: bad kind");
}

bool Value::operator==(const Value& o) const {
    if (kind_ != o.kind_)
        return false;
    return kind_ != Kind::finite || q_ == o.q_;
}

bool Value::operator<(const Value& o) const {
    if (kind_ == Kind::minus_inf)
        return o.kind_ != Kind::minus_inf;
    if (kind_ == Kind::plus_inf)
        return false;
    if (o.kind_ == Kind::plus_inf)
        return true;
    if (o.kind_ == Kind::minus_inf)
        return false;
    return q_ < o.q_;
}

std::string Value::str() const {
    switch (kind_) {
        case Kind::finite: return q_.get_str();
        case Kind::plus_inf: return "inf";
        case Kind::minus_inf: return "-inf";
    }
    throw std::logic_error("Value::str: bad kind");
}

Value Value::parse(const std::string& s) {
    if (s == "inf" || s == "+inf")
        return plus_infinity();
    if (s == "-inf")
        return minus_infinity();
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Value::parse: bad value literal '" + s + "'");
    q.canonicalize();
    return finite(q);
}

Value min(const Value& a, const Value& b) { return b < a ? b : a; }
Value max(const Value& a, const Value& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

}  // namespace vgs
