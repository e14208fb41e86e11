#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace vgs {

// Element of the divisible value group Q extended by two sentinels:
// plus_infinity (the value of 0) and minus_infinity (the epsilon of a
// nonzero constant). Finite values are exact rationals in lowest terms.
//
// Total order: minus_infinity < every finite value < plus_infinity.
class Value {
  public:
    Value() : kind_(Kind::finite), q_(0) {}

    static Value finite(mpq_class q);
    static Value finite(long num, long den = 1);
    static Value plus_infinity();
    static Value minus_infinity();

    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_plus_infinity() const { return kind_ == Kind::plus_inf; }
    bool is_minus_infinity() const { return kind_ == Kind::minus_inf; }

    // Finite payload; throws std::logic_error on a sentinel.
    const mpq_class& rational() const;

    // finite + finite is exact; x + plus_infinity = plus_infinity.
    // minus_infinity is never an operand of addition (logic_error).
    Value operator+(const Value& o) const;

    // Partial: finite - finite, plus_infinity - finite. Anything else
    // is a logic_error; callers guard (see epsilon()).
    Value operator-(const Value& o) const;

    // n * this for a nonnegative integer n. times(0) is the finite 0
    // even for infinite values (empty-product convention for Q^0).
    Value times(const mpz_class& n) const;
    Value times(long n) const { return times(mpz_class(n)); }

    // this / k for k >= 1; plus_infinity / k = plus_infinity.
    Value div(unsigned long k) const;

    Value negated() const;

    bool operator==(const Value& o) const;
    bool operator!=(const Value& o) const { return !(*this == o); }
    bool operator<(const Value& o) const;
    bool operator>(const Value& o) const { return o < *this; }
    bool operator<=(const Value& o) const { return !(o < *this); }
    bool operator>=(const Value& o) const { return !(*this < o); }

    // "9/2", "4", "inf", "-inf"; parse accepts the same forms.
    std::string str() const;
    static Value parse(const std::string& s);

  private:
    enum class Kind { finite, plus_inf, minus_inf };
    Kind kind_;
    mpq_class q_;
};

Value min(const Value& a, const Value& b);
Value max(const Value& a, const Value& b);

std::ostream& operator<<(std::ostream& os, const Value& v);

}  // namespace vgs
