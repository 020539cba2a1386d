#pragma once

#include <map>
#include <vector>

#include "jones2/numeric.hpp"

namespace jones2 {

/// Univariate Laurent polynomial over Z, dense between its lowest and
/// highest degree. Trimmed on construction: the first and last stored
/// coefficients are nonzero unless the polynomial is zero (empty storage),
/// so operator== is structural equality.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero
    LaurentPoly(long constant);
    LaurentPoly(const Int& constant);
    LaurentPoly(long low, std::vector<Int> coeffs);

    static LaurentPoly monomial(const Int& coeff, long exponent);
    static LaurentPoly from_terms(const std::map<long, Int>& terms);

    bool is_zero() const { return c_.empty(); }
    long lowest_degree() const;   // throws on zero
    long highest_degree() const;  // throws on zero
    Int coeff(long exponent) const;
    std::map<long, Int> terms() const;

    LaurentPoly operator+(const LaurentPoly&) const;
    LaurentPoly operator-(const LaurentPoly&) const;
    LaurentPoly operator*(const LaurentPoly&) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly&) const = default;

    /// Multiplication by t^k.
    LaurentPoly shifted(long k) const;

    /// True iff this is a unit of Z[t,t^-1], i.e. +-t^k; reports k and the sign.
    bool is_unit(long* exponent = nullptr, int* sign = nullptr) const;

    /// Exact evaluation at a nonzero rational value of t.
    Rational evaluate_at(const Rational& t_value) const;

    std::string str() const;  // e.g. "t^3 - 2 + t^-2"

private:
    void trim();
    long low_ = 0;
    std::vector<Int> c_;  // c_[i] = coefficient of t^(low_ + i)
};

}  // namespace jones2
