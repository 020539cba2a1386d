#include "jones2/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace jones2 {

LaurentPoly::LaurentPoly(long constant) {
    if (constant != 0) c_.emplace_back(constant);
}

LaurentPoly::LaurentPoly(const Int& constant) {
    if (constant != 0) c_.push_back(constant);
}

LaurentPoly::LaurentPoly(long low, std::vector<Int> coeffs) : low_(low), c_(std::move(coeffs)) {
    trim();
}

LaurentPoly LaurentPoly::monomial(const Int& coeff, long exponent) {
    LaurentPoly p;
    if (coeff != 0) {
        p.low_ = exponent;
        p.c_.push_back(coeff);
    }
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<long, Int>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += monomial(c, e);
    return p;
}

void LaurentPoly::trim() {
    std::size_t lo = 0, hi = c_.size();
    while (lo < hi && c_[lo] == 0) ++lo;
    while (hi > lo && c_[hi - 1] == 0) --hi;
    if (lo == hi) {
        c_.clear();
        low_ = 0;
        return;
    }
    low_ += static_cast<long>(lo);
    c_ = std::vector<Int>(c_.begin() + static_cast<long>(lo), c_.begin() + static_cast<long>(hi));
}

long LaurentPoly::lowest_degree() const {
    if (is_zero()) throw std::domain_error("lowest_degree of zero polynomial");
    return low_;
}

long LaurentPoly::highest_degree() const {
    if (is_zero()) throw std::domain_error("highest_degree of zero polynomial");
    return low_ + static_cast<long>(c_.size()) - 1;
}

Int LaurentPoly::coeff(long exponent) const {
    long i = exponent - low_;
    if (i < 0 || i >= static_cast<long>(c_.size())) return Int(0);
    return c_[static_cast<std::size_t>(i)];
}

std::map<long, Int> LaurentPoly::terms() const {
    std::map<long, Int> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) out[low_ + static_cast<long>(i)] = c_[i];
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long low = std::min(low_, o.low_);
    long high = std::max(low_ + static_cast<long>(c_.size()), o.low_ + static_cast<long>(o.c_.size()));
    std::vector<Int> out(static_cast<std::size_t>(high - low));
    for (std::size_t i = 0; i < c_.size(); ++i) out[static_cast<std::size_t>(low_ - low) + i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[static_cast<std::size_t>(o.low_ - low) + i] += o.c_[i];
    return LaurentPoly(low, std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (Int& x : p.c_) x = -x;
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return LaurentPoly(low_ + o.low_, std::move(out));
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly p(*this);
    if (!p.is_zero()) p.low_ += k;
    return p;
}

bool LaurentPoly::is_unit(long* exponent, int* sign) const {
    if (c_.size() != 1 || (c_[0] != 1 && c_[0] != -1)) return false;
    if (exponent) *exponent = low_;
    if (sign) *sign = (c_[0] == 1) ? 1 : -1;
    return true;
}

Rational LaurentPoly::evaluate_at(const Rational& t_value) const {
    if (t_value == 0) throw std::domain_error("cannot evaluate a Laurent polynomial at t = 0");
    // Horner on t^(high..low), then multiply by t^low.
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * t_value + Rational(c_[i]);
        if (i == 0) break;
    }
    if (low_ == 0 || is_zero()) return acc;
    Rational p(1);
    unsigned long k = static_cast<unsigned long>(low_ < 0 ? -low_ : low_);
    Rational base = low_ < 0 ? Rational(1) / t_value : t_value;
    for (unsigned long i = 0; i < k; ++i) p *= base;
    return acc * p;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Int& c = c_[i];
        if (c == 0) continue;
        long e = low_ + static_cast<long>(i);
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs_int(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace jones2
