#include "jones2/series.hpp"

#include <algorithm>
#include <sstream>

namespace jones2 {

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    TruncSeries r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    TruncSeries r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(order());
    for (int i = 0; i <= order(); ++i) r.c_[i] = -c_[i];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    TruncSeries r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i)
        for (int j = 0; i + j <= r.order(); ++j)
            if (c_[i] != 0 && o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
    return r;
}

TruncSeries TruncSeries::scaled(const Rational& s) const {
    TruncSeries r(order());
    for (int i = 0; i <= order(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

TruncSeries TruncSeries::truncated(int new_order) const {
    if (new_order > order()) throw std::invalid_argument("cannot extend a truncated series");
    TruncSeries r(new_order);
    for (int i = 0; i <= new_order; ++i) r.c_[i] = c_[i];
    return r;
}

bool TruncSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= order(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << to_string(c_[i]);
        if (i >= 1) os << "*h";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    os << " + O(h^" << order() + 1 << ")";
    return os.str();
}

TruncSeries series_from_laurent(const LaurentPoly& p, int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    TruncSeries out(order);
    if (p.is_zero()) return out;
    std::vector<Rational> inv_factorial(static_cast<std::size_t>(order) + 1, Rational(1));
    for (int i = 1; i <= order; ++i) inv_factorial[i] = inv_factorial[i - 1] / Rational(i);
    for (const auto& [m, c] : p.terms()) {
        // c * t^m |-> c * (-1)^m * e^(m h)
        Int sign = (m % 2 == 0) ? Int(1) : Int(-1);
        Int mpow(1);
        Int mm(m);
        for (int i = 0; i <= order; ++i) {
            out.set_coeff(i, out.coeff(i) + Rational(c * sign * mpow) * inv_factorial[i]);
            mpow *= mm;
        }
    }
    return out;
}

SeriesMatrix::SeriesMatrix(int n, int order) : n_(n) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    c_.assign(static_cast<std::size_t>(order) + 1, RationalMatrix(n, n));
}

SeriesMatrix SeriesMatrix::identity(int n, int order) {
    SeriesMatrix m(n, order);
    m.c_[0] = RationalMatrix::identity(n);
    return m;
}

SeriesMatrix SeriesMatrix::substitute(const LaurentMatrix& m, int order) {
    if (m.rows() != m.cols()) throw std::invalid_argument("substitute: non-square matrix");
    SeriesMatrix out(m.rows(), order);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            TruncSeries s = series_from_laurent(m.at(i, j), order);
            for (int k = 0; k <= order; ++k) out.c_[k].at(i, j) = s.coeff(k);
        }
    return out;
}

TruncSeries SeriesMatrix::entry(int i, int j) const {
    TruncSeries s(order());
    for (int k = 0; k <= order(); ++k) s.set_coeff(k, c_[k].at(i, j));
    return s;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("series matrix dimension mismatch");
    SeriesMatrix r(n_, std::min(order(), o.order()));
    for (int k = 0; k <= r.order(); ++k)
        for (int i = 0; i <= k; ++i) r.c_[k] = r.c_[k] + c_[i] * o.c_[k - i];
    return r;
}

SeriesMatrix SeriesMatrix::truncated(int new_order) const {
    if (new_order > order()) throw std::invalid_argument("cannot extend a truncated series matrix");
    SeriesMatrix r(n_, new_order);
    for (int k = 0; k <= new_order; ++k) r.c_[k] = c_[k];
    return r;
}

bool SeriesMatrix::is_identity() const {
    if (!c_[0].is_identity()) return false;
    for (int k = 1; k <= order(); ++k)
        if (!c_[k].is_zero()) return false;
    return true;
}

}  // namespace jones2
