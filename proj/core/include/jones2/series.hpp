#pragma once

#include <vector>

#include "jones2/laurent.hpp"
#include "jones2/matrix.hpp"
#include "jones2/numeric.hpp"

namespace jones2 {

/// Truncated power series in h over Q: exactly order+1 stored coefficients,
/// arithmetic never looks past the truncation order. Binary operations on
/// series of different orders truncate to the smaller one.
class TruncSeries {
public:
    explicit TruncSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
    }
    TruncSeries(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != order + 1)
            throw std::invalid_argument("coefficient count must be order+1");
    }

    static TruncSeries constant(const Rational& value, int order) {
        TruncSeries s(order);
        s.c_[0] = value;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    void set_coeff(int i, const Rational& v) { c_[static_cast<std::size_t>(i)] = v; }

    TruncSeries operator+(const TruncSeries&) const;
    TruncSeries operator-(const TruncSeries&) const;
    TruncSeries operator*(const TruncSeries&) const;
    TruncSeries operator-() const;
    TruncSeries scaled(const Rational&) const;
    bool operator==(const TruncSeries&) const = default;

    TruncSeries truncated(int new_order) const;
    bool is_zero() const;

    std::string str() const;

private:
    std::vector<Rational> c_;
};

/// Substitution t -> -e^h followed by Taylor expansion through degree K:
/// each term c*t^m contributes c*(-1)^m * sum_{i<=K} (m h)^i / i!.
TruncSeries series_from_laurent(const LaurentPoly& p, int order);

/// Square matrix over TruncSeries, stored as matrix-valued coefficients of
/// 1, h, h^2, ... — the layout every computation here actually wants.
class SeriesMatrix {
public:
    SeriesMatrix(int n, int order);
    static SeriesMatrix identity(int n, int order);
    static SeriesMatrix substitute(const LaurentMatrix& m, int order);  // t -> -e^h entrywise

    int dim() const { return n_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }

    const RationalMatrix& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    RationalMatrix& coeff(int k) { return c_[static_cast<std::size_t>(k)]; }

    TruncSeries entry(int i, int j) const;

    SeriesMatrix operator*(const SeriesMatrix&) const;  // truncates to the smaller order
    bool operator==(const SeriesMatrix&) const = default;

    SeriesMatrix truncated(int new_order) const;
    bool is_identity() const;

private:
    int n_ = 0;
    std::vector<RationalMatrix> c_;
};

}  // namespace jones2
