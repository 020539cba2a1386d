#include "jones2/matrix.hpp"

namespace jones2 {

int rref_in_place(RationalMatrix& m, std::vector<int>* pivots) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

int rank(const RationalMatrix& m) {
    RationalMatrix w = m;
    return rref_in_place(w);
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows();
    RationalMatrix w(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
        w.at(i, n + i) = 1;
    }
    std::vector<int> piv;
    rref_in_place(w, &piv);
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(piv.size()) <= i || piv[i] != i)
            throw std::domain_error("matrix is singular");
    RationalMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = w.at(i, n + j);
    return out;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    RationalMatrix w = m;
    std::vector<int> piv;
    rref_in_place(w, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::vector<Rational>> out;
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(m.cols());
        v[fc] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -w.at(static_cast<int>(r), fc);
        out.push_back(std::move(v));
    }
    return out;
}

LaurentMatrix inverse_unit_det(const LaurentMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    LaurentPoly det = determinant(m);
    long k = 0;
    int sign = 0;
    if (!det.is_unit(&k, &sign))
        throw std::domain_error("not invertible over Laurent ring: det = " + det.str());
    LaurentMatrix adj = adjugate(m);
    // 1/(+-t^k) = +-t^(-k)
    return adj.map<LaurentPoly>([&](const LaurentPoly& p) {
        LaurentPoly q = p.shifted(-k);
        return sign < 0 ? -q : q;
    });
}

IntMatrix to_int_matrix(const RationalMatrix& m) {
    return m.map<Int>([](const Rational& q) {
        if (!is_integral(q)) throw std::domain_error("entry is not an integer: " + to_string(q));
        return q.get_num();
    });
}

RationalMatrix to_rational_matrix(const IntMatrix& m) {
    return m.map<Rational>([](const Int& n) { return Rational(n); });
}

}  // namespace jones2
