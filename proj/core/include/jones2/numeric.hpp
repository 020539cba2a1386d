#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jones2 {

// Arbitrary-precision integers and rationals. mpq_class keeps values in
// lowest terms with positive denominator, which is exactly the canonical
// form required everywhere in this library: equality is structural.
using Int = mpz_class;
using Rational = mpq_class;

/// num/den with canonicalization; throws on den == 0.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) {
    return make_rational(Int(num), Int(den));
}

/// Floor division quotient (mpz_class operator/ truncates toward zero).
inline Int fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// Serialized form "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("invalid rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace jones2
