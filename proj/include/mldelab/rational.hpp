#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "mldelab/errors.hpp"

namespace mldelab {

// Every scalar in the library is an exact rational. GMP keeps values in
// lowest terms with a positive denominator, which is exactly the contract
// the rest of the code relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", or "p/q". mpq_class(string) does not canonicalize, so
// this wrapper does.
inline Rational rat_parse(const std::string& text) {
    mpq_class r;
    if (r.set_str(text, 10) != 0)
        throw ParseError("cannot parse rational '" + text + "'");
    if (r.get_den() == 0)
        throw ParseError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_nonneg_integer(const Rational& r) {
    return is_integer(r) && sgn(r) >= 0;
}

inline long to_long(const Integer& n) {
    if (!n.fits_slong_p()) throw DomainError("integer out of long range: " + n.get_str());
    return n.get_si();
}

// Exact integer square root; empty when n is not a perfect square.
inline std::optional<Integer> exact_isqrt(const Integer& n) {
    if (sgn(n) < 0) return std::nullopt;
    Integer root = sqrt(n);
    if (root * root != n) return std::nullopt;
    return root;
}

// Exact non-negative square root of a rational, when one exists.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    auto num = exact_isqrt(r.get_num());
    if (!num) return std::nullopt;
    auto den = exact_isqrt(r.get_den());
    if (!den) return std::nullopt;
    Rational out(*num, *den);
    out.canonicalize();
    return out;
}

inline Integer floor_rat(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Integer ceil_rat(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline long lcm_long(long a, long b) {
    Integer l = lcm(Integer(a), Integer(b));
    return to_long(l);
}

inline long gcd_long(long a, long b) {
    Integer g = gcd(Integer(a), Integer(b));
    return to_long(g);
}

} // namespace mldelab
