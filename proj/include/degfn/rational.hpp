#ifndef DEGFN_RATIONAL_HPP
#define DEGFN_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace degfn {

// Exact arbitrary-precision rational scalar.  GMP keeps values canonical
// (positive denominator, gcd 1) after every operation.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

inline Rational inv(const Rational& q) {
    if (is_zero(q)) throw std::domain_error("rational: division by zero");
    return 1 / q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace degfn

#endif
