#ifndef FOLIATION_RATIONAL_HPP
#define FOLIATION_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace fol {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "num/den", "num" or a decimal-free integer; throws ParseError
Rational parse_rational(const std::string& s);

// always "num/den"
std::string to_exact(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

} // namespace fol

#endif
