#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace udgmcp {

using bigint = boost::multiprecision::cpp_int;

// Convergent p/q of xi = 1 + 2/sqrt(3) = 2.1547..., whose continued fraction
// is [2; 6, 2, 6, 2, ...]. The first few are 2/1, 13/6, 28/13, 181/84.
// Odd-indexed convergents approach xi strictly from above, even ones from
// below, and |p/q - xi| < 1/q^2 always holds.
struct convergent {
    long t = 0;
    bigint p;
    bigint q;
};

convergent xi_convergent(long t);

// Rational strip width d = q / (p - q) built from an odd convergent p/q.
// Odd t keeps p/q > xi, which keeps d below sqrt(3)/2, the exactness limit
// of the strip solver; every such width also stays above 0.8.
struct rational_width {
    bigint p;      // convergent numerator
    bigint q;      // convergent denominator
    bigint d_num;  // d = d_num / d_den = q / (p - q)
    bigint d_den;
    long t = 0;

    double value() const;
};

rational_width width_from_convergent(long odd_t);

// Smallest odd t whose convergent satisfies q^2 >= ceil(3/eps), so that the
// q^-2 approximation error is below eps/3; returns the corresponding width.
// eps must lie in (0, 1).
rational_width select_width(double eps);

}  // namespace udgmcp
