#include "widths.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "errors.hpp"

namespace udgmcp {

convergent xi_convergent(long t) {
    if (t < 0) raise(errc::invalid_argument, "xi_convergent: t must be non-negative");
    // p_t = a_t p_{t-1} + p_{t-2}, q_t likewise, with coefficients 2, 6, 2, 6, ...
    bigint p_prev = 1, q_prev = 0;  // virtual t = -1
    bigint p = 2, q = 1;            // t = 0
    for (long i = 1; i <= t; ++i) {
        long a = (i % 2 == 1) ? 6 : 2;
        bigint p_next = a * p + p_prev;
        bigint q_next = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
    return {t, p, q};
}

double rational_width::value() const { return d_num.convert_to<double>() / d_den.convert_to<double>(); }

rational_width width_from_convergent(long odd_t) {
    if (odd_t < 1 || odd_t % 2 == 0)
        raise(errc::invalid_argument, "width_from_convergent: t must be odd and positive");
    convergent c = xi_convergent(odd_t);
    rational_width w;
    w.p = c.p;
    w.q = c.q;
    w.d_num = c.q;
    w.d_den = c.p - c.q;
    w.t = odd_t;
    return w;
}

namespace {

// exact ceil(3 / eps) for the binary rational eps actually passed in
bigint ceil_three_over(double eps) {
    using boost::multiprecision::cpp_rational;
    cpp_rational r(eps);  // exact value of the double
    cpp_rational three_over = 3 / r;
    bigint num = boost::multiprecision::numerator(three_over);
    bigint den = boost::multiprecision::denominator(three_over);
    return (num + den - 1) / den;
}

}  // namespace

rational_width select_width(double eps) {
    if (!(eps > 0.0) || !(eps < 1.0))
        raise(errc::invalid_argument, "select_width: eps must lie in (0, 1)");
    bigint threshold = ceil_three_over(eps);
    for (long t = 1;; t += 2) {
        convergent c = xi_convergent(t);
        if (c.q * c.q >= threshold) return width_from_convergent(t);
    }
}

}  // namespace udgmcp
