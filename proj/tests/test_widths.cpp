#include <boost/multiprecision/cpp_bin_float.hpp>

#include <doctest.h>

#include "errors.hpp"
#include "widths.hpp"

using namespace udgmcp;

using big_float = boost::multiprecision::cpp_bin_float_100;

TEST_CASE("the first convergents are exact") {
    struct expected {
        long t;
        long p, q;
    };
    for (expected e : {expected{0, 2, 1}, expected{1, 13, 6}, expected{2, 28, 13},
                       expected{3, 181, 84}, expected{4, 390, 181}, expected{5, 2521, 1170}}) {
        convergent c = xi_convergent(e.t);
        CHECK(c.t == e.t);
        CHECK(c.p == e.p);
        CHECK(c.q == e.q);
    }
    CHECK_THROWS_AS((void)xi_convergent(-1), error);
}

TEST_CASE("odd convergents obey the two-step recurrence") {
    // composing the alternating coefficients 2 and 6 one odd index to the
    // next gives c(t+2) = 13 c(t) + 6 c(t-1); it carries 13/6 to 181/84 and
    // 181/84 to 2521/1170
    for (long t = 1; t <= 19; t += 2) {
        convergent prev = xi_convergent(t - 1);
        convergent cur = xi_convergent(t);
        convergent next = xi_convergent(t + 2);
        CHECK(next.p == 13 * cur.p + 6 * prev.p);
        CHECK(next.q == 13 * cur.q + 6 * prev.q);
    }
    CHECK(xi_convergent(3).p == 181);
    CHECK(xi_convergent(3).q == 84);
    CHECK(xi_convergent(5).p == 2521);
    CHECK(xi_convergent(5).q == 1170);

    // adjacent convergents satisfy the determinant identity |p_t q_{t-1} - p_{t-1} q_t| = 1
    for (long t = 1; t <= 15; ++t) {
        convergent a = xi_convergent(t - 1);
        convergent b = xi_convergent(t);
        bigint det = b.p * a.q - a.p * b.q;
        CHECK((det == 1 || det == -1));
    }
}

TEST_CASE("convergents approximate xi within 1/q^2") {
    big_float xi = 1 + 2 / sqrt(big_float(3));
    for (long t = 0; t <= 41; ++t) {
        convergent c = xi_convergent(t);
        big_float pq = big_float(c.p) / big_float(c.q);
        big_float err = abs(pq - xi);
        big_float bound = 1 / (big_float(c.q) * big_float(c.q));
        CHECK(err < bound);
        // odd-indexed convergents sit above xi, even-indexed below
        if (t % 2 == 1)
            CHECK(pq > xi);
        else
            CHECK(pq < xi);
    }
}

TEST_CASE("rational widths stay inside the exactness window") {
    for (long t = 1; t <= 21; t += 2) {
        rational_width w = width_from_convergent(t);
        CHECK(w.d_num == w.q);
        CHECK(w.d_den == w.p - w.q);
        // 0.8 < d, integer-exact: 5 q > 4 (p - q)
        CHECK(w.d_num * 5 > w.d_den * 4);
        // d < sqrt(3)/2, integer-exact: 4 q^2 < 3 (p - q)^2
        CHECK(4 * w.d_num * w.d_num < 3 * w.d_den * w.d_den);
        CHECK(w.value() > 0.8);
        CHECK(w.value() < 0.8660254037844387);
    }
    CHECK_THROWS_AS((void)width_from_convergent(2), error);
    CHECK_THROWS_AS((void)width_from_convergent(-3), error);
}

TEST_CASE("select_width picks the smallest sufficient odd convergent") {
    rational_width w1 = select_width(0.5);  // ceil(3/eps) = 6 <= 36 = 6^2
    CHECK(w1.t == 1);
    CHECK(w1.d_num == 6);
    CHECK(w1.d_den == 7);

    rational_width w2 = select_width(0.01);  // needs q^2 >= 300, q = 6 fails, q = 84 works
    CHECK(w2.t == 3);
    CHECK(w2.d_num == 84);
    CHECK(w2.d_den == 97);

    rational_width w3 = select_width(1e-4);  // needs q^2 >= 30000
    CHECK(w3.t == 5);
    CHECK(w3.d_num == 1170);
    CHECK(w3.d_den == 1351);

    CHECK_THROWS_AS((void)select_width(0.0), error);
    CHECK_THROWS_AS((void)select_width(1.0), error);
    CHECK_THROWS_AS((void)select_width(-0.2), error);
}

TEST_CASE("width doubles match their exact fractions") {
    rational_width w = width_from_convergent(3);
    CHECK(w.value() == doctest::Approx(84.0 / 97.0).epsilon(1e-15));
}
