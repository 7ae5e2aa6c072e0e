#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "phlab/bump.hpp"

using namespace phlab;

TEST_SUITE("bump") {
    const double d0 = 9.5e-5;

    TEST_CASE("plateau and support") {
        const BumpProfile b(d0);
        CHECK(b.phi(0.0) == 1.0);
        CHECK(b.phi(d0 / 4.0) == 1.0);
        CHECK(b.phi(-d0 / 4.0) == 1.0);
        CHECK(b.phi(d0 / 2.0) == 0.0);
        CHECK(b.phi(d0) == 0.0);
        const double mid = 3.0 * d0 / 8.0;
        CHECK(b.phi(mid) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(b.phi(mid) == b.phi(-mid));
    }

    TEST_CASE("monotone on the transition") {
        const BumpProfile b(d0);
        double prev = 1.0;
        for (int i = 1; i < 1000; ++i) {
            const double x = d0 / 4.0 + i * (d0 / 4.0) / 1000.0;
            const double v = b.phi(x);
            CHECK(v <= prev);
            CHECK(b.phi_prime(x) <= 0.0);
            prev = v;
        }
    }

    TEST_CASE("derivative matches differences") {
        const BumpProfile b(1.0);
        for (double x : {0.26, 0.3, 0.375, 0.42, 0.49, -0.33}) {
            const double h = 1e-6;
            const double fd = (b.phi(x + h) - b.phi(x - h)) / (2.0 * h);
            CHECK(std::abs(b.phi_prime(x) - fd) < 1e-6 * std::max(1.0, std::abs(fd)));
        }
    }

    TEST_CASE("H and R vanish outside the support") {
        const BumpProfile b(d0);
        CHECK(b.H(d0, 0.0) == 0.0);
        CHECK(b.H(0.0, d0) == 0.0);
        CHECK(b.R(d0, 0.0, 0.0) == 0.0);
        CHECK(b.R(0.0, 0.0, d0) == 0.0);
        CHECK(b.H(0.0, 0.0) == 1.0);
    }

    TEST_CASE("bound constant") {
        const BumpBounds bb = BumpProfile(d0).bounds();
        CHECK(bb.C >= 1.1);
        CHECK(bb.C == doctest::Approx(1.1 * std::max({1.0, bb.sup_h, bb.sup_r})));
        // scale invariance: the bounds do not depend on delta0
        const BumpBounds other = BumpProfile(0.02).bounds();
        CHECK(other.C == doctest::Approx(bb.C).epsilon(1e-9));
        CHECK(bb.C == doctest::Approx(3.0233).epsilon(1e-4));
    }

    TEST_CASE("nonpositive delta0 is rejected") { CHECK_THROWS_AS(BumpProfile(0.0), std::invalid_argument); }
}
