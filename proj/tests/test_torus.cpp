#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "doctest.h"
#include "phlab/anosov.hpp"
#include "phlab/torus.hpp"

using namespace phlab;

TEST_SUITE("torus") {
    TEST_CASE("wrap and centre") {
        CHECK(wrap01(1.25) == doctest::Approx(0.25));
        CHECK(wrap01(-0.25) == doctest::Approx(0.75));
        CHECK(wrap01(-1e-300) < 1.0);
        CHECK(centered(0.75) == doctest::Approx(-0.25));
        CHECK(centered(0.5) == doctest::Approx(-0.5));
        CHECK(centered(-0.5) == doctest::Approx(-0.5));
    }

    TEST_CASE("mul_frac keeps the low bits of large products") {
        const double y = 0.123456789012345;
        const double a = 3524578.0;
        using quad = boost::multiprecision::cpp_bin_float_quad;
        const quad exact = quad(a) * quad(y);
        const double ref = static_cast<double>(exact - floor(exact));
        CHECK(std::abs(mul_frac(a, y) - ref) < 1e-15);
    }

    TEST_CASE("points reduce into the unit cube") {
        Vec raw(3);
        raw << 1.5, -0.25, 2.0;
        const TorusPoint p(raw);
        CHECK(p[0] == doctest::Approx(0.5));
        CHECK(p[1] == doctest::Approx(0.75));
        CHECK(p[2] == 0.0);
        CHECK(TorusPoint::zero(4).dim() == 4);
    }

    TEST_CASE("distance and lifts respect the quotient") {
        Vec a(2), b(2);
        a << 0.99, 0.5;
        b << 0.01, 0.5;
        const TorusPoint p(a), q(b);
        CHECK(torus_distance(p, q) == doctest::Approx(0.02));
        const Vec l = lift_near(p, q);
        CHECK(l[0] == doctest::Approx(-0.01));
    }

    TEST_CASE("eigen chart round trip and box test") {
        const ToralAutomorphism a = anosov_power(4);
        Mat frame(2, 2);
        frame.col(0) = a.e_u();
        frame.col(1) = a.e_s();
        Vec ev(2);
        ev << a.lambda(), 1.0 / a.lambda();
        const EigenChart chart(frame, ev, 0.01, TorusPoint::zero(2));
        Vec c(2);
        c << 0.004, -0.002;
        const TorusPoint p = chart.from_chart(c);
        const auto back = chart.to_chart(p);
        REQUIRE(back.has_value());
        CHECK(std::abs((*back)[0] - 0.004) < 1e-15);
        CHECK(std::abs((*back)[1] + 0.002) < 1e-15);
        c << 0.02, 0.0;
        CHECK_FALSE(chart.to_chart(chart.from_chart(c)).has_value());
    }

    TEST_CASE("eigen chart rejects bad frames") {
        Mat frame(2, 2);
        frame << 1.0, 1.0, 0.0, 1.0;
        Vec ev(2);
        ev << 2.0, 0.5;
        CHECK_THROWS_AS(EigenChart(frame, ev, 0.01, TorusPoint::zero(2)), std::invalid_argument);
        frame.setIdentity();
        CHECK_THROWS_AS(EigenChart(frame, ev, 0.3, TorusPoint::zero(2)), std::invalid_argument);
        ev << 0.5, 2.0;
        CHECK_THROWS_AS(EigenChart(frame, ev, 0.01, TorusPoint::zero(2)), std::invalid_argument);
    }
}
