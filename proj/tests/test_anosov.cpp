#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "phlab/anosov.hpp"
#include "phlab/gate.hpp"
#include "phlab/torus.hpp"

using namespace phlab;

TEST_SUITE("anosov") {
    TEST_CASE("fourth power of the cat map") {
        const ToralAutomorphism a = anosov_power(4);
        CHECK(a.entries() == std::array<std::int64_t, 4>{34, 21, 21, 13});
        CHECK(a.trace() == 47);
        CHECK(a.lambda() == doctest::Approx(std::pow(kLambda0, 4)).epsilon(1e-14));
        CHECK(a.lambda() == doctest::Approx(46.97871376374779).epsilon(1e-14));
        CHECK(a.e_u()[0] > 0.0);
        CHECK(std::abs(a.e_u().dot(a.e_s())) < 1e-15);
        const Eigen::Vector2d mu = a.matrix() * a.e_u();
        CHECK((mu - a.lambda() * a.e_u()).norm() < 1e-12);
    }

    TEST_CASE("apply and inverse are mutually inverse mod 1") {
        const ToralAutomorphism a = anosov_power(8);
        const double p[2] = {0.3141592653589793, 0.2718281828459045};
        double q[2], r[2];
        a.apply(p, q);
        a.apply_inverse(q, r);
        CHECK(std::abs(centered(r[0] - p[0])) < 1e-11);
        CHECK(std::abs(centered(r[1] - p[1])) < 1e-11);
    }

    TEST_CASE("invalid matrices") {
        CHECK_THROWS_AS(ToralAutomorphism({1, 1, 0, 1}), std::invalid_argument);  // not symmetric
        CHECK_THROWS_AS(ToralAutomorphism({2, 1, 1, 2}), std::invalid_argument);  // det 3
        CHECK_THROWS_AS(anosov_power(0), std::invalid_argument);
    }

    TEST_CASE("fixed points are counted by det(M - I)") {
        for (int n : {1, 2, 3, 4, 5}) {
            const ToralAutomorphism a = anosov_power(n);
            const FixedPoints fp = enumerate_fixed_points(a);
            CHECK(fp.count == a.trace() - 2);
            CHECK(static_cast<long long>(fp.points.size()) == fp.count);
            for (const auto& x : fp.points) {
                double y[2];
                a.apply(x.data(), y);
                CHECK(std::abs(centered(y[0] - x[0])) < 1e-9);
                CHECK(std::abs(centered(y[1] - x[1])) < 1e-9);
            }
        }
    }
}
