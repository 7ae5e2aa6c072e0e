#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "phlab/circle_map.hpp"
#include "phlab/system_spec.hpp"
#include "phlab/torus.hpp"

using namespace phlab;

TEST_SUITE("circle") {
    const double lam = lambda_of(4);

    TEST_CASE("tuned strength hits the target multiplier") {
        for (int m : {1, 2, 3}) {
            const double c = SineFlowMap::tuned_strength(m, lam);
            CHECK(std::exp(2.0 * std::numbers::pi * m * c) == doctest::Approx(0.7 * lam).epsilon(1e-13));
            const SineFlowMap k(m, c);
            CHECK(k.deriv(0.0) == doctest::Approx(1.0 / (0.7 * lam)).epsilon(1e-12));
            CHECK(k.deriv(0.5 / m) == doctest::Approx(0.7 * lam).epsilon(1e-12));
            CHECK(static_cast<int>(k.sinks().size()) == m);
            CHECK(static_cast<int>(k.sources().size()) == m);
        }
    }

    TEST_CASE("fixed points, inverse and derivative") {
        const SineFlowMap k(2, SineFlowMap::tuned_strength(2, lam));
        for (double s : k.sinks()) CHECK(std::abs(centered(k.eval(s) - s)) < 1e-15);
        for (double s : k.sources()) CHECK(std::abs(centered(k.eval(s) - s)) < 1e-15);
        for (int i = 0; i < 200; ++i) {
            const double x = (i + 0.5) / 200.0;
            CHECK(std::abs(centered(k.inverse(k.eval(x)) - x)) < 1e-13);
            const double h = 1e-6;
            const double fd = centered(k.eval(x + h) - k.eval(x - h)) / (2.0 * h);
            CHECK(std::abs(k.deriv(x) - fd) < 1e-5 * std::max(1.0, k.deriv(x)));
        }
    }

    TEST_CASE("conditions at the tuned strength") {
        for (int m : {1, 2, 3}) {
            const SineFlowMap k(m, SineFlowMap::tuned_strength(m, lam));
            const auto rep = check_circle_conditions(k, lam, kStrictDelta0);
            CHECK(rep.pass());
            CHECK(rep.conditions.size() == 4);
            CHECK(rep.conditions[0].name == std::string(m == 1 ? "K1" : "J1"));
        }
    }

    TEST_CASE("identity flow fails the source expansion") {
        const SineFlowMap k(1, 0.0);
        const auto rep = check_circle_conditions(k, lam, kStrictDelta0);
        CHECK_FALSE(rep.pass());
        bool k3_failed = false;
        for (const auto& c : rep.conditions)
            if (c.name == "K3") k3_failed = !c.pass;
        CHECK(k3_failed);
    }

    TEST_CASE("too strong a flow fails the global bound") {
        const double c = std::log(2.0 * lam) / (2.0 * std::numbers::pi);
        const auto rep = check_circle_conditions(SineFlowMap(1, c), lam, kStrictDelta0);
        CHECK_FALSE(rep.pass());
        CHECK_FALSE(rep.conditions[0].pass);
    }
}
