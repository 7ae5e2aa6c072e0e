#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include "doctest.h"
#include "phlab/trapping.hpp"

using namespace phlab;

namespace {

SystemSpec spec(Family f, Mode m = Mode::Strict) {
    SystemSpec s;
    s.family = f;
    s.k = 256;
    s.mode = m;
    s.delta0 = m == Mode::Strict ? kStrictDelta0 : kRelaxedDelta0;
    return s;
}

}  // namespace

TEST_SUITE("trapping") {
    TEST_CASE("F_k slab maps inside itself with the required margin") {
        for (Mode m : {Mode::Strict, Mode::Relaxed}) {
            const DynamicalSystem sys(spec(Family::Fk, m));
            const double eta = sys.spec().delta0 / 4.0;
            const TrapReport r = slab_check(sys, eta, 0.5, 20000, 1);
            CHECK(r.pass);
            CHECK(r.required == doctest::Approx(0.25 * eta));
            CHECK(r.margin >= r.required);
        }
    }

    TEST_CASE("identity map is not trapping") {
        const DynamicalSystem sys(spec(Family::Fk));
        const TrapRegion slab{"slab", {{-1e-5, 1e-5}}};
        const TrapReport r = trapping_check(sys, [](const Vec& p) { return p; }, slab, 1000, 1);
        CHECK_FALSE(r.pass);
        CHECK(r.margin <= 0.0);
    }

    TEST_CASE("G_k filtration levels") {
        for (Mode m : {Mode::Strict, Mode::Relaxed}) {
            const DynamicalSystem sys(spec(Family::Gk, m));
            const auto reps = filtration_check(sys, 20000, 2);
            REQUIRE(reps.size() == 5);
            for (const auto& r : reps) {
                CAPTURE(r.name);
                CHECK(r.pass);
            }
        }
    }

    TEST_CASE("filtration regions need G_k") {
        CHECK_THROWS_AS(filtration_regions(DynamicalSystem(spec(Family::Fk))), std::invalid_argument);
    }

    TEST_CASE("escape times") {
        const DynamicalSystem sys(spec(Family::Fk));
        const double eta = kStrictDelta0 / 4.0;
        Rng rng(3);
        Vec p = sys.sample_uniform(rng);
        const int ci = sys.circle_offset();
        p[ci] = 0.25;
        const EscapeReport fwd = escape_time(sys, p, eta, false, 10000);
        CHECK(fwd.resolved);
        CHECK(fwd.steps > 0);
        CHECK(fwd.steps <= fwd.bound);
        CHECK(fwd.stayed);
        const EscapeReport rev = escape_time(sys, p, eta, true);
        CHECK(rev.resolved);
        CHECK(rev.steps <= rev.bound);
        p[ci] = 0.5 * eta;
        CHECK(escape_time(sys, p, eta).steps == 0);
    }

    TEST_CASE("middle displacement is positive and small near the fixed points") {
        const SineFlowMap k(1, SineFlowMap::tuned_strength(1, lambda_of(4)));
        const double z = middle_displacement(k, 0.005, 10000);
        CHECK(z > 0.0);
        CHECK(z < 0.5);
    }
}
