#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "phlab/maps.hpp"
#include "support/fd_oracle.hpp"

using namespace phlab;
using phlab::testing::fd_relative_error;
using phlab::testing::torus_gap;

namespace {

SystemSpec relaxed(Family f, double eps = 0.0) {
    SystemSpec s;
    s.family = f;
    s.mode = Mode::Relaxed;
    s.delta0 = kRelaxedDelta0;
    s.k = (f == Family::Hk || f == Family::Ak || f == Family::M3Glued) ? 2 : 256;
    s.perturbation = {eps, 3};
    return s;
}

}  // namespace

TEST_SUITE("maps") {
    TEST_CASE("Jacobian and inverse for every family") {
        for (Family f : {Family::LinearB, Family::Fk, Family::Gk, Family::DAgk, Family::Hk, Family::Ak, Family::M3Glued})
            for (double eps : {0.0, 1e-4}) {
                CAPTURE(to_string(f));
                CAPTURE(eps);
                const DynamicalSystem sys(relaxed(f, eps));
                Rng rng(17);
                double worst = 0.0, inv = 0.0;
                for (int i = 0; i < 100; ++i) {
                    const Vec p = i % 2 ? sys.sample_support(rng) : sys.sample_uniform(rng);
                    worst = std::max(worst, fd_relative_error(sys, p));
                    const Vec q = sys.step(p);
                    inv = std::max(inv, torus_gap(sys.step(sys.inverse_at(q)), q));
                }
                CHECK(worst < 1e-6);
                CHECK(inv < 1e-11);
            }
    }

    TEST_CASE("LinearB is the product B = A^2 x A") {
        SystemSpec s;
        s.family = Family::LinearB;
        s.k = 1;
        const DynamicalSystem sys(s);
        const Mat j = sys.jacobian_at(Vec::Constant(4, 0.3));
        CHECK(j(0, 0) == 34.0 * 34.0 + 21.0 * 21.0);
        CHECK(j(2, 2) == 34.0);
        CHECK(j(0, 2) == 0.0);
        const Mat c = sys.chart_jacobian_at(Vec::Constant(4, 0.3));
        const double lam = sys.lambda();
        CHECK(c(0, 0) == doctest::Approx(lam * lam));
        CHECK(c(1, 1) == doctest::Approx(lam));
        CHECK(c(3, 3) == doctest::Approx(1.0 / (lam * lam)));
    }

    TEST_CASE("F_k chart Jacobian at the origin") {
        SystemSpec s;
        s.k = 256;
        const DynamicalSystem sys(s);
        const Mat c = sys.chart_jacobian_at(Vec::Zero(5));
        CHECK(std::abs(c(1, 1) - 0.5) < 1e-12);
        CHECK(c(0, 1) == 0.0);
        CHECK(c(2, 2) == doctest::Approx(sys.circle()->sink_multiplier()));
    }

    TEST_CASE("TorusPoint API matches the raw API") {
        SystemSpec s;
        s.family = Family::Gk;
        s.k = 256;
        const DynamicalSystem sys(s);
        Rng rng(2);
        const Vec p = sys.sample_uniform(rng);
        const TorusPoint tp = TorusPoint::from_canonical(p);
        CHECK(torus_gap(sys.eval(tp).coords(), sys.step(p)) == 0.0);
        CHECK((sys.jacobian(tp) - sys.jacobian_at(p)).norm() == 0.0);
        CHECK(torus_gap(sys.inverse_step(sys.eval(tp)).coords(), p) < 1e-12);
    }

    TEST_CASE("M3 branches agree near the gluing sources") {
        const DynamicalSystem sys(relaxed(Family::M3Glued));
        CHECK(sys.gluing_check(500, 4) <= 1e-12);
    }

    TEST_CASE("k must be resolved before building a map") {
        SystemSpec s;
        CHECK_THROWS_AS(DynamicalSystem{s}, std::invalid_argument);
    }
}
