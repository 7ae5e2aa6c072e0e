#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "phlab/da.hpp"
#include "phlab/lyapunov.hpp"

using namespace phlab;

TEST_SUITE("lyapunov") {
    const double lam = lambda_of(4);

    TEST_CASE("LinearB exponents are the log eigenvalues") {
        SystemSpec s;
        s.family = Family::LinearB;
        s.k = 1;
        const DynamicalSystem sys(s);
        Rng rng(1);
        const LyapunovReport r = lyapunov_spectrum(sys, sys.sample_uniform(rng), 1000, 1000);
        const double l = std::log(lam);
        CHECK(std::abs(r.exponents[0] - 2 * l) < 1e-10);
        CHECK(std::abs(r.exponents[1] - l) < 1e-10);
        CHECK(std::abs(r.exponents[2] + l) < 1e-10);
        CHECK(std::abs(r.exponents[3] + 2 * l) < 1e-10);
        CHECK(r.resolved);
        CHECK(r.unstable_index() == 2);
    }

    TEST_CASE("DA sink linearisation") {
        SystemSpec s;
        s.family = Family::DAgk;
        s.k = 256;
        const DynamicalSystem sys(s);
        const DAGeometry g = da_geometry(lam, 256, sys.bump());
        const Vec start = da_point(anosov_power(4), 0.5 * g.a, 0.1 * g.v_half);
        const LyapunovReport r = lyapunov_spectrum(sys, start, 5000, 1000);
        CHECK(std::abs(r.exponents[0] - std::log(0.5)) < 1e-6);
        CHECK(std::abs(r.exponents[1] + std::log(lam)) < 1e-6);
    }

    TEST_CASE("F_k ensemble signs and sum consistency") {
        SystemSpec s;
        s.k = 256;
        const DynamicalSystem sys(s);
        const auto reps = lyapunov_ensemble(sys, 10, 2000, 1000, 9);
        for (const auto& r : reps) {
            CHECK(r.resolved);
            CHECK(r.exponents[0] > 0.0);
            CHECK(r.exponents[1] > beta_constant(lam));
            CHECK(r.exponents[2] < -0.1);
            CHECK(r.sum_mismatch() < 1e-3);
            CHECK(r.unstable_index() == 2);
        }
    }

    TEST_CASE("serial and parallel ensembles are identical") {
        SystemSpec s;
        s.family = Family::Gk;
        s.k = 256;
        const DynamicalSystem sys(s);
        const auto a = lyapunov_ensemble(sys, 6, 1000, 100, 3, Exec::Serial);
        const auto b = lyapunov_ensemble(sys, 6, 1000, 100, 3, Exec::Parallel);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK((a[i].exponents - b[i].exponents).cwiseAbs().maxCoeff() == 0.0);
    }

    TEST_CASE("beta and the U0 bound") {
        CHECK(beta_constant(lam) == doctest::Approx(0.3155).epsilon(1e-3));
        CHECK(beta_constant(lam) > 0.0);
        CHECK(beta_constant(lam) < std::log(lam));
        CHECK(beta_constant(1.5) > 0.0);
        CHECK(u0_bound(lam) == doctest::Approx(0.777).epsilon(1e-3));
    }

    TEST_CASE("U0 frequency stays below the bound") {
        for (Mode m : {Mode::Strict, Mode::Relaxed}) {
            SystemSpec s;
            s.k = 256;
            s.mode = m;
            s.delta0 = m == Mode::Strict ? kStrictDelta0 : kRelaxedDelta0;
            const DynamicalSystem sys(s);
            Rng rng(4);
            const double f = u0_frequency(sys, sys.sample_uniform(rng), 100000);
            CHECK(f <= u0_bound(lam));
            if (m == Mode::Strict) CHECK(f < 1e-3);
        }
    }

    TEST_CASE("default transient") {
        CHECK(default_transient(1000) == 1000);
        CHECK(default_transient(100000) == 20000);
    }
}
