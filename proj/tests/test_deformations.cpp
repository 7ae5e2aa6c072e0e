#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <array>
#include <cmath>

#include "doctest.h"
#include "phlab/deformations.hpp"
#include "phlab/rng.hpp"
#include "phlab/system_spec.hpp"

using namespace phlab;

TEST_SUITE("deformations") {
    const double lam = lambda_of(4);
    const double d0 = kStrictDelta0;
    const int k = 256;

    TEST_CASE("dP/dx2 and dQ/dx2 stay in [1/2, lambda^2/3] on the box") {
        const BumpProfile b(d0);
        Rng rng(11);
        double lo = 1e300, hi = -1e300;
        for (int i = 0; i < 100000; ++i) {
            std::array<double, 5> x;
            for (double& v : x) v = rng.uniform(-d0, d0);
            // half the draws concentrate where phi(k x2) varies
            if (i % 2) x[1] = rng.uniform(-d0 / (2.0 * k), d0 / (2.0 * k));
            for (const auto& p : {Pk(b, lam, k, x), Qk(b, lam, k, x)}) {
                lo = std::min(lo, p.grad[1]);
                hi = std::max(hi, p.grad[1]);
            }
        }
        CHECK(lo >= 0.5 - 1e-12);
        CHECK(hi <= lam * lam / 3.0 + 1e-12);
        const std::array<double, 5> zero{};
        CHECK(std::abs(Pk(b, lam, k, zero).grad[1] - 0.5) <= 1e-12);
        CHECK(std::abs(Qk(b, lam, k, zero).grad[1] - 0.5) <= 1e-12);
    }

    TEST_CASE("linear outside the narrow band") {
        const BumpProfile b(d0);
        std::array<double, 5> x{1e-6, d0 / (2.0 * k), 2e-6, -3e-6, 1e-6};
        CHECK(Pk(b, lam, k, x).value == doctest::Approx(lam * x[1]).epsilon(1e-15));
        CHECK(Qk(b, lam, k, x).value == doctest::Approx(lam * x[1]).epsilon(1e-15));
        CHECK(Pk_increment(b, lam, k, x).value == 0.0);
        x[1] = -d0 / k;
        CHECK(Qk_increment(b, lam, k, x).value == 0.0);
    }

    TEST_CASE("increments agree with full values") {
        const BumpProfile b(d0);
        Rng rng(5);
        for (int i = 0; i < 1000; ++i) {
            std::array<double, 5> x;
            for (double& v : x) v = rng.uniform(-d0, d0);
            x[1] = rng.uniform(-d0 / k, d0 / k);
            const auto full = Pk(b, lam, k, x), inc = Pk_increment(b, lam, k, x);
            CHECK(std::abs(full.value - (lam * x[1] + inc.value)) < 1e-18);
            CHECK(std::abs(full.grad[1] - (lam + inc.grad[1])) < 1e-9);
        }
    }

    TEST_CASE("DA coordinate") {
        const BumpProfile b(d0);
        const auto at0 = L_da(b, lam, k, 0.0, 0.0);
        CHECK(at0.grad[0] == doctest::Approx(0.5));
        const auto far = L_da(b, lam, k, d0 / (2.0 * k), 0.0);
        CHECK(far.grad[0] == lam);
        CHECK(far.value == doctest::Approx(lam * d0 / (2.0 * k)));
    }

    TEST_CASE("R_k at the origin has slope 3/4") {
        const BumpProfile b(d0);
        const std::array<double, 4> zero{};
        const auto r = Rk(b, lam * lam, 2, zero);
        CHECK(r.grad[2] == doctest::Approx(0.75 - lam * lam));
        const std::array<double, 4> out{0.0, 0.0, d0, 0.0};
        CHECK(Rk(b, lam * lam, 2, out).value == 0.0);
    }
}
