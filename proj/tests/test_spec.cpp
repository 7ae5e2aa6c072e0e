#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "phlab/system_spec.hpp"

using namespace phlab;

TEST_SUITE("spec") {
    TEST_CASE("names round trip") {
        for (Family f : {Family::LinearB, Family::Fk, Family::Gk, Family::DAgk, Family::Hk, Family::Ak, Family::M3Glued})
            CHECK(parse_family(to_string(f)) == f);
        CHECK(parse_mode("relaxed") == Mode::Relaxed);
        CHECK_THROWS_AS(parse_family("Z_k"), std::invalid_argument);
        CHECK_THROWS_AS(parse_mode("loose"), std::invalid_argument);
    }

    TEST_CASE("dimensions and harmonics") {
        CHECK(dimension(Family::LinearB) == 4);
        CHECK(dimension(Family::Fk) == 5);
        CHECK(dimension(Family::DAgk) == 2);
        CHECK(dimension(Family::Hk) == 4);
        CHECK(dimension(Family::Ak) == 5);
        CHECK(dimension(Family::M3Glued) == 7);
        CHECK(circle_harmonics(Family::Fk) == 1);
        CHECK(circle_harmonics(Family::Gk) == 2);
        CHECK(circle_harmonics(Family::M3Glued) == 3);
        CHECK(circle_harmonics(Family::DAgk) == 0);
    }

    TEST_CASE("defaults fill flow strength and offsets") {
        SystemSpec s;
        s.family = Family::M3Glued;
        const SystemSpec d = with_defaults(s);
        CHECK(d.flow_strength > 0.0);
        REQUIRE(d.rotation_offsets.size() == 3);
        CHECK(d.rotation_offsets[1] == doctest::Approx(1.0 / 3.0));
        CHECK_NOTHROW(validate(d));
    }

    TEST_CASE("validation") {
        SystemSpec s;
        s.delta0 = 1e-4;
        CHECK_THROWS_AS(validate(with_defaults(s)), std::invalid_argument);
        s.mode = Mode::Relaxed;
        CHECK_NOTHROW(validate(with_defaults(s)));
        s.delta0 = 0.05;
        CHECK_THROWS_AS(validate(with_defaults(s)), std::invalid_argument);
        s = SystemSpec{};
        s.perturbation.eps = 2e-3;
        CHECK_THROWS_AS(validate(with_defaults(s)), std::invalid_argument);
        s = SystemSpec{};
        s.family = Family::Hk;
        s.k = 1;
        CHECK_THROWS_AS(validate(with_defaults(s)), std::invalid_argument);
    }

    TEST_CASE("describe lists every field") {
        SystemSpec s;
        s.k = 256;
        const std::string d = describe(with_defaults(s));
        for (const char* key : {"family = F_k", "N = 4", "k = 256", "delta0 = ", "mode = strict", "flow_strength = ",
                                "perturbation_eps = ", "certified = false"})
            CHECK(d.find(key) != std::string::npos);
    }
}
