#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "phlab/basin.hpp"

using namespace phlab;

namespace {

SystemSpec relaxed(Family f) {
    SystemSpec s;
    s.family = f;
    s.mode = Mode::Relaxed;
    s.delta0 = kRelaxedDelta0;
    s.k = f == Family::M3Glued ? 2 : 256;
    return with_defaults(s);
}

BasinReport fake(OmegaLabel l, double x, int index) {
    BasinReport r;
    r.label = l;
    r.birkhoff = Eigen::VectorXd::Constant(4, x);
    r.unstable_index = index;
    return r;
}

}  // namespace

TEST_SUITE("basin") {
    TEST_CASE("labels by proximity") {
        const DynamicalSystem sys(relaxed(Family::Gk));
        Vec p = Vec::Zero(5);
        p[0] = 0.3;
        p[1] = 0.6;
        CHECK(omega_label(sys, p, 0.005) == OmegaLabel::Lambda1);
        p[4] = 0.5;
        p[2] = 0.2;
        CHECK(omega_label(sys, p, 0.005) == OmegaLabel::Lambda3);
        p[4] = 0.25;
        double d = 0.0;
        CHECK(omega_label(sys, p, 0.005, &d) == OmegaLabel::Unresolved);
        CHECK(d == doctest::Approx(0.25));
    }

    TEST_CASE("resolution radius") {
        SystemSpec s;
        CHECK(resolution_radius(s) == doctest::Approx(10 * kStrictDelta0));
        s.mode = Mode::Relaxed;
        s.delta0 = 0.02;
        CHECK(resolution_radius(s) == doctest::Approx(0.005));
    }

    TEST_CASE("F_k has a single attractor of index 2") {
        const DynamicalSystem sys(relaxed(Family::Fk));
        BasinOptions opt;
        opt.window = 3000;
        const auto reps = basin_classify(sys, 40, 1, opt);
        for (const auto& r : reps) {
            CHECK(r.label == OmegaLabel::Attractor);
            CHECK(r.unstable_index == 2);
        }
        const ClusterResult c = empirical_measure_clusters(reps);
        CHECK(c.clusters.size() == 1);
        CHECK(c.clusters[0].modal_index == 2);
    }

    TEST_CASE("M3 starts reach the three sinks with indices 1, 2, 3") {
        const DynamicalSystem sys(relaxed(Family::M3Glued));
        BasinOptions opt;
        opt.window = 3000;
        const auto reps = basin_classify(sys, 60, 2, opt);
        for (const auto& r : reps) {
            CHECK(r.label != OmegaLabel::Unresolved);
            if (r.label == OmegaLabel::Sink1) CHECK(r.unstable_index == 1);
            if (r.label == OmegaLabel::Sink2) CHECK(r.unstable_index == 2);
            if (r.label == OmegaLabel::Sink3) CHECK(r.unstable_index == 3);
        }
        const BasinSummary s = summarize(reps, Family::M3Glued);
        CHECK(s.fractions.size() == 4);
        CHECK_FALSE(s.unresolved_flag);
    }

    TEST_CASE("same seed gives identical reports, serial or parallel") {
        const DynamicalSystem sys(relaxed(Family::M3Glued));
        BasinOptions a;
        a.window = 2000;
        a.exec = Exec::Serial;
        BasinOptions b = a;
        b.exec = Exec::Parallel;
        const auto x = basin_classify(sys, 8, 5, a);
        const auto y = basin_classify(sys, 8, 5, b);
        for (std::size_t i = 0; i < x.size(); ++i) {
            CHECK(x[i].label == y[i].label);
            CHECK(x[i].capture_steps == y[i].capture_steps);
            CHECK((x[i].birkhoff - y[i].birkhoff).cwiseAbs().maxCoeff() == 0.0);
        }
    }

    TEST_CASE("single linkage clustering") {
        std::vector<BasinReport> reps;
        for (int i = 0; i < 10; ++i) reps.push_back(fake(OmegaLabel::Lambda1, 0.01 * i, 1));  // chains below the cutoff
        for (int i = 0; i < 6; ++i) reps.push_back(fake(OmegaLabel::Lambda3, 0.9 + 0.001 * i, 2));
        reps.push_back(fake(OmegaLabel::Unresolved, 0.5, 0));
        ClusterResult c = empirical_measure_clusters(reps);
        CHECK(c.used == 16);
        REQUIRE(c.clusters.size() == 2);
        CHECK(c.clusters[0].size == 10);
        CHECK(c.clusters[0].modal_index == 1);
        CHECK(c.clusters[1].modal_label == OmegaLabel::Lambda3);
        CHECK_FALSE(c.degenerate);
        reps.push_back(fake(OmegaLabel::Lambda3, 0.5, 2));
        c = empirical_measure_clusters(reps);
        CHECK(c.clusters.size() == 3);
        CHECK(c.degenerate);
    }

    TEST_CASE("fractions and confidence half-widths") {
        std::vector<BasinReport> reps;
        for (int i = 0; i < 100; ++i) reps.push_back(fake(i < 40 ? OmegaLabel::Lambda1 : OmegaLabel::Lambda3, 0.0, 1));
        const BasinSummary s = summarize(reps, Family::Gk);
        CHECK(s.fractions[0].fraction == doctest::Approx(0.4));
        CHECK(s.fractions[0].half_width == doctest::Approx(1.96 * std::sqrt(0.4 * 0.6 / 100.0)));
        CHECK(s.unresolved_fraction == 0.0);
    }

    TEST_CASE("families without targets") {
        SystemSpec s;
        s.family = Family::DAgk;
        s.k = 256;
        CHECK_THROWS_AS(basin_classify(DynamicalSystem(s), 1, 1), std::invalid_argument);
    }
}
