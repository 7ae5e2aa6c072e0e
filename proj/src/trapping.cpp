#include "phlab/trapping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "phlab/da.hpp"

namespace phlab {

namespace {

// Signed inward distance of a circle coordinate to the union of arcs.
double arc_depth(const std::vector<Arc>& arcs, double w) {
    if (arcs.empty()) return std::numeric_limits<double>::infinity();
    double best = -std::numeric_limits<double>::infinity();
    for (const Arc& a : arcs) {
        const double mid = 0.5 * (a.lo + a.hi);
        const double off = centered(w - mid);
        best = std::max(best, 0.5 * (a.hi - a.lo) - std::abs(off));
    }
    return best;
}

struct FiberChart {
    Eigen::Vector2d eu, es;
};

double box_depth(const TrapRegion& r, const FiberChart& fc, const Vec& p) {
    if (!r.fiber_box) return std::numeric_limits<double>::infinity();
    const Eigen::Vector2d z(centered(p[r.fiber_offset]), centered(p[r.fiber_offset + 1]));
    const double u = fc.eu.dot(z), v = fc.es.dot(z);
    return std::min(r.box_u - std::abs(u), r.box_v - std::abs(v));
}

}  // namespace

TrapReport trapping_check(const DynamicalSystem& sys, const StepFn& map, const TrapRegion& region,
                          std::size_t samples, std::uint64_t seed, double required) {
    const int ci = sys.circle_offset();
    if (ci < 0) throw std::invalid_argument("trapping_check: system has no circle factor");
    const ToralAutomorphism aut = anosov_power(sys.spec().N);
    const FiberChart fc{aut.e_u(), aut.e_s()};

    TrapReport rep;
    rep.name = region.name;
    rep.required = required;
    rep.samples = samples;
    rep.margin = std::numeric_limits<double>::infinity();
    if (region.arcs.empty() && !region.fiber_box) {
        // whole space
        rep.pass = true;
        return rep;
    }

    Rng rng(seed);
    const int faces = static_cast<int>(region.arcs.size()) * 2 + (region.fiber_box ? 4 : 0);
    for (std::size_t i = 0; i < samples; ++i) {
        Vec p = sys.sample_uniform(rng);
        const bool interior = i % 4 == 3;
        const int face = static_cast<int>(rng.bits() % static_cast<std::uint64_t>(faces));
        double u = 0.0, v = 0.0, w;
        if (region.fiber_box) {
            u = rng.uniform(-region.box_u, region.box_u);
            v = rng.uniform(-region.box_v, region.box_v);
        }
        if (region.arcs.empty()) {
            w = p[ci];
        } else {
            const Arc& a = region.arcs[static_cast<std::size_t>(rng.bits() % region.arcs.size())];
            w = rng.uniform(a.lo, a.hi);
        }
        if (!interior) {
            const int arc_faces = static_cast<int>(region.arcs.size()) * 2;
            if (face < arc_faces) {
                const Arc& a = region.arcs[static_cast<std::size_t>(face / 2)];
                w = face % 2 == 0 ? a.lo : a.hi;
            } else {
                const int f = face - arc_faces;
                if (f < 2)
                    u = f == 0 ? region.box_u : -region.box_u;
                else
                    v = f == 2 ? region.box_v : -region.box_v;
            }
        }
        p[ci] = wrap01(w);
        if (region.fiber_box) {
            const Vec z = da_point(aut, u, v);
            p[region.fiber_offset] = z[0];
            p[region.fiber_offset + 1] = z[1];
        }
        const Vec q = map(p);
        const double depth = std::min(arc_depth(region.arcs, q[ci]), box_depth(region, fc, q));
        if (depth < rep.margin) {
            rep.margin = depth;
            rep.witness = p;
        }
    }
    rep.pass = rep.margin > 0.0 && rep.margin >= required;
    return rep;
}

TrapReport trapping_check(const DynamicalSystem& sys, const TrapRegion& region, std::size_t samples,
                          std::uint64_t seed, double required) {
    return trapping_check(sys, [&](const Vec& p) { return sys.step(p); }, region, samples, seed, required);
}

TrapReport slab_check(const DynamicalSystem& sys, double eta, double theta, std::size_t samples, std::uint64_t seed) {
    TrapRegion slab{"slab", {{-eta, eta}}};
    return trapping_check(sys, slab, samples, seed, 0.5 * (1.0 - theta) * eta);
}

std::vector<TrapRegion> filtration_regions(const DynamicalSystem& sys) {
    if (sys.spec().family != Family::Gk) throw std::invalid_argument("filtration_regions: family must be G_k");
    const double q = sys.spec().delta0 / 4.0;
    const DAGeometry g = da_geometry(sys.lambda(), sys.spec().k, sys.bump());
    std::vector<TrapRegion> out;
    TrapRegion n1{"N1", {{-q, q}}, true, 2, g.a, g.v_half};
    out.push_back(n1);
    out.push_back({"N2", {{-q, q}}});
    out.push_back({"N3", {{-q, q}, {0.5 - q, 0.5 + q}}});
    out.push_back({"N4", {{-q, 0.5 + q}}});
    out.push_back({"N5", {}});
    return out;
}

std::vector<TrapReport> filtration_check(const DynamicalSystem& sys, std::size_t samples, std::uint64_t seed) {
    std::vector<TrapReport> out;
    for (const TrapRegion& r : filtration_regions(sys)) out.push_back(trapping_check(sys, r, samples, seed));
    return out;
}

double middle_displacement(const SineFlowMap& circle, double eta, std::size_t grid) {
    double zeta = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= grid; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(grid);
        for (double p : {eta + t * (0.5 - 2.0 * eta), 0.5 + eta + t * (0.5 - 2.0 * eta)}) {
            zeta = std::min(zeta, std::abs(centered(circle.eval(p) - p)));
            zeta = std::min(zeta, std::abs(centered(circle.inverse(p) - p)));
        }
    }
    return zeta;
}

EscapeReport escape_time(const DynamicalSystem& sys, const Vec& start, double eta, bool reverse,
                         std::size_t persistence) {
    const int ci = sys.circle_offset();
    if (ci < 0 || sys.circle() == nullptr) throw std::invalid_argument("escape_time: system has no circle factor");
    EscapeReport rep;
    const double zeta = middle_displacement(*sys.circle(), eta, 20000);
    rep.bound = static_cast<std::size_t>(std::ceil(2.0 / zeta)) + 1;
    const double target = reverse ? 0.5 : 0.0;
    auto inside = [&](const Vec& p) { return std::abs(centered(p[ci] - target)) < eta; };
    Vec p = start;
    while (!inside(p) && rep.steps <= rep.bound) {
        p = reverse ? sys.inverse_at(p) : sys.step(p);
        ++rep.steps;
    }
    rep.resolved = inside(p);
    if (rep.resolved && !reverse)
        for (std::size_t i = 0; i < persistence && rep.stayed; ++i) {
            p = sys.step(p);
            rep.stayed = inside(p);
        }
    return rep;
}

}  // namespace phlab
