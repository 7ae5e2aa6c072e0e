#include "phlab/da.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace phlab {

namespace {

double root(auto f, double lo, double hi) {
    boost::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(f, lo, hi, boost::math::tools::eps_tolerance<double>(52), iters);
    return 0.5 * (r.first + r.second);
}

ConditionResult make(const char* name, double margin, double witness, const char* detail, bool strict = true) {
    ConditionResult c;
    c.name = name;
    c.margin = margin;
    c.witness = witness;
    c.detail = detail;
    c.pass = strict ? margin > 0.0 : margin >= 0.0;
    return c;
}

}  // namespace

double da_dLdu(double lambda, int k, const BumpProfile& bump, double u) {
    double ph, dph;
    bump.eval(k * u, ph, dph);
    return lambda + (0.5 - lambda) * (ph + k * u * dph);
}

DAGeometry da_geometry(double lambda, int k, const BumpProfile& bump) {
    DAGeometry g;
    g.lambda = lambda;
    g.delta0 = bump.delta0();
    g.k = k;
    const double target = (lambda - 1.0) / (lambda - 0.5);
    const double lo = g.delta0 / (4.0 * k), hi = g.delta0 / (2.0 * k);
    g.u0 = root([&](double u) { return bump.phi(k * u) - target; }, lo, hi);
    g.u0_residual = std::abs(bump.phi(k * g.u0) - target);
    g.u1 = root([&](double u) { return da_dLdu(lambda, k, bump, u) - 1.0; }, lo, g.u0);
    g.a = 0.5 * (g.u0 + g.u1);
    g.v_half = g.delta0 / 4.0;
    return g;
}

Vec da_point(const ToralAutomorphism& a, double u, double v) {
    const Eigen::Vector2d p = u * a.e_u() + v * a.e_s();
    Vec out(2);
    out << wrap01(p[0]), wrap01(p[1]);
    return out;
}

bool DAReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

DAReport da_complement_check(const DynamicalSystem& sys, std::size_t samples, std::uint64_t seed, double a_override,
                             std::size_t orbits, std::size_t max_steps) {
    if (sys.spec().family != Family::DAgk) throw std::invalid_argument("da_complement_check: family must be DA_gk");
    const ToralAutomorphism aut = anosov_power(sys.spec().N);
    const double lam = sys.lambda();
    const int k = sys.spec().k;
    const double d0 = sys.spec().delta0;
    DAReport rep;
    rep.geometry = da_geometry(lam, k, sys.bump());
    DAGeometry& g = rep.geometry;
    if (a_override > 0.0) g.a = a_override;

    {
        const double lo = d0 / (4.0 * k), hi = d0 / (2.0 * k);
        const double inside = std::min(g.u0 - lo, hi - g.u0) / (hi - lo);
        rep.checks.push_back(make("saddle-bracket", inside, g.u0, "delta0/(4k) < u0 < delta0/(2k)"));
        rep.checks.push_back(
            make("saddle-root", 1e-10 - g.u0_residual, g.u0_residual, "|phi(k u0) - (lambda-1)/(lambda-1/2)| <= 1e-10", false));
    }
    {
        const Mat j = sys.chart_jacobian_at(Vec::Zero(2));
        Mat expect = Mat::Zero(2, 2);
        expect(0, 0) = 0.5;
        expect(1, 1) = 1.0 / lam;
        const double err = (j - expect).cwiseAbs().maxCoeff();
        rep.checks.push_back(make("sink-jacobian", 1e-12 - err, err, "chart Jacobian at 0 equals diag(1/2, 1/lambda)", false));
    }

    Rng rng(seed);
    {
        // complement of [-a,a] x [-delta0/2, delta0/2] inside the chart box, plus points outside it
        double worst = std::numeric_limits<double>::infinity(), witness = 0.0;
        double outside_err = 0.0;
        const double u_reach = d0 / (2.0 * k);
        for (std::size_t i = 0; i < samples; ++i) {
            double u, v;
            if (i % 4 == 3) {
                u = rng.uniform(-d0, d0);
                v = rng.uniform(-d0, d0);
                if (std::abs(u) <= g.a && std::abs(v) <= d0 / 2.0) v = std::copysign(rng.uniform(d0 / 2.0, d0), v);
            } else {
                // the deformation only acts for |u| < delta0/(2k): concentrate samples there
                u = std::copysign(rng.uniform(g.a, 1.02 * u_reach), rng.uniform() - 0.5);
                v = rng.uniform(-d0, d0);
            }
            const double du = sys.chart_jacobian_at(da_point(aut, u, v))(0, 0);
            if (du - 1.0 < worst) {
                worst = du - 1.0;
                witness = u;
            }
            const double pu = rng.uniform(-0.5, 0.5), pv = rng.uniform(-0.5, 0.5);
            const Eigen::Vector2d q(pu, pv);
            const double cu = aut.e_u().dot(q), cv = aut.e_s().dot(q);
            if (std::max(std::abs(cu), std::abs(cv)) > d0) {
                Vec amb(2);
                amb << wrap01(pu), wrap01(pv);
                outside_err = std::max(outside_err, std::abs(sys.chart_jacobian_at(amb)(0, 0) - lam));
            }
        }
        rep.checks.push_back(make("complement-expansion", worst, witness, "dL/du > 1 off [-a,a] x [-delta0/2, delta0/2]"));
        rep.checks.push_back(make("outside-linear", 1e-9 - outside_err, outside_err, "dL/du = lambda outside the chart box", false));
    }
    {
        // boundary of V-bar: |u| = a or |v| = delta0/4
        double worst = std::numeric_limits<double>::infinity(), witness = 0.0;
        const int per_edge = 2500;
        for (int e = 0; e < 4; ++e)
            for (int i = 0; i <= per_edge; ++i) {
                const double t = -1.0 + 2.0 * i / per_edge;
                double u, v;
                if (e < 2) {
                    u = e == 0 ? g.a : -g.a;
                    v = t * g.v_half;
                } else {
                    u = t * g.a;
                    v = e == 2 ? g.v_half : -g.v_half;
                }
                const Vec x = sys.chart_coords(sys.step(da_point(aut, u, v)));
                const double m = std::min(g.a - std::abs(x[0]), g.v_half - std::abs(x[1])) / std::min(g.a, g.v_half);
                if (m < worst) {
                    worst = m;
                    witness = u;
                }
            }
        rep.checks.push_back(make("trap-box", worst, witness, "g(V-bar) inside V, relative margin"));
    }
    {
        std::size_t converged = 0;
        double worst = 0.0;
        for (std::size_t i = 0; i < orbits; ++i) {
            Vec p = da_point(aut, rng.uniform(-g.a, g.a), rng.uniform(-g.v_half, g.v_half));
            double dist = 1.0;
            for (std::size_t s = 0; s < max_steps && dist >= 1e-8; ++s) {
                p = sys.step(p);
                dist = sys.chart_coords(p).cwiseAbs().maxCoeff();
            }
            if (dist < 1e-8) ++converged;
            worst = std::max(worst, dist);
        }
        ConditionResult c = make("sink-convergence", 1e-8 - worst, worst, "orbits from V reach distance 1e-8 of the sink");
        c.pass = converged == orbits;
        rep.checks.push_back(c);
    }
    return rep;
}

}  // namespace phlab
