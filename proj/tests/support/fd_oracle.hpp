#pragma once

#include <algorithm>

#include "phlab/maps.hpp"

namespace phlab::testing {

// Central differences with two Richardson refinements (steps h, h/2, h/4).
inline Mat fd_jacobian(const DynamicalSystem& sys, const Vec& p, double h) {
    const int n = sys.dim();
    auto diff = [&](int j, double s) {
        Vec a = p, b = p;
        a[j] += s;
        b[j] -= s;
        reduce_in_place(a);
        reduce_in_place(b);
        const Vec fa = sys.step(a), fb = sys.step(b);
        Vec d(n);
        for (int i = 0; i < n; ++i) d[i] = centered(fa[i] - fb[i]) / (2.0 * s);
        return d;
    };
    Mat out(n, n);
    for (int j = 0; j < n; ++j) {
        const Vec d1 = diff(j, h), d2 = diff(j, h / 2.0), d3 = diff(j, h / 4.0);
        const Vec r1 = (4.0 * d2 - d1) / 3.0, r2 = (4.0 * d3 - d2) / 3.0;
        out.col(j) = (16.0 * r2 - r1) / 15.0;
    }
    return out;
}

inline double fd_step(const DynamicalSystem& sys) { return std::min(1e-7, 1e-2 * sys.feature_scale()); }

// Frobenius relative error of the analytic Jacobian against the oracle.
inline double fd_relative_error(const DynamicalSystem& sys, const Vec& p) {
    const Mat j = sys.jacobian_at(p);
    return (j - fd_jacobian(sys, p, fd_step(sys))).norm() / j.norm();
}

inline double torus_gap(const Vec& a, const Vec& b) {
    double e = 0.0;
    for (int i = 0; i < a.size(); ++i) e = std::max(e, std::abs(centered(a[i] - b[i])));
    return e;
}

}  // namespace phlab::testing
