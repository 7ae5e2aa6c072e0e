#include "phlab/bump.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phlab {

BumpProfile::BumpProfile(double delta0, bool r_uses_phi_prime)
    : delta0_(delta0), quarter_(delta0 / 4.0), r_uses_phi_prime_(r_uses_phi_prime) {
    if (!(delta0 > 0.0)) throw std::invalid_argument("BumpProfile: delta0 must be positive");
}

void BumpProfile::eval(double x, double& value, double& derivative) const {
    const double a = std::abs(x);
    if (a <= quarter_) {
        value = 1.0;
        derivative = 0.0;
        return;
    }
    if (a >= 2.0 * quarter_) {
        value = 0.0;
        derivative = 0.0;
        return;
    }
    const double t = (a - quarter_) / quarter_;
    const double z = 1.0 / (1.0 - t) - 1.0 / t;
    double phi, one_minus;
    if (z < 0.0) {
        const double e = std::exp(z);
        phi = 1.0 / (1.0 + e);
        one_minus = e / (1.0 + e);
    } else {
        const double e = std::exp(-z);
        phi = e / (1.0 + e);
        one_minus = 1.0 / (1.0 + e);
    }
    const double dz = 1.0 / ((1.0 - t) * (1.0 - t)) + 1.0 / (t * t);
    const double d = -phi * one_minus * dz / quarter_;
    value = phi;
    derivative = x < 0.0 ? -d : d;
}

double BumpProfile::phi(double x) const {
    double v, d;
    eval(x, v, d);
    return v;
}

double BumpProfile::phi_prime(double x) const {
    double v, d;
    eval(x, v, d);
    return d;
}

double BumpProfile::H(double x, double y) const {
    double py, dy;
    eval(y, py, dy);
    return phi(x) * (py + y * dy);
}

double BumpProfile::R_printed(double x, double y, double z) const {
    const double pz = phi(z);
    return phi(x) * phi(y) * (pz + z * pz);
}

double BumpProfile::R_phi_prime(double x, double y, double z) const {
    double pz, dz;
    eval(z, pz, dz);
    return phi(x) * phi(y) * (pz + z * dz);
}

double BumpProfile::R(double x, double y, double z) const {
    return r_uses_phi_prime_ ? R_phi_prime(x, y, z) : R_printed(x, y, z);
}

BumpBounds BumpProfile::bounds(BoundGrid grid) const {
    const double half = 2.0 * quarter_;
    auto node = [half](int i, int n) { return -half + 2.0 * half * static_cast<double>(i) / (n - 1); };
    BumpBounds b{0.0, 0.0, 0.0, 0.0};
    for (int i = 0; i < grid.h_per_axis; ++i) {
        const double x = node(i, grid.h_per_axis);
        b.c1 = std::max(b.c1, std::abs(x * phi_prime(x)));
        for (int j = 0; j < grid.h_per_axis; ++j)
            b.sup_h = std::max(b.sup_h, std::abs(H(x, node(j, grid.h_per_axis))));
    }
    for (int i = 0; i < grid.r_per_axis; ++i) {
        const double x = node(i, grid.r_per_axis);
        for (int j = 0; j < grid.r_per_axis; ++j) {
            const double y = node(j, grid.r_per_axis);
            for (int l = 0; l < grid.r_per_axis; ++l) {
                const double z = node(l, grid.r_per_axis);
                b.sup_r = std::max({b.sup_r, std::abs(R_printed(x, y, z)), std::abs(R_phi_prime(x, y, z))});
            }
        }
    }
    b.C = 1.1 * std::max({1.0, b.sup_h, b.sup_r});
    return b;
}

}  // namespace phlab
