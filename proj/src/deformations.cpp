#include "phlab/deformations.hpp"

#include <cmath>

namespace phlab {

Partials<5> Pk_increment(const BumpProfile& b, double lambda, int k, const std::array<double, 5>& x) {
    Partials<5> out;
    double pk, dpk;
    b.eval(k * x[1], pk, dpk);
    if (pk == 0.0) return out;
    const double r = std::sqrt(x[0] * x[0] + x[2] * x[2] + x[3] * x[3] + x[4] * x[4]);
    double pr, dpr;
    b.eval(r, pr, dpr);
    if (pr == 0.0) return out;
    const double c = 0.5 - lambda;
    out.value = pk * pr * c * x[1];
    out.grad[1] = pr * c * (pk + k * x[1] * dpk);
    if (r > 0.0 && dpr != 0.0) {
        const double s = pk * c * x[1] * dpr / r;
        out.grad[0] = s * x[0];
        out.grad[2] = s * x[2];
        out.grad[3] = s * x[3];
        out.grad[4] = s * x[4];
    }
    return out;
}

Partials<5> Pk(const BumpProfile& b, double lambda, int k, const std::array<double, 5>& x) {
    auto p = Pk_increment(b, lambda, k, x);
    p.value += lambda * x[1];
    p.grad[1] += lambda;
    return p;
}

Partials<5> Qk_increment(const BumpProfile& b, double lambda, int k, const std::array<double, 5>& x) {
    Partials<5> out;
    double pk, dpk, p3, d3, p4, d4;
    b.eval(k * x[1], pk, dpk);
    if (pk == 0.0) return out;
    b.eval(x[2], p3, d3);
    b.eval(x[3], p4, d4);
    const double c = 0.5 - lambda;
    out.value = pk * p3 * p4 * c * x[1];
    out.grad[1] = p3 * p4 * c * (pk + k * x[1] * dpk);
    out.grad[2] = pk * d3 * p4 * c * x[1];
    out.grad[3] = pk * p3 * d4 * c * x[1];
    return out;
}

Partials<5> Qk(const BumpProfile& b, double lambda, int k, const std::array<double, 5>& x) {
    auto q = Qk_increment(b, lambda, k, x);
    q.value += lambda * x[1];
    q.grad[1] += lambda;
    return q;
}

Partials<2> L_increment(const BumpProfile& b, double lambda, int k, double u, double v) {
    Partials<2> out;
    double pk, dpk, pv, dv;
    b.eval(k * u, pk, dpk);
    if (pk == 0.0) return out;
    b.eval(v, pv, dv);
    const double c = 0.5 - lambda;
    out.value = pk * pv * c * u;
    out.grad[0] = pv * c * (pk + k * u * dpk);
    out.grad[1] = pk * dv * c * u;
    return out;
}

Partials<2> L_da(const BumpProfile& b, double lambda, int k, double u, double v) {
    auto l = L_increment(b, lambda, k, u, v);
    l.value += lambda * u;
    l.grad[0] += lambda;
    return l;
}

Partials<4> Rk(const BumpProfile& b, double lambda_sq, int k, const std::array<double, 4>& x) {
    Partials<4> out;
    const double k2 = static_cast<double>(k) * k;
    double p3, d3;
    b.eval(k2 * x[2], p3, d3);
    if (p3 == 0.0) return out;
    const double rho = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[3] * x[3]);
    double pr, dr;
    b.eval(k2 * rho, pr, dr);
    if (pr == 0.0) return out;
    const double c = 0.75 - lambda_sq;
    out.value = p3 * pr * c * x[2];
    out.grad[2] = pr * c * (p3 + k2 * x[2] * d3);
    if (rho > 0.0 && dr != 0.0) {
        const double s = p3 * c * x[2] * dr * k2 / rho;
        out.grad[0] = s * x[0];
        out.grad[1] = s * x[1];
        out.grad[3] = s * x[3];
    }
    return out;
}

}  // namespace phlab
