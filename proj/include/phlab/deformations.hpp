#pragma once

#include <array>

#include "phlab/bump.hpp"

namespace phlab {

template <int n>
struct Partials {
    double value = 0.0;
    std::array<double, n> grad{};
};

// P_k(x) = phi(k x2) phi(r) (1/2 - lambda) x2 + lambda x2, r = |(x1, x3, x4, x5)|.
// Indices are 0-based, so x2 is x[1].
Partials<5> Pk(const BumpProfile& b, double lambda, int k, const std::array<double, 5>& x);

// Q_k(x) = phi(k x2) phi(x3) phi(x4) (1/2 - lambda) x2 + lambda x2.
Partials<5> Qk(const BumpProfile& b, double lambda, int k, const std::array<double, 5>& x);

// L(u, v) = lambda u + phi(k u) phi(v) (1/2 - lambda) u.
Partials<2> L_da(const BumpProfile& b, double lambda, int k, double u, double v);

// R_k(x) = phi(k^2 x3) phi(k^2 |(x1, x2, x4)|) (3/4 - lambda^2) x3, lambda^2 passed directly.
Partials<4> Rk(const BumpProfile& b, double lambda_sq, int k, const std::array<double, 4>& x);

// Increments over the linear part; used by the maps to avoid cancellation.
Partials<5> Pk_increment(const BumpProfile& b, double lambda, int k, const std::array<double, 5>& x);
Partials<5> Qk_increment(const BumpProfile& b, double lambda, int k, const std::array<double, 5>& x);
Partials<2> L_increment(const BumpProfile& b, double lambda, int k, double u, double v);

}  // namespace phlab
