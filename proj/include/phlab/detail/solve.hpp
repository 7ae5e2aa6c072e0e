#pragma once

#include <utility>

#include <boost/math/tools/roots.hpp>

namespace phlab {

template <class F>
double solve_monotone(F&& f, double target, double lo, double hi) {
    const double flo = f(lo).first - target;
    const double fhi = f(hi).first - target;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) throw RootBracketError("solve_monotone: target not bracketed");
    auto g = [&](double y) {
        const auto [v, d] = f(y);
        return std::make_pair(v - target, d);
    };
    const double guess = lo + (hi - lo) * (-flo / (fhi - flo));
    std::uintmax_t iters = 200;
    return boost::math::tools::newton_raphson_iterate(g, guess, lo, hi, 52, iters);
}

}  // namespace phlab
