#include "phlab/lyapunov.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace phlab {

QrCocycle::QrCocycle(int n) : q_(Mat::Identity(n, n)), sums_(Vec::Zero(n)) {}

void QrCocycle::push(const Mat& jac) {
    const Mat m = jac * q_;
    const Eigen::HouseholderQR<Mat> qr(m);
    const Mat& r = qr.matrixQR();
    q_ = qr.householderQ();
    for (int i = 0; i < dim(); ++i) {
        const double d = r(i, i);
        if (d < 0.0) q_.col(i) = -q_.col(i);
        sums_[i] += std::log(std::abs(d));
    }
    ++count_;
}

void QrCocycle::reset_sums() {
    sums_.setZero();
    count_ = 0;
}

int LyapunovReport::unstable_index() const {
    return static_cast<int>((exponents.array() > 0.0).count());
}

std::size_t default_transient(std::size_t steps) { return std::max<std::size_t>(1000, steps / 5); }

LyapunovReport lyapunov_spectrum(const DynamicalSystem& sys, const Vec& start, std::size_t steps,
                                 std::size_t transient) {
    if (steps < 2) throw std::invalid_argument("lyapunov_spectrum: need at least two steps");
    const int n = sys.dim();
    LyapunovReport rep;
    rep.start = start;
    rep.steps = steps;
    rep.transient = transient;

    Vec p = start;
    Mat jac(n, n);
    QrCocycle cocycle(n);
    // the frame also settles during the transient
    for (std::size_t i = 0; i < transient; ++i) {
        p = sys.step(p, jac);
        cocycle.push(jac);
    }
    cocycle.reset_sums();

    const std::size_t half = steps / 2;
    Vec first(n);
    double log_det = 0.0;
    for (std::size_t i = 0; i < steps; ++i) {
        if (i == half) first = cocycle.log_sums();
        p = sys.step(p, jac);
        log_det += std::log(std::abs(jac.determinant()));
        cocycle.push(jac);
    }
    rep.end = p;
    rep.mean_log_det = log_det / static_cast<double>(steps);

    const Vec total = cocycle.log_sums() / static_cast<double>(steps);
    const Vec a = first / static_cast<double>(half);
    const Vec b = (cocycle.log_sums() - first) / static_cast<double>(steps - half);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return total[i] > total[j]; });
    rep.exponents.resize(n);
    rep.drift.resize(n);
    rep.resolved = true;
    for (int r = 0; r < n; ++r) {
        const int i = order[r];
        rep.exponents[r] = total[i];
        rep.drift[r] = std::abs(b[i] - a[i]);
        if (rep.drift[r] > kDriftTolerance * std::abs(total[i])) rep.resolved = false;
    }
    return rep;
}

std::vector<LyapunovReport> lyapunov_ensemble(const DynamicalSystem& sys, std::size_t count, std::size_t steps,
                                              std::size_t transient, std::uint64_t seed, Exec exec) {
    return map_indices<LyapunovReport>(count, exec, [&](std::size_t i) {
        Rng rng(seed, i);
        return lyapunov_spectrum(sys, sys.sample_uniform(rng), steps, transient);
    });
}

double beta_constant(double lambda) {
    return (1.0 - std::log(2.0 * lambda) / std::log(3.0 * lambda)) * std::log(lambda);
}

double u0_bound(double lambda) { return std::log(lambda) / std::log(3.0 * lambda); }

double u0_frequency(const DynamicalSystem& sys, const Vec& start, std::size_t steps) {
    if (steps == 0) return 0.0;
    const double d0 = sys.spec().delta0;
    Vec p = start;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < steps; ++i) {
        p = sys.step(p);
        if (sys.chart_coords(p).cwiseAbs().maxCoeff() <= d0) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(steps);
}

}  // namespace phlab
