#include "phlab/perturbation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "phlab/rng.hpp"

namespace phlab {

TrigField::TrigField(int n, std::uint64_t seed, int modes) : n_(n) {
    if (n < 1 || n > kMaxDim) throw std::invalid_argument("TrigField: bad dimension");
    Rng rng(seed, 0x7072747262ULL);
    const double two_pi = 2.0 * std::numbers::pi;
    double c1 = 0.0;
    for (int j = 0; j < modes; ++j) {
        Mode m;
        m.freq = Vec::Zero(n);
        while (m.freq.cwiseAbs().sum() == 0.0) {
            m.freq.setZero();
            const int degree = rng.integer(1, 3);
            for (int d = 0; d < degree; ++d) m.freq[rng.integer(0, n - 1)] += rng.integer(0, 1) ? 1.0 : -1.0;
        }
        m.dir = Vec(n);
        for (int i = 0; i < n; ++i) m.dir[i] = rng.uniform(-1.0, 1.0);
        m.dir.normalize();
        m.amp = rng.uniform(0.5, 1.0);
        m.phase = rng.uniform(0.0, two_pi);
        c1 += m.amp * (1.0 + two_pi * m.freq.norm());
        modes_.push_back(m);
    }
    for (auto& m : modes_) m.amp /= c1;
}

Vec TrigField::value(const Vec& x) const {
    Vec v = Vec::Zero(n_);
    const double two_pi = 2.0 * std::numbers::pi;
    for (const auto& m : modes_) {
        double arg = m.phase;
        for (int i = 0; i < n_; ++i)
            if (m.freq[i] != 0.0) arg += two_pi * m.freq[i] * x[i];
        const double s = m.amp * std::sin(arg);
        for (int i = 0; i < n_; ++i) v[i] += s * m.dir[i];
    }
    return v;
}

Mat TrigField::derivative(const Vec& x) const {
    Mat d = Mat::Zero(n_, n_);
    const double two_pi = 2.0 * std::numbers::pi;
    for (const auto& m : modes_)
        d += (m.amp * two_pi * std::cos(two_pi * m.freq.dot(x) + m.phase)) * m.dir * m.freq.transpose();
    return d;
}

double TrigField::sup_bound() const {
    double s = 0.0;
    for (const auto& m : modes_) s += m.amp;
    return s;
}

}  // namespace phlab
