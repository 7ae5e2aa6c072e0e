#include "phlab/torus.hpp"

#include <stdexcept>

namespace phlab {

TorusPoint::TorusPoint(const Vec& raw) : coords_(raw) { reduce_in_place(coords_); }

TorusPoint TorusPoint::from_canonical(const Vec& coords) {
    TorusPoint p;
    p.coords_ = coords;
    return p;
}

TorusPoint TorusPoint::zero(int n) { return from_canonical(Vec::Zero(n)); }

void reduce_in_place(Vec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = wrap01(v[i]);
}

Vec lift_near(const TorusPoint& p, const TorusPoint& center) {
    if (p.dim() != center.dim()) throw std::invalid_argument("lift_near: dimension mismatch");
    Vec v(p.dim());
    for (int i = 0; i < p.dim(); ++i) v[i] = center[i] + centered(p[i] - center[i]);
    return v;
}

double torus_distance(const TorusPoint& p, const TorusPoint& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("torus_distance: dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < p.dim(); ++i) {
        const double d = centered(p[i] - q[i]);
        s += d * d;
    }
    return std::sqrt(s);
}

EigenChart::EigenChart(const Mat& frame, const Vec& eigenvalues, double box_radius,
                       const TorusPoint& center)
    : frame_(frame), eigenvalues_(eigenvalues), box_radius_(box_radius), center_(center) {
    const auto n = eigenvalues.size();
    if (frame.rows() != n || frame.cols() != n || center.dim() != n)
        throw std::invalid_argument("EigenChart: inconsistent dimensions");
    const Mat gram = frame.transpose() * frame;
    if ((gram - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("EigenChart: frame is not orthogonal");
    for (Eigen::Index i = 1; i < n; ++i)
        if (!(std::abs(eigenvalues[i - 1]) > std::abs(eigenvalues[i])))
            throw std::invalid_argument("EigenChart: eigenvalues not strictly decreasing in modulus");
    if (!(box_radius > 0.0 && box_radius < 0.25))
        throw std::invalid_argument("EigenChart: box radius must lie in (0, 1/4)");
}

Vec EigenChart::coords(const TorusPoint& p) const {
    Vec d(p.dim());
    for (int i = 0; i < p.dim(); ++i) d[i] = centered(p[i] - center_[i]);
    return frame_.transpose() * d;
}

std::optional<Vec> EigenChart::to_chart(const TorusPoint& p) const {
    Vec c = coords(p);
    if (c.cwiseAbs().maxCoeff() > box_radius_) return std::nullopt;
    return c;
}

TorusPoint EigenChart::from_chart(const Vec& c) const {
    return TorusPoint(center_.coords() + frame_ * c);
}

}  // namespace phlab
