#pragma once

#include <cmath>
#include <optional>

#include "phlab/types.hpp"

namespace phlab {

// Representative of x mod 1 in [0,1).
inline double wrap01(double x) {
    const double r = x - std::floor(x);
    return r >= 1.0 ? 0.0 : r;
}

// Representative of x mod 1 in [-1/2, 1/2).
inline double centered(double x) { return x - std::floor(x + 0.5); }

// Fractional part of a*y for an integer a, using the exact product residual.
inline double mul_frac(double a, double y) {
    const double h = a * y;
    const double l = std::fma(a, y, -h);
    return (h - std::floor(h)) + l;
}

class TorusPoint {
public:
    TorusPoint() = default;
    explicit TorusPoint(const Vec& raw);

    // Skips reduction; the caller guarantees coordinates already lie in [0,1).
    static TorusPoint from_canonical(const Vec& coords);
    static TorusPoint zero(int n);

    int dim() const { return static_cast<int>(coords_.size()); }
    const Vec& coords() const { return coords_; }
    double operator[](int i) const { return coords_[i]; }

private:
    Vec coords_;
};

// Representative v of p with every component of v - center in [-1/2, 1/2).
Vec lift_near(const TorusPoint& p, const TorusPoint& center);

double torus_distance(const TorusPoint& p, const TorusPoint& q);

void reduce_in_place(Vec& v);

class EigenChart {
public:
    EigenChart(const Mat& frame, const Vec& eigenvalues, double box_radius, const TorusPoint& center);

    const Mat& frame() const { return frame_; }
    const Vec& eigenvalues() const { return eigenvalues_; }
    double box_radius() const { return box_radius_; }
    const TorusPoint& center() const { return center_; }
    int dim() const { return static_cast<int>(eigenvalues_.size()); }

    // Eigencoordinates without the box test.
    Vec coords(const TorusPoint& p) const;
    // std::nullopt plays the role of Outside.
    std::optional<Vec> to_chart(const TorusPoint& p) const;
    TorusPoint from_chart(const Vec& c) const;

private:
    Mat frame_;
    Vec eigenvalues_;
    double box_radius_;
    TorusPoint center_;
};

}  // namespace phlab
