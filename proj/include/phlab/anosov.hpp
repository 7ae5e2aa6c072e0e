#pragma once

#include <array>
#include <cstdint>

#include <Eigen/Dense>

namespace phlab {

// Hyperbolic automorphism of T^2 given by a symmetric integer matrix of determinant 1.
class ToralAutomorphism {
public:
    explicit ToralAutomorphism(const std::array<std::int64_t, 4>& m);

    const std::array<std::int64_t, 4>& entries() const { return m_; }
    Eigen::Matrix2d matrix() const;
    std::int64_t trace() const { return m_[0] + m_[3]; }
    double lambda() const { return lambda_; }
    // Unit eigenvectors: e_u for lambda, e_s for 1/lambda, e_u with positive first entry.
    const Eigen::Vector2d& e_u() const { return eu_; }
    const Eigen::Vector2d& e_s() const { return es_; }

    void apply(const double* in, double* out) const;
    void apply_inverse(const double* in, double* out) const;

private:
    std::array<std::int64_t, 4> m_;
    double lambda_;
    Eigen::Vector2d eu_, es_;
};

// [[2,1],[1,1]]^N.
ToralAutomorphism anosov_power(int N);

inline constexpr double kLambda0 = 2.6180339887498948482;  // (3 + sqrt 5) / 2

}  // namespace phlab
