#include "phlab/anosov.hpp"

#include <cmath>
#include <stdexcept>

#include "phlab/torus.hpp"

namespace phlab {

ToralAutomorphism::ToralAutomorphism(const std::array<std::int64_t, 4>& m) : m_(m) {
    if (m[1] != m[2]) throw std::invalid_argument("ToralAutomorphism: matrix must be symmetric");
    if (m[0] * m[3] - m[1] * m[2] != 1) throw std::invalid_argument("ToralAutomorphism: determinant must be 1");
    const double t = static_cast<double>(trace());
    if (!(t > 2.0)) throw std::invalid_argument("ToralAutomorphism: matrix is not hyperbolic");
    lambda_ = 0.5 * (t + std::sqrt((t - 2.0) * (t + 2.0)));

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(matrix());
    eu_ = es.eigenvectors().col(1);
    if (eu_[0] < 0.0) eu_ = -eu_;
    es_ = Eigen::Vector2d(-eu_[1], eu_[0]);
}

Eigen::Matrix2d ToralAutomorphism::matrix() const {
    Eigen::Matrix2d a;
    a << static_cast<double>(m_[0]), static_cast<double>(m_[1]), static_cast<double>(m_[2]),
        static_cast<double>(m_[3]);
    return a;
}

void ToralAutomorphism::apply(const double* in, double* out) const {
    const double a = static_cast<double>(m_[0]), b = static_cast<double>(m_[1]);
    const double c = static_cast<double>(m_[2]), d = static_cast<double>(m_[3]);
    const double x = in[0], y = in[1];
    out[0] = wrap01(mul_frac(a, x) + mul_frac(b, y));
    out[1] = wrap01(mul_frac(c, x) + mul_frac(d, y));
}

void ToralAutomorphism::apply_inverse(const double* in, double* out) const {
    const double a = static_cast<double>(m_[0]), b = static_cast<double>(m_[1]);
    const double c = static_cast<double>(m_[2]), d = static_cast<double>(m_[3]);
    const double x = in[0], y = in[1];
    out[0] = wrap01(mul_frac(d, x) - mul_frac(b, y));
    out[1] = wrap01(mul_frac(a, y) - mul_frac(c, x));
}

ToralAutomorphism anosov_power(int N) {
    if (N < 1 || N > 36) throw std::invalid_argument("anosov_power: N must lie in [1, 36]");
    std::array<std::int64_t, 4> m{1, 0, 0, 1};
    for (int i = 0; i < N; ++i)
        m = {2 * m[0] + m[1], m[0] + m[1], 2 * m[2] + m[3], m[2] + m[3]};
    return ToralAutomorphism(m);
}

}  // namespace phlab
