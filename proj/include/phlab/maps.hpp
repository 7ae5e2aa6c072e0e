#pragma once

#include <memory>
#include <optional>
#include <stdexcept>

#include "phlab/anosov.hpp"
#include "phlab/bump.hpp"
#include "phlab/circle_map.hpp"
#include "phlab/perturbation.hpp"
#include "phlab/rng.hpp"
#include "phlab/system_spec.hpp"
#include "phlab/torus.hpp"

namespace phlab {

struct GluingMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RootBracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class MapFamily;

// A fully built map of one family, optionally composed with a small perturbation.
// Ambient coordinates are the factor coordinates in the order
//   LinearB: y(A^2) z(A);  F_k, G_k: y(A^2) z(A) w;  DA_gk: b(A);
//   H_k: b(A) c(A^2);  A_k: b(A) c(A^2) w;  M3Glued: a(A^3) b(A) c(A^2) w.
// Chart coordinates are frame()^T applied to the centred lift at 0.
class DynamicalSystem {
public:
    explicit DynamicalSystem(const SystemSpec& spec);
    ~DynamicalSystem();
    DynamicalSystem(const DynamicalSystem&);
    DynamicalSystem& operator=(const DynamicalSystem&);

    const SystemSpec& spec() const { return spec_; }
    int dim() const;
    double lambda() const;
    const BumpProfile& bump() const;
    const SineFlowMap* circle() const;
    // Chart index and ambient index of the circle coordinate, -1 without a circle.
    int circle_index() const;
    int circle_offset() const;
    const Mat& frame() const;
    const TrigField* perturbation() const { return field_.get(); }

    TorusPoint eval(const TorusPoint& p) const;
    Mat jacobian(const TorusPoint& p) const;
    Mat chart_jacobian(const TorusPoint& p) const;
    TorusPoint inverse_step(const TorusPoint& q) const;

    // Raw forms on canonical coordinate vectors.
    Vec step(const Vec& p) const;
    Vec step(const Vec& p, Mat& jac) const;
    Mat jacobian_at(const Vec& p) const;
    Mat chart_jacobian_at(const Vec& p) const;
    Vec inverse_at(const Vec& q) const;
    Vec chart_coords(const Vec& p) const;

    // Same map without the perturbation.
    Vec base_step(const Vec& p) const;

    Vec sample_uniform(Rng& rng) const;
    // Point inside a region where the map differs from the product map.
    Vec sample_support(Rng& rng) const;
    // Smallest length scale of the deformation, used to size difference steps.
    double feature_scale() const;

    // M3Glued only: one branch of the glued map evaluated on the whole circle.
    Vec eval_branch(const Vec& p, int branch) const;
    // M3Glued only: compares the two branches near the gluing sources.
    double gluing_check(int samples, std::uint64_t seed = 1) const;

private:
    SystemSpec spec_;
    std::shared_ptr<const MapFamily> family_;
    std::shared_ptr<const TrigField> field_;
};

// Monotone root of f(y) = target on [lo, hi]; f returns (value, derivative).
template <class F>
double solve_monotone(F&& f, double target, double lo, double hi);

}  // namespace phlab

#include "phlab/detail/solve.hpp"
