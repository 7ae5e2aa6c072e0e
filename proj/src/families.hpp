#pragma once

#include <array>
#include <memory>
#include <vector>

#include "phlab/anosov.hpp"
#include "phlab/bump.hpp"
#include "phlab/circle_map.hpp"
#include "phlab/rng.hpp"
#include "phlab/system_spec.hpp"
#include "phlab/types.hpp"

namespace phlab {

// A deformation of one chart coordinate: the image coordinate gains delta,
// whose chart-coordinate gradient is grad.
struct Bend {
    int chart_index = 0;
    double delta = 0.0;
    Vec grad;
};

struct Factor {
    const ToralAutomorphism* aut = nullptr;  // a T^2 factor when set
    const SineFlowMap* circ = nullptr;       // a circle factor when set
    int offset = 0;
};

// Product of toral automorphisms and one circle map, plus local bends in chart coordinates.
class MapFamily {
public:
    MapFamily(const SystemSpec& spec, int n);
    virtual ~MapFamily() = default;

    int dim() const { return n_; }
    double lambda() const { return a_.lambda(); }
    const BumpProfile& bump() const { return bump_; }
    const SineFlowMap* circle() const { return circle_index_ >= 0 ? &circ_ : nullptr; }
    int circle_index() const { return circle_index_; }
    int circle_offset() const { return circle_offset_; }
    const Mat& frame() const { return frame_; }

    Vec chart(const Vec& p) const;
    void eval(const Vec& p, Vec& out) const;
    void jacobian(const Vec& p, Mat& jac) const;
    void chart_jacobian(const Vec& p, Mat& jac) const;
    void inverse(const Vec& q, Vec& out) const;

    virtual Vec sample_support(Rng& rng) const = 0;
    virtual double feature_scale() const = 0;
    virtual void eval_branch(const Vec& p, int branch, Vec& out) const;
    virtual double gluing_check(int samples, std::uint64_t seed) const;

protected:
    // Appends the bends active at p (chart coordinates x) and returns their count.
    virtual int bends(const Vec& p, const Vec& x, Bend* out) const = 0;
    // Given the product-map preimage p, moves the bent coordinates to the true preimage.
    virtual void correct_inverse(Vec& p) const = 0;

    void add_torus(const ToralAutomorphism* aut, int offset, int u_index, int s_index);
    void add_circle(int offset, int index);
    void base_eval(const Vec& p, Vec& out) const;
    void apply_bends(const Vec& p, Vec& out, int count, const Bend* b) const;
    // Replaces chart coordinate r of p by y (ambient update along frame column r).
    void set_chart(Vec& p, const Vec& x, int r, double y) const;
    Vec from_chart_sample(const Vec& x, const std::vector<int>& uniform_factors, Rng& rng) const;

    SystemSpec spec_;
    int n_;
    int k_;
    double d0_;
    BumpProfile bump_;
    ToralAutomorphism a_, a2_, a3_;
    SineFlowMap circ_;
    int circle_index_ = -1;
    int circle_offset_ = -1;
    std::vector<Factor> factors_;
    Mat frame_;
    std::vector<double> chart_mult_;  // linear multiplier per chart index (circle: unused)
};

std::unique_ptr<MapFamily> make_family(const SystemSpec& spec);

}  // namespace phlab
