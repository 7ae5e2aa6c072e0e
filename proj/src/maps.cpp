#include "phlab/maps.hpp"

#include "families.hpp"

namespace phlab {

DynamicalSystem::DynamicalSystem(const SystemSpec& spec) : spec_(with_defaults(spec)) {
    validate(spec_);
    if (spec_.k < 1) throw std::invalid_argument("DynamicalSystem: k must be resolved (>= 1)");
    family_ = make_family(spec_);
    if (spec_.perturbation.eps > 0.0)
        field_ = std::make_shared<TrigField>(family_->dim(), spec_.perturbation.seed);
}

DynamicalSystem::~DynamicalSystem() = default;
DynamicalSystem::DynamicalSystem(const DynamicalSystem&) = default;
DynamicalSystem& DynamicalSystem::operator=(const DynamicalSystem&) = default;

int DynamicalSystem::dim() const { return family_->dim(); }
double DynamicalSystem::lambda() const { return family_->lambda(); }
const BumpProfile& DynamicalSystem::bump() const { return family_->bump(); }
const SineFlowMap* DynamicalSystem::circle() const { return family_->circle(); }
int DynamicalSystem::circle_index() const { return family_->circle_index(); }
int DynamicalSystem::circle_offset() const { return family_->circle_offset(); }
const Mat& DynamicalSystem::frame() const { return family_->frame(); }

Vec DynamicalSystem::base_step(const Vec& p) const {
    Vec out;
    family_->eval(p, out);
    return out;
}

Vec DynamicalSystem::step(const Vec& p) const {
    Vec out;
    family_->eval(p, out);
    if (field_) {
        out += spec_.perturbation.eps * field_->value(out);
        reduce_in_place(out);
    }
    return out;
}

Vec DynamicalSystem::step(const Vec& p, Mat& jac) const {
    family_->jacobian(p, jac);
    Vec out;
    family_->eval(p, out);
    if (field_) {
        const int n = dim();
        jac = (Mat::Identity(n, n) + spec_.perturbation.eps * field_->derivative(out)) * jac;
        out += spec_.perturbation.eps * field_->value(out);
        reduce_in_place(out);
    }
    return out;
}

Mat DynamicalSystem::jacobian_at(const Vec& p) const {
    Mat jac;
    step(p, jac);
    return jac;
}

Mat DynamicalSystem::chart_jacobian_at(const Vec& p) const {
    if (!field_) {
        Mat jac;
        family_->chart_jacobian(p, jac);
        return jac;
    }
    const Mat& f = frame();
    return f.transpose() * jacobian_at(p) * f;
}

Vec DynamicalSystem::inverse_at(const Vec& q) const {
    Vec z = q;
    if (field_) {
        const double eps = spec_.perturbation.eps;
        for (int it = 0; it < 100; ++it) {
            const Vec next = q - eps * field_->value(z);
            const double change = (next - z).cwiseAbs().maxCoeff();
            z = next;
            if (change < 1e-17) break;
        }
        reduce_in_place(z);
    }
    Vec out;
    family_->inverse(z, out);
    return out;
}

Vec DynamicalSystem::chart_coords(const Vec& p) const { return family_->chart(p); }

TorusPoint DynamicalSystem::eval(const TorusPoint& p) const { return TorusPoint::from_canonical(step(p.coords())); }
Mat DynamicalSystem::jacobian(const TorusPoint& p) const { return jacobian_at(p.coords()); }
Mat DynamicalSystem::chart_jacobian(const TorusPoint& p) const { return chart_jacobian_at(p.coords()); }
TorusPoint DynamicalSystem::inverse_step(const TorusPoint& q) const {
    return TorusPoint::from_canonical(inverse_at(q.coords()));
}

Vec DynamicalSystem::sample_uniform(Rng& rng) const {
    Vec p(dim());
    for (int i = 0; i < dim(); ++i) p[i] = rng.uniform();
    return p;
}

Vec DynamicalSystem::sample_support(Rng& rng) const { return family_->sample_support(rng); }
double DynamicalSystem::feature_scale() const { return family_->feature_scale(); }

Vec DynamicalSystem::eval_branch(const Vec& p, int branch) const {
    Vec out;
    family_->eval_branch(p, branch, out);
    return out;
}

double DynamicalSystem::gluing_check(int samples, std::uint64_t seed) const {
    return family_->gluing_check(samples, seed);
}

}  // namespace phlab
