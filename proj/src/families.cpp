#include "families.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "phlab/deformations.hpp"
#include "phlab/maps.hpp"
#include "phlab/torus.hpp"

namespace phlab {

namespace {

int power_for_third_factor(const SystemSpec& spec) {
    return spec.family == Family::M3Glued ? 3 * spec.N : spec.N;
}

SineFlowMap make_circle(const SystemSpec& spec) {
    const int m = circle_harmonics(spec.family);
    return m > 0 ? SineFlowMap(m, spec.flow_strength) : SineFlowMap(1, 0.0);
}

std::array<double, 5> arr5(const Vec& x) { return {x[0], x[1], x[2], x[3], x[4]}; }

}  // namespace

MapFamily::MapFamily(const SystemSpec& spec, int n)
    : spec_(spec),
      n_(n),
      k_(spec.k),
      d0_(spec.delta0),
      bump_(spec.delta0, spec.r_uses_phi_prime),
      a_(anosov_power(spec.N)),
      a2_(anosov_power(2 * spec.N)),
      a3_(anosov_power(power_for_third_factor(spec))),
      circ_(make_circle(spec)),
      frame_(Mat::Zero(n, n)),
      chart_mult_(n, 1.0) {}

void MapFamily::add_torus(const ToralAutomorphism* aut, int offset, int u_index, int s_index) {
    factors_.push_back({aut, nullptr, offset});
    frame_.block(offset, u_index, 2, 1) = aut->e_u();
    frame_.block(offset, s_index, 2, 1) = aut->e_s();
    chart_mult_[u_index] = aut->lambda();
    chart_mult_[s_index] = 1.0 / aut->lambda();
}

void MapFamily::add_circle(int offset, int index) {
    factors_.push_back({nullptr, &circ_, offset});
    frame_(offset, index) = 1.0;
    circle_index_ = index;
    circle_offset_ = offset;
}

Vec MapFamily::chart(const Vec& p) const {
    Vec d(n_);
    for (int i = 0; i < n_; ++i) d[i] = centered(p[i]);
    return frame_.transpose() * d;
}

void MapFamily::base_eval(const Vec& p, Vec& out) const {
    out.resize(n_);
    for (const auto& f : factors_) {
        if (f.aut)
            f.aut->apply(p.data() + f.offset, out.data() + f.offset);
        else
            out[f.offset] = f.circ->eval(p[f.offset]);
    }
}

void MapFamily::apply_bends(const Vec&, Vec& out, int count, const Bend* b) const {
    if (count == 0) return;
    for (int i = 0; i < count; ++i) out += b[i].delta * frame_.col(b[i].chart_index);
    reduce_in_place(out);
}

void MapFamily::eval(const Vec& p, Vec& out) const {
    base_eval(p, out);
    Bend b[2];
    const int count = bends(p, chart(p), b);
    apply_bends(p, out, count, b);
}

void MapFamily::jacobian(const Vec& p, Mat& jac) const {
    jac = Mat::Zero(n_, n_);
    for (const auto& f : factors_) {
        if (f.aut)
            jac.block(f.offset, f.offset, 2, 2) = f.aut->matrix();
        else
            jac(f.offset, f.offset) = f.circ->deriv(p[f.offset]);
    }
    Bend b[2];
    const int count = bends(p, chart(p), b);
    for (int i = 0; i < count; ++i) jac += frame_.col(b[i].chart_index) * (frame_ * b[i].grad).transpose();
}

void MapFamily::chart_jacobian(const Vec& p, Mat& jac) const {
    jac = Mat::Zero(n_, n_);
    for (int i = 0; i < n_; ++i) jac(i, i) = chart_mult_[i];
    if (circle_index_ >= 0) jac(circle_index_, circle_index_) = circ_.deriv(p[circle_offset_]);
    Bend b[2];
    const int count = bends(p, chart(p), b);
    for (int i = 0; i < count; ++i) jac.row(b[i].chart_index) += b[i].grad.transpose();
}

void MapFamily::inverse(const Vec& q, Vec& out) const {
    out.resize(n_);
    for (const auto& f : factors_) {
        if (f.aut)
            f.aut->apply_inverse(q.data() + f.offset, out.data() + f.offset);
        else
            out[f.offset] = f.circ->inverse(q[f.offset]);
    }
    correct_inverse(out);
}

void MapFamily::set_chart(Vec& p, const Vec& x, int r, double y) const {
    p += (y - x[r]) * frame_.col(r);
    reduce_in_place(p);
}

// Chart coordinates x for every factor except those listed, which are drawn uniformly.
Vec MapFamily::from_chart_sample(const Vec& x, const std::vector<int>& uniform_factors, Rng& rng) const {
    Vec p = frame_ * x;
    for (int idx : uniform_factors) {
        const auto& f = factors_[idx];
        const int width = f.aut ? 2 : 1;
        for (int j = 0; j < width; ++j) p[f.offset + j] = rng.uniform();
    }
    reduce_in_place(p);
    return p;
}

void MapFamily::eval_branch(const Vec&, int, Vec&) const {
    throw std::logic_error("eval_branch is only defined for the glued map");
}

double MapFamily::gluing_check(int, std::uint64_t) const {
    throw std::logic_error("gluing_check is only defined for the glued map");
}

namespace {

class LinearBMap final : public MapFamily {
public:
    explicit LinearBMap(const SystemSpec& s) : MapFamily(s, 4) {
        add_torus(&a2_, 0, 0, 3);
        add_torus(&a_, 2, 1, 2);
    }
    Vec sample_support(Rng& rng) const override {
        Vec p(n_);
        for (int i = 0; i < n_; ++i) p[i] = rng.uniform();
        return p;
    }
    double feature_scale() const override { return 1.0; }

protected:
    int bends(const Vec&, const Vec&, Bend*) const override { return 0; }
    void correct_inverse(Vec&) const override {}
};

class FkMap final : public MapFamily {
public:
    explicit FkMap(const SystemSpec& s) : MapFamily(s, 5) {
        add_torus(&a2_, 0, 0, 4);
        add_torus(&a_, 2, 1, 3);
        add_circle(4, 2);
    }
    Vec sample_support(Rng& rng) const override {
        Vec x(5);
        for (int i = 0; i < 5; ++i) x[i] = rng.uniform(-d0_ / 4, d0_ / 4);
        x[1] = rng.uniform(-d0_ / (2 * k_), d0_ / (2 * k_));
        return from_chart_sample(x, {}, rng);
    }
    double feature_scale() const override { return d0_ / (4.0 * k_); }

protected:
    bool in_box(const Vec& x) const { return x.cwiseAbs().maxCoeff() <= d0_; }
    int bends(const Vec&, const Vec& x, Bend* out) const override {
        if (!in_box(x)) return 0;
        const auto inc = Pk_increment(bump_, lambda(), k_, arr5(x));
        out[0].chart_index = 1;
        out[0].delta = inc.value;
        out[0].grad = Eigen::Map<const Eigen::Matrix<double, 5, 1>>(inc.grad.data());
        return 1;
    }
    void correct_inverse(Vec& p) const override {
        const Vec x = chart(p);
        if (!in_box(x)) return;
        const double lam = lambda();
        auto xs = arr5(x);
        auto f = [&](double y) {
            xs[1] = y;
            const auto inc = Pk_increment(bump_, lam, k_, xs);
            return std::make_pair(lam * y + inc.value, lam + inc.grad[1]);
        };
        set_chart(p, x, 1, solve_monotone(f, lam * x[1], -1.5 * d0_, 1.5 * d0_));
    }
};

class GkMap final : public MapFamily {
public:
    explicit GkMap(const SystemSpec& s) : MapFamily(s, 5) {
        add_torus(&a2_, 0, 0, 4);
        add_torus(&a_, 2, 1, 3);
        add_circle(4, 2);
    }
    Vec sample_support(Rng& rng) const override {
        Vec x(5);
        x[0] = x[4] = 0.0;
        x[1] = rng.uniform(-d0_ / (2 * k_), d0_ / (2 * k_));
        x[2] = rng.uniform(-d0_ / 2, d0_ / 2);
        x[3] = rng.uniform(-d0_ / 2, d0_ / 2);
        return from_chart_sample(x, {0}, rng);
    }
    double feature_scale() const override { return d0_ / (4.0 * k_); }

protected:
    bool in_region(const Vec& x) const {
        return std::abs(x[1]) <= d0_ && std::abs(x[2]) <= d0_ && std::abs(x[3]) <= d0_;
    }
    int bends(const Vec&, const Vec& x, Bend* out) const override {
        if (!in_region(x)) return 0;
        const auto inc = Qk_increment(bump_, lambda(), k_, arr5(x));
        out[0].chart_index = 1;
        out[0].delta = inc.value;
        out[0].grad = Eigen::Map<const Eigen::Matrix<double, 5, 1>>(inc.grad.data());
        return 1;
    }
    void correct_inverse(Vec& p) const override {
        const Vec x = chart(p);
        if (!in_region(x)) return;
        const double lam = lambda();
        auto xs = arr5(x);
        auto f = [&](double y) {
            xs[1] = y;
            const auto inc = Qk_increment(bump_, lam, k_, xs);
            return std::make_pair(lam * y + inc.value, lam + inc.grad[1]);
        };
        set_chart(p, x, 1, solve_monotone(f, lam * x[1], -1.5 * d0_, 1.5 * d0_));
    }
};

class DAMap final : public MapFamily {
public:
    explicit DAMap(const SystemSpec& s) : MapFamily(s, 2) { add_torus(&a_, 0, 0, 1); }
    Vec sample_support(Rng& rng) const override {
        Vec x(2);
        x[0] = rng.uniform(-d0_ / (2 * k_), d0_ / (2 * k_));
        x[1] = rng.uniform(-d0_ / 2, d0_ / 2);
        return from_chart_sample(x, {}, rng);
    }
    double feature_scale() const override { return d0_ / (4.0 * k_); }

protected:
    bool in_region(const Vec& x) const { return std::abs(x[0]) <= d0_ && std::abs(x[1]) <= d0_; }
    int bends(const Vec&, const Vec& x, Bend* out) const override {
        if (!in_region(x)) return 0;
        const auto inc = L_increment(bump_, lambda(), k_, x[0], x[1]);
        out[0].chart_index = 0;
        out[0].delta = inc.value;
        out[0].grad = Vec(2);
        out[0].grad << inc.grad[0], inc.grad[1];
        return 1;
    }
    void correct_inverse(Vec& p) const override {
        const Vec x = chart(p);
        if (!in_region(x)) return;
        const double lam = lambda();
        auto f = [&](double y) {
            const auto inc = L_increment(bump_, lam, k_, y, x[1]);
            return std::make_pair(lam * y + inc.value, lam + inc.grad[0]);
        };
        set_chart(p, x, 0, solve_monotone(f, lam * x[0], -1.5 * d0_, 1.5 * d0_));
    }
};

// Shared pieces of the maps built on a DA factor b and an A^2 factor c.
// b sits at chart indices (ib, ib+1) and c at (ib+2, ib+3).
class SinkStackBase : public MapFamily {
protected:
    using MapFamily::MapFamily;

    // phi(s) * (L - lambda u) on the b factor, active when b is in its box and |s| <= delta0.
    bool b_bend(const Vec& x, int ib, double s, int circle_idx, Bend& out) const {
        if (std::abs(x[ib]) > d0_ || std::abs(x[ib + 1]) > d0_ || std::abs(s) > d0_) return false;
        double ps, dps;
        bump_.eval(s, ps, dps);
        const auto inc = L_increment(bump_, lambda(), k_, x[ib], x[ib + 1]);
        out.chart_index = ib;
        out.delta = ps * inc.value;
        out.grad = Vec::Zero(n_);
        out.grad[ib] = ps * inc.grad[0];
        out.grad[ib + 1] = ps * inc.grad[1];
        if (circle_idx >= 0) out.grad[circle_idx] = dps * inc.value;
        return true;
    }

    // scale(s) * R_k on the c factor; scale is phi(2s) with a circle, 1 without.
    bool c_bend(const Vec& x, int ib, double s, int circle_idx, Bend& out) const {
        const std::array<double, 4> xr{x[ib], x[ib + 1], x[ib + 2], x[ib + 3]};
        const auto r = Rk(bump_, a2_.lambda(), k_, xr);
        double ps = 1.0, dps = 0.0;
        if (circle_idx >= 0) bump_.eval(2.0 * s, ps, dps);
        out.chart_index = ib + 2;
        out.delta = ps * r.value;
        out.grad = Vec::Zero(n_);
        for (int j = 0; j < 4; ++j) out.grad[ib + j] = ps * r.grad[j];
        if (circle_idx >= 0) out.grad[circle_idx] = 2.0 * dps * r.value;
        return true;
    }

    void solve_b(Vec& p, int ib, double s) const {
        const Vec x = chart(p);
        if (std::abs(x[ib]) > d0_ || std::abs(x[ib + 1]) > d0_ || std::abs(s) > d0_) return;
        const double lam = lambda();
        const double ps = bump_.phi(s);
        auto f = [&](double y) {
            const auto inc = L_increment(bump_, lam, k_, y, x[ib + 1]);
            return std::make_pair(lam * y + ps * inc.value, lam + ps * inc.grad[0]);
        };
        set_chart(p, x, ib, solve_monotone(f, lam * x[ib], -1.5 * d0_, 1.5 * d0_));
    }

    void solve_c(Vec& p, int ib, double s, bool with_circle, double half) const {
        const Vec x = chart(p);
        const double lam2 = a2_.lambda();
        const double ps = with_circle ? bump_.phi(2.0 * s) : 1.0;
        std::array<double, 4> xr{x[ib], x[ib + 1], x[ib + 2], x[ib + 3]};
        auto f = [&](double y) {
            xr[2] = y;
            const auto r = Rk(bump_, lam2, k_, xr);
            return std::make_pair(lam2 * y + ps * r.value, lam2 + ps * r.grad[2]);
        };
        set_chart(p, x, ib + 2, solve_monotone(f, lam2 * x[ib + 2], -1.5 * half, 1.5 * half));
    }

    bool in_c_box(const Vec& x, int ib, double half) const {
        for (int j = 0; j < 4; ++j)
            if (std::abs(x[ib + j]) > half) return false;
        return true;
    }
};

class HkMap final : public SinkStackBase {
public:
    explicit HkMap(const SystemSpec& s) : SinkStackBase(s, 4) {
        add_torus(&a_, 0, 0, 1);
        add_torus(&a2_, 2, 2, 3);
    }
    Vec sample_support(Rng& rng) const override {
        Vec x = Vec::Zero(4);
        if (rng.uniform() < 0.5) {
            x[0] = rng.uniform(-d0_ / (2 * k_), d0_ / (2 * k_));
            x[1] = rng.uniform(-d0_ / 2, d0_ / 2);
            return from_chart_sample(x, {1}, rng);
        }
        const double h = d0_ / (2.0 * k_ * k_);
        for (int j = 0; j < 4; ++j) x[j] = rng.uniform(-h / 2, h / 2);
        x[2] = rng.uniform(-h, h);
        return from_chart_sample(x, {}, rng);
    }
    double feature_scale() const override { return d0_ / (4.0 * k_ * k_); }

protected:
    double small() const { return d0_ / (4.0 * k_); }
    int bends(const Vec&, const Vec& x, Bend* out) const override {
        int count = 0;
        if (b_bend(x, 0, 0.0, -1, out[count])) ++count;
        if (in_c_box(x, 0, small()) && c_bend(x, 0, 0.0, -1, out[count])) ++count;
        return count;
    }
    void correct_inverse(Vec& p) const override {
        solve_b(p, 0, 0.0);
        if (in_c_box(chart(p), 0, small())) solve_c(p, 0, 0.0, false, small());
    }
};

class AkMap final : public SinkStackBase {
public:
    explicit AkMap(const SystemSpec& s) : SinkStackBase(s, 5) {
        add_torus(&a_, 0, 0, 1);
        add_torus(&a2_, 2, 2, 3);
        add_circle(4, 4);
    }
    Vec sample_support(Rng& rng) const override {
        Vec x = Vec::Zero(5);
        x[4] = rng.uniform(-d0_ / 2, d0_ / 2);
        if (rng.uniform() < 0.5) {
            x[0] = rng.uniform(-d0_ / (2 * k_), d0_ / (2 * k_));
            x[1] = rng.uniform(-d0_ / 2, d0_ / 2);
            return from_chart_sample(x, {1}, rng);
        }
        const double h = d0_ / (2.0 * k_ * k_);
        for (int j = 0; j < 4; ++j) x[j] = rng.uniform(-h / 2, h / 2);
        x[2] = rng.uniform(-h, h);
        x[4] = rng.uniform(-d0_ / 4, d0_ / 4);
        return from_chart_sample(x, {}, rng);
    }
    double feature_scale() const override { return d0_ / (4.0 * k_ * k_); }

protected:
    int bends(const Vec&, const Vec& x, Bend* out) const override {
        const double s = x[4];
        int count = 0;
        if (!b_bend(x, 0, s, 4, out[count])) return 0;
        ++count;
        if (in_c_box(x, 0, d0_) && c_bend(x, 0, s, 4, out[count])) ++count;
        return count;
    }
    void correct_inverse(Vec& p) const override {
        const double s = centered(p[4]);
        solve_b(p, 0, s);
        const Vec x = chart(p);
        if (std::abs(s) <= d0_ && in_c_box(x, 0, d0_)) solve_c(p, 0, s, true, d0_);
    }
};

class M3Map final : public SinkStackBase {
public:
    explicit M3Map(const SystemSpec& s) : SinkStackBase(s, 7) {
        add_torus(&a3_, 0, 0, 1);
        add_torus(&a_, 2, 2, 3);
        add_torus(&a2_, 4, 4, 5);
        add_circle(6, 6);
        o1_ = s.rotation_offsets[0];
        o2_ = s.rotation_offsets[1];
        const auto sinks = circ_.sinks();
        for (double o : s.rotation_offsets) {
            const bool ok = std::any_of(sinks.begin(), sinks.end(),
                                        [o](double q) { return std::abs(centered(o - q)) < 1e-12; });
            if (!ok) throw std::invalid_argument("rotation offsets must be sinks of the circle map");
        }
    }

    Vec sample_support(Rng& rng) const override {
        Vec x = Vec::Zero(7);
        const double pick = rng.uniform();
        double w;
        if (pick < 1.0 / 3.0) {
            x[2] = rng.uniform(-d0_ / (2 * k_), d0_ / (2 * k_));
            x[3] = rng.uniform(-d0_ / 2, d0_ / 2);
            w = o1_ + rng.uniform(-d0_ / 2, d0_ / 2);
            Vec p = from_chart_sample(x, {0, 2}, rng);
            p[6] = wrap01(w);
            return p;
        }
        if (pick < 2.0 / 3.0) {
            const double h = d0_ / (2.0 * k_ * k_);
            for (int j = 2; j < 6; ++j) x[j] = rng.uniform(-h / 2, h / 2);
            x[4] = rng.uniform(-h, h);
            w = o1_ + rng.uniform(-d0_ / 4, d0_ / 4);
            Vec p = from_chart_sample(x, {0}, rng);
            p[6] = wrap01(w);
            return p;
        }
        x[2] = rng.uniform(-d0_ / (2 * k_), d0_ / (2 * k_));
        x[3] = rng.uniform(-d0_ / 2, d0_ / 2);
        w = o2_ + rng.uniform(-d0_ / 2, d0_ / 2);
        Vec p = from_chart_sample(x, {0, 2}, rng);
        p[6] = wrap01(w);
        return p;
    }
    double feature_scale() const override { return d0_ / (4.0 * k_ * k_); }

    void eval_branch(const Vec& p, int branch, Vec& out) const override {
        base_eval(p, out);
        Bend b[2];
        const int count = branch_bends(p, chart(p), branch, b);
        apply_bends(p, out, count, b);
    }

    double gluing_check(int samples, std::uint64_t seed) const override {
        Rng rng(seed, 0x676c7565ULL);
        double worst = 0.0;
        Vec p(7), e1, e2;
        for (int i = 0; i < samples; ++i) {
            const double src = o1_ + (i % 2 == 0 ? 1.0 : -1.0) / 6.0;
            if (rng.uniform() < 0.5) {
                Vec x = Vec::Zero(7);
                for (int j = 2; j < 6; ++j) x[j] = rng.uniform(-d0_, d0_);
                p = from_chart_sample(x, {0}, rng);
            } else {
                for (int j = 0; j < 6; ++j) p[j] = rng.uniform();
            }
            p[6] = wrap01(src + rng.uniform(-0.02, 0.02));
            eval_branch(p, 1, e1);
            eval_branch(p, 2, e2);
            for (int j = 0; j < 7; ++j) worst = std::max(worst, std::abs(centered(e1[j] - e2[j])));
        }
        if (worst > 1e-12) throw GluingMismatch("glued branches disagree near the sources");
        return worst;
    }

protected:
    int branch_of(double w) const { return std::abs(centered(w - o1_)) < 1.0 / 6.0 ? 1 : 2; }

    int branch_bends(const Vec& p, const Vec& x, int branch, Bend* out) const {
        if (branch == 1) {
            const double s = centered(p[6] - o1_);
            if (!b_bend(x, 2, s, 6, out[0])) return 0;
            if (in_c_box(x, 2, d0_) && c_bend(x, 2, s, 6, out[1])) return 2;
            return 1;
        }
        const double s = centered(p[6] - o2_);
        return b_bend(x, 2, s, 6, out[0]) ? 1 : 0;
    }

    int bends(const Vec& p, const Vec& x, Bend* out) const override {
        return branch_bends(p, x, branch_of(p[6]), out);
    }

    void correct_inverse(Vec& p) const override {
        const int branch = branch_of(p[6]);
        const double s = centered(p[6] - (branch == 1 ? o1_ : o2_));
        solve_b(p, 2, s);
        if (branch == 1 && std::abs(s) <= d0_) {
            const Vec x = chart(p);
            if (std::abs(x[2]) <= d0_ && std::abs(x[3]) <= d0_ && in_c_box(x, 2, d0_)) solve_c(p, 2, s, true, d0_);
        }
    }

private:
    double o1_ = 0.0, o2_ = 1.0 / 3.0;
};

}  // namespace

std::unique_ptr<MapFamily> make_family(const SystemSpec& spec) {
    switch (spec.family) {
        case Family::LinearB: return std::make_unique<LinearBMap>(spec);
        case Family::Fk: return std::make_unique<FkMap>(spec);
        case Family::Gk: return std::make_unique<GkMap>(spec);
        case Family::DAgk: return std::make_unique<DAMap>(spec);
        case Family::Hk: return std::make_unique<HkMap>(spec);
        case Family::Ak: return std::make_unique<AkMap>(spec);
        case Family::M3Glued: return std::make_unique<M3Map>(spec);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace phlab
