#include "phlab/gate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "phlab/bump.hpp"
#include "phlab/cones.hpp"
#include "phlab/maps.hpp"

namespace phlab {

bool GateReport::pass() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.pass; });
}

std::string GateReport::first_failure() const {
    for (const auto& c : conditions)
        if (!c.pass) return c.name;
    return {};
}

FixedPoints enumerate_fixed_points(const ToralAutomorphism& a) {
    const auto& m = a.entries();
    const long long p = m[0] - 1, q = m[1], s = m[3] - 1;
    const long long det = p * s - q * q;
    if (det == 0) throw std::invalid_argument("enumerate_fixed_points: M - I is singular");
    FixedPoints out;
    out.count = std::llabs(det);

    // z = (M - I) x ranges over the image of [0,1)^2.
    const long long cx[4] = {0, p, q, p + q};
    const long long cy[4] = {0, q, s, q + s};
    const long long x_lo = *std::min_element(cx, cx + 4), x_hi = *std::max_element(cx, cx + 4);
    const long long y_lo = *std::min_element(cy, cy + 4), y_hi = *std::max_element(cy, cy + 4);
    if ((x_hi - x_lo + 1) * (y_hi - y_lo + 1) > 50'000'000LL)
        throw std::invalid_argument("enumerate_fixed_points: matrix too large to enumerate");

    auto in_unit = [det](long long num) { return det > 0 ? (num >= 0 && num < det) : (num <= 0 && num > det); };
    for (long long z1 = x_lo; z1 <= x_hi; ++z1)
        for (long long z2 = y_lo; z2 <= y_hi; ++z2) {
            const long long nx = s * z1 - q * z2;
            const long long ny = -q * z1 + p * z2;
            if (in_unit(nx) && in_unit(ny))
                out.points.push_back({static_cast<double>(nx) / det, static_cast<double>(ny) / det});
        }
    return out;
}

GateReport check_H(int N, double delta0, double C) {
    GateReport rep;
    const ToralAutomorphism a = anosov_power(N);
    const double lam = a.lambda();
    rep.lambda = lam;
    rep.C = C;
    rep.delta0 = delta0;

    {
        const FixedPoints fp = enumerate_fixed_points(a);
        rep.fixed_point_count = fp.count;
        ConditionResult c;
        c.name = "H1";
        c.detail = "fixed point of A outside the chart box";
        c.margin = -delta0;
        for (const auto& pt : fp.points) {
            const Eigen::Vector2d v(centered(pt[0]), centered(pt[1]));
            const double box = std::max(std::abs(a.e_u().dot(v)), std::abs(a.e_s().dot(v)));
            if (box - delta0 > c.margin) {
                c.margin = box - delta0;
                rep.fixed_point = pt;
            }
        }
        c.witness = static_cast<double>(fp.count);
        c.pass = c.margin > 0.0 && static_cast<long long>(fp.points.size()) == fp.count;
        rep.conditions.push_back(c);
    }
    {
        ConditionResult c;
        c.name = "H2";
        c.detail = "lambda >= 6";
        c.margin = lam - 6.0;
        c.witness = lam;
        c.pass = c.margin >= 0.0;
        rep.conditions.push_back(c);
    }
    {
        ConditionResult c;
        c.name = "H3";
        c.detail = "lambda^2 >= 3(C+1)lambda - 3C/2";
        c.margin = lam * lam - (3.0 * (C + 1.0) * lam - 1.5 * C);
        c.witness = C;
        c.pass = c.margin >= 0.0;
        rep.conditions.push_back(c);
    }
    {
        ConditionResult c;
        c.name = "H4";
        c.detail = "log(lambda)/log(3 lambda) > (2 delta0)^2";
        const double ratio = std::log(lam) / std::log(3.0 * lam);
        c.margin = ratio - 4.0 * delta0 * delta0;
        c.witness = ratio;
        c.pass = c.margin > 0.0;
        rep.conditions.push_back(c);
    }
    return rep;
}

GateReport check_H(int N, double delta0, bool r_uses_phi_prime) {
    return check_H(N, delta0, BumpProfile(delta0, r_uses_phi_prime).compute_C());
}

KSelection select_k(const SystemSpec& draft, std::size_t samples, double kappa_max, int k_limit) {
    if (draft.family != Family::Fk && draft.family != Family::Gk)
        throw std::invalid_argument("select_k is defined for F_k and G_k");
    const double lam = lambda_of(draft.N);
    const double gap = lam * lam - lam * lam / 3.0;
    KSelection sel;
    for (int k = 1; k <= k_limit; k *= 2) {
        SystemSpec s = draft;
        s.k = k;
        s.perturbation = {};
        const DynamicalSystem sys(s);
        KStep st;
        st.k = k;
        st.eps_cone = 1e-3 * gap;
        st.offdiag = offdiag_sup(sys, samples, kGateSeed);
        st.pass_offdiag = st.offdiag < st.eps_cone;
        if (st.pass_offdiag) {
            const ConeReport cr = cone_invariance(sys, 0.5, samples, kGateSeed, kappa_max);
            for (const auto& f : cr.families) st.worst_kappa = std::max(st.worst_kappa, f.worst_kappa);
            st.pass_cone = cr.pass;
        }
        sel.trace.push_back(st);
        if (st.pass_offdiag && st.pass_cone) {
            sel.k = k;
            sel.pass = true;
            return sel;
        }
        if (k > k_limit / 2) break;
    }
    return sel;
}

Certification certify(const SystemSpec& draft) {
    Certification out;
    GateReport& rep = out.report;
    SystemSpec spec;
    try {
        spec = with_defaults(draft);
        validate(spec);
    } catch (const std::invalid_argument& e) {
        ConditionResult c;
        c.name = "spec";
        c.detail = e.what();
        c.margin = -1.0;
        rep.conditions.push_back(c);
        return out;
    }

    const BumpProfile bump(spec.delta0, spec.r_uses_phi_prime);
    rep = check_H(spec.N, spec.delta0, bump.compute_C());
    rep.flow_strength = spec.flow_strength;

    const int m = circle_harmonics(spec.family);
    if (m > 0) {
        const SineFlowMap circ(m, spec.flow_strength);
        // relaxed delta0 exceeds the width on which any sine flow keeps the source bound
        const double nbhd = spec.mode == Mode::Relaxed ? std::min(spec.delta0, kStrictDelta0) : spec.delta0;
        const auto cc = check_circle_conditions(circ, rep.lambda, nbhd);
        rep.conditions.insert(rep.conditions.end(), cc.conditions.begin(), cc.conditions.end());
    }

    if (!rep.pass()) return out;

    if (spec.k == 0) {
        switch (spec.family) {
            case Family::LinearB: spec.k = 1; break;
            case Family::Fk:
            case Family::Gk:
            case Family::DAgk: {
                SystemSpec d = spec;
                if (d.family == Family::DAgk) {
                    d.family = Family::Gk;
                    d.flow_strength = 0.0;
                    d = with_defaults(d);
                }
                const KSelection sel = select_k(d);
                rep.k_trace = sel.trace;
                ConditionResult c;
                c.name = "k-selection";
                c.detail = "off-diagonal sup below eps_cone and cone check at eps = 1/2";
                c.pass = sel.pass;
                c.margin = sel.trace.empty() ? -1.0 : 0.9 - sel.trace.back().worst_kappa;
                c.witness = sel.k;
                rep.conditions.push_back(c);
                if (!sel.pass) return out;
                spec.k = sel.k;
                break;
            }
            case Family::Hk:
            case Family::Ak:
            case Family::M3Glued:
                // smallest k whose R_k support fits inside the small box
                spec.k = 2;
                break;
        }
    }
    rep.k = spec.k;

    if (spec.family == Family::M3Glued) {
        ConditionResult c;
        c.name = "gluing";
        c.detail = "branches agree to 1e-12 near the gluing sources";
        try {
            const double diff = DynamicalSystem(spec).gluing_check(4000, kGateSeed);
            c.margin = 1e-12 - diff;
            c.pass = true;
        } catch (const GluingMismatch& e) {
            c.margin = -1.0;
            c.pass = false;
        }
        rep.conditions.push_back(c);
    }

    if (rep.pass()) {
        spec.certified = true;
        out.spec = spec;
    }
    return out;
}

}  // namespace phlab
