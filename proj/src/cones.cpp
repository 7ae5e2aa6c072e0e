#include "phlab/cones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace phlab {

std::vector<ConeFamily> cone_families(Family family) {
    switch (family) {
        case Family::Fk:
        case Family::Gk:
            return {{"unstable", false, {0}, {1}}, {"center", true, {2}, {1}}, {"stable", true, {3, 4}, {1, 2}}};
        case Family::LinearB:
            return {{"unstable", false, {0}, {1}}, {"stable", true, {2, 3}, {1}}};
        default:
            throw std::invalid_argument("cone families are defined for LinearB, F_k and G_k");
    }
}

namespace {

double norm2(const Mat& m) {
    if (m.size() == 1) return std::abs(m(0, 0));
    return Eigen::JacobiSVD<Mat>(m).singularValues()(0);
}

}  // namespace

double cone_kappa(const Mat& d, const ConeFamily& cone, double eps) {
    const double inf = std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(d.rows());
    std::vector<int> s = cone.E;
    s.insert(s.end(), cone.F.begin(), cone.F.end());
    const double scale = d.cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i) {
        if (std::find(s.begin(), s.end(), i) != s.end()) continue;
        for (int j : s)
            if (std::abs(d(i, j)) > 1e-12 * scale) return inf;
    }
    const int ne = static_cast<int>(cone.E.size());
    const int nf = static_cast<int>(cone.F.size());
    Mat a = d(s, s);
    Mat t = cone.inverse ? Mat(a.inverse()) : a;
    const Mat tee = t.topLeftCorner(ne, ne);
    const Mat tef = t.topRightCorner(ne, nf);
    const Mat tfe = t.bottomLeftCorner(nf, ne);
    const Mat tff = t.bottomRightCorner(nf, nf);
    if (tef.cwiseAbs().maxCoeff() > 1e-12 * t.cwiseAbs().maxCoeff()) return inf;
    const Mat tee_inv = tee.inverse();
    const double bound = norm2(tfe * tee_inv) + eps * norm2(tff) * norm2(tee_inv);
    return bound / eps;
}

Vec cone_sample(const DynamicalSystem& sys, std::uint64_t seed, std::size_t index) {
    Rng rng(seed, index);
    return rng.uniform() < 0.75 ? sys.sample_support(rng) : sys.sample_uniform(rng);
}

namespace {

constexpr std::size_t kChunk = 4096;

std::size_t chunk_count(std::size_t samples) { return (samples + kChunk - 1) / kChunk; }

}  // namespace

ConeReport cone_invariance(const DynamicalSystem& sys, double eps, std::size_t samples, std::uint64_t seed,
                           double kappa_max, Exec exec) {
    if (sys.perturbation()) throw std::invalid_argument("cone_invariance needs an unperturbed map");
    const auto fams = cone_families(sys.spec().family);
    struct Local {
        std::vector<double> worst;
        std::vector<Vec> at;
    };
    const auto chunks = map_indices<Local>(chunk_count(samples), exec, [&](std::size_t c) {
        Local loc{std::vector<double>(fams.size(), -1.0), std::vector<Vec>(fams.size())};
        const std::size_t end = std::min(samples, (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) {
            const Vec p = cone_sample(sys, seed, i);
            const Mat d = sys.chart_jacobian_at(p);
            for (std::size_t f = 0; f < fams.size(); ++f) {
                const double kap = cone_kappa(d, fams[f], eps);
                if (kap > loc.worst[f]) {
                    loc.worst[f] = kap;
                    loc.at[f] = p;
                }
            }
        }
        return loc;
    });
    ConeReport rep;
    rep.eps = eps;
    rep.kappa_max = kappa_max;
    rep.samples = samples;
    rep.pass = true;
    for (std::size_t f = 0; f < fams.size(); ++f) {
        ConeFamilyResult r;
        r.name = fams[f].name;
        r.worst_kappa = -1.0;
        for (const auto& loc : chunks)
            if (loc.worst[f] > r.worst_kappa) {
                r.worst_kappa = loc.worst[f];
                r.witness = loc.at[f];
            }
        r.pass = r.worst_kappa <= kappa_max;
        rep.pass = rep.pass && r.pass;
        rep.families.push_back(r);
    }
    return rep;
}

ChainReport dominated_chain(const DynamicalSystem& sys, std::size_t samples, std::uint64_t seed, Exec exec) {
    struct Local {
        double worst = std::numeric_limits<double>::infinity();
        Vec at, diag;
    };
    const auto chunks = map_indices<Local>(chunk_count(samples), exec, [&](std::size_t c) {
        Local loc;
        const std::size_t end = std::min(samples, (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) {
            const Vec p = cone_sample(sys, seed, i);
            const Vec dg = sys.chart_jacobian_at(p).diagonal();
            double m = std::numeric_limits<double>::infinity();
            for (int j = 0; j + 1 < dg.size(); ++j) m = std::min(m, 1.0 - dg[j + 1] / dg[j]);
            if (m < loc.worst) {
                loc.worst = m;
                loc.at = p;
                loc.diag = dg;
            }
        }
        return loc;
    });
    ChainReport rep;
    rep.samples = samples;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (const auto& loc : chunks)
        if (loc.worst < rep.worst_margin) {
            rep.worst_margin = loc.worst;
            rep.witness = loc.at;
            rep.witness_diagonal = loc.diag;
        }
    rep.pass = rep.worst_margin > 0.0;
    return rep;
}

double offdiag_sup(const DynamicalSystem& sys, std::size_t samples, std::uint64_t seed, Exec exec) {
    const int row = 1;
    const auto chunks = map_indices<double>(chunk_count(samples), exec, [&](std::size_t c) {
        double worst = 0.0;
        const std::size_t end = std::min(samples, (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) {
            Rng rng(seed, i);
            const Mat d = sys.chart_jacobian_at(sys.sample_support(rng));
            for (int j = 0; j < d.cols(); ++j)
                if (j != row) worst = std::max(worst, std::abs(d(row, j)));
        }
        return worst;
    });
    return *std::max_element(chunks.begin(), chunks.end());
}

}  // namespace phlab
