#include "phlab/basin.hpp"

#include <algorithm>
#include <boost/pending/disjoint_sets.hpp>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace phlab {

std::string to_string(OmegaLabel l) {
    switch (l) {
        case OmegaLabel::Lambda1: return "Lambda1";
        case OmegaLabel::Lambda3: return "Lambda3";
        case OmegaLabel::Attractor: return "A_f";
        case OmegaLabel::Repeller: return "R_f";
        case OmegaLabel::Sink1: return "Sink1";
        case OmegaLabel::Sink2: return "Sink2";
        case OmegaLabel::Sink3: return "Sink3";
        case OmegaLabel::Unresolved: return "Unresolved";
    }
    return "Unresolved";
}

double resolution_radius(const SystemSpec& spec) {
    return spec.mode == Mode::Strict ? 10.0 * spec.delta0 : spec.delta0 / 4.0;
}

std::vector<OmegaLabel> family_labels(Family f) {
    switch (f) {
        case Family::Fk: return {OmegaLabel::Attractor, OmegaLabel::Repeller};
        case Family::Gk: return {OmegaLabel::Lambda1, OmegaLabel::Lambda3};
        case Family::M3Glued: return {OmegaLabel::Sink1, OmegaLabel::Sink2, OmegaLabel::Sink3};
        default: return {};
    }
}

namespace {

double dist0(const Vec& p, int from, int count) {
    double d = 0.0;
    for (int i = from; i < from + count; ++i) d = std::max(d, std::abs(centered(p[i])));
    return d;
}

double circ(double w, double target) { return std::abs(centered(w - target)); }

}  // namespace

OmegaLabel omega_label(const DynamicalSystem& sys, const Vec& p, double radius, double* distance) {
    const SystemSpec& s = sys.spec();
    const int ci = sys.circle_offset();
    double best = std::numeric_limits<double>::infinity();
    OmegaLabel label = OmegaLabel::Unresolved;
    auto consider = [&](OmegaLabel l, double d) {
        if (d < best) {
            best = d;
            label = l;
        }
    };
    switch (s.family) {
        case Family::Fk:
            consider(OmegaLabel::Attractor, circ(p[ci], 0.0));
            consider(OmegaLabel::Repeller, circ(p[ci], 0.5));
            break;
        case Family::Gk:
            consider(OmegaLabel::Lambda1, std::max(dist0(p, 2, 2), circ(p[ci], 0.0)));
            consider(OmegaLabel::Lambda3, circ(p[ci], 0.5));
            break;
        case Family::M3Glued: {
            const auto& o = s.rotation_offsets;
            consider(OmegaLabel::Sink1, std::max({circ(p[ci], o[0]), dist0(p, 2, 2), dist0(p, 4, 2)}));
            consider(OmegaLabel::Sink2, std::max(circ(p[ci], o[1]), dist0(p, 2, 2)));
            consider(OmegaLabel::Sink3, circ(p[ci], o[2]));
            break;
        }
        default: throw std::invalid_argument("omega_label: family has no basin targets");
    }
    if (distance) *distance = best;
    return best < radius ? label : OmegaLabel::Unresolved;
}

BasinReport classify_start(const DynamicalSystem& sys, const Vec& start, std::size_t index, const BasinOptions& opt) {
    const int n = sys.dim();
    const double radius = resolution_radius(sys.spec());
    BasinReport rep;
    rep.index = index;
    rep.start = start;

    Vec p = start;
    for (std::size_t i = 0; i < opt.transient; ++i) p = sys.step(p);
    std::size_t used = opt.transient;

    Mat jac(n, n);
    Eigen::VectorXd sums(2 * n);
    // advances `count` steps; false as soon as a checkpoint leaves the label
    auto hold = [&](OmegaLabel label, std::size_t count, bool measure, QrCocycle* cocycle) {
        for (std::size_t i = 0; i < count; ++i) {
            if (measure) {
                p = sys.step(p, jac);
                cocycle->push(jac);
                for (int j = 0; j < n; ++j) {
                    const double t = 2.0 * std::numbers::pi * p[j];
                    sums[2 * j] += std::cos(t);
                    sums[2 * j + 1] += std::sin(t);
                }
            } else {
                p = sys.step(p);
            }
            ++used;
            if (label != OmegaLabel::Unresolved && (i + 1) % opt.check_every == 0 && omega_label(sys, p, radius) != label) return false;
        }
        return omega_label(sys, p, radius, &rep.distance) == label;
    };

    OmegaLabel found = OmegaLabel::Unresolved;
    while (used < opt.budget) {
        found = omega_label(sys, p, radius);
        if (found == OmegaLabel::Unresolved) {
            for (std::size_t i = 0; i < opt.check_every; ++i) p = sys.step(p);
            used += opt.check_every;
            continue;
        }
        if (hold(found, opt.settle, false, nullptr)) break;
        found = OmegaLabel::Unresolved;
    }
    rep.capture_steps = used;

    // measurement window; an unresolved orbit still gets its window data
    for (;;) {
        QrCocycle cocycle(n);
        sums.setZero();
        const bool kept = hold(found, opt.window, true, &cocycle);
        const double w = static_cast<double>(opt.window);
        rep.birkhoff = sums / w;
        Vec chi = cocycle.log_sums() / w;
        std::sort(chi.data(), chi.data() + n, std::greater<>());
        rep.exponents = chi;
        rep.unstable_index = static_cast<int>((chi.array() > 0.0).count());
        if (found == OmegaLabel::Unresolved) {
            omega_label(sys, p, radius, &rep.distance);
            break;
        }
        if (kept) {
            rep.label = found;
            break;
        }
        // left the target during the window: search again within the budget
        found = OmegaLabel::Unresolved;
        while (used < opt.budget) {
            found = omega_label(sys, p, radius);
            if (found != OmegaLabel::Unresolved && hold(found, opt.settle, false, nullptr)) break;
            found = OmegaLabel::Unresolved;
            for (std::size_t i = 0; i < opt.check_every; ++i) p = sys.step(p);
            used += opt.check_every;
        }
        rep.capture_steps = used;
    }
    // exponents near zero would make the index ambiguous
    rep.exponents_resolved = (rep.exponents.array().abs() > 1e-3).all();
    return rep;
}

std::vector<BasinReport> basin_classify(const DynamicalSystem& sys, std::size_t ensemble, std::uint64_t seed,
                                        const BasinOptions& opt) {
    if (family_labels(sys.spec().family).empty())
        throw std::invalid_argument("basin_classify: family must be F_k, G_k or M3Glued");
    return map_indices<BasinReport>(ensemble, opt.exec, [&](std::size_t i) {
        Rng rng(seed, i);
        return classify_start(sys, sys.sample_uniform(rng), i, opt);
    });
}

BasinSummary summarize(const std::vector<BasinReport>& reports, Family family) {
    BasinSummary s;
    s.total = reports.size();
    auto labels = family_labels(family);
    labels.push_back(OmegaLabel::Unresolved);
    const double n = static_cast<double>(std::max<std::size_t>(1, s.total));
    for (OmegaLabel l : labels) {
        LabelFraction f;
        f.label = l;
        f.count = static_cast<std::size_t>(
            std::count_if(reports.begin(), reports.end(), [l](const BasinReport& r) { return r.label == l; }));
        f.fraction = static_cast<double>(f.count) / n;
        f.half_width = 1.96 * std::sqrt(f.fraction * (1.0 - f.fraction) / n);
        s.fractions.push_back(f);
    }
    s.unresolved_fraction = s.fractions.back().fraction;
    s.unresolved_flag = s.unresolved_fraction > 0.01;
    return s;
}

ClusterResult empirical_measure_clusters(const std::vector<BasinReport>& reports, double cutoff,
                                         std::size_t min_members) {
    std::vector<const BasinReport*> used;
    for (const auto& r : reports)
        if (r.label != OmegaLabel::Unresolved) used.push_back(&r);
    ClusterResult out;
    out.used = used.size();
    const std::size_t m = used.size();
    if (m == 0) return out;

    std::vector<std::size_t> rank(m), parent(m);
    boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
    for (std::size_t i = 0; i < m; ++i) sets.make_set(i);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if ((used[i]->birkhoff - used[j]->birkhoff).cwiseAbs().maxCoeff() <= cutoff) sets.union_set(i, j);

    // clusters in order of first member, then sorted by size
    std::map<std::size_t, std::vector<std::size_t>> groups;
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t r = sets.find_set(i);
        if (groups.find(r) == groups.end()) order.push_back(r);
        groups[r].push_back(i);
    }
    for (std::size_t r : order) {
        const auto& members = groups[r];
        Cluster c;
        c.size = members.size();
        c.centroid = Eigen::VectorXd::Zero(used[members[0]]->birkhoff.size());
        std::map<int, std::size_t> idx;
        std::map<OmegaLabel, std::size_t> lab;
        for (std::size_t i : members) {
            c.centroid += used[i]->birkhoff;
            ++idx[used[i]->unstable_index];
            ++lab[used[i]->label];
        }
        c.centroid /= static_cast<double>(c.size);
        c.modal_index = std::max_element(idx.begin(), idx.end(), [](auto& a, auto& b) { return a.second < b.second; })->first;
        c.modal_label = std::max_element(lab.begin(), lab.end(), [](auto& a, auto& b) { return a.second < b.second; })->first;
        if (c.size < min_members) out.degenerate = true;
        out.clusters.push_back(c);
    }
    std::stable_sort(out.clusters.begin(), out.clusters.end(), [](const Cluster& a, const Cluster& b) { return a.size > b.size; });
    return out;
}

}  // namespace phlab
