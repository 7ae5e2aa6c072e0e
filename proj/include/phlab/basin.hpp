#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "phlab/ensemble.hpp"
#include "phlab/lyapunov.hpp"
#include "phlab/maps.hpp"

namespace phlab {

enum class OmegaLabel { Lambda1, Lambda3, Attractor, Repeller, Sink1, Sink2, Sink3, Unresolved };

std::string to_string(OmegaLabel l);

struct BasinReport {
    std::size_t index = 0;
    Vec start;
    OmegaLabel label = OmegaLabel::Unresolved;
    double distance = 0.0;  // distance to the labelled target at the final step
    Eigen::VectorXd birkhoff;  // averages of cos 2 pi x_i, sin 2 pi x_i over the window
    Vec exponents;
    int unstable_index = 0;
    bool exponents_resolved = false;
    std::size_t capture_steps = 0;
};

struct BasinOptions {
    std::size_t transient = 1000;
    std::size_t settle = 2000;  // the label must hold at every checkpoint here before measuring
    std::size_t window = 10000;
    std::size_t budget = 20'000'000;
    std::size_t check_every = 16;
    Exec exec = Exec::Parallel;
};

// 10 delta0 in strict mode, delta0/4 in relaxed mode.
double resolution_radius(const SystemSpec& spec);

// Nearest target within the radius, Unresolved otherwise.
OmegaLabel omega_label(const DynamicalSystem& sys, const Vec& p, double radius, double* distance = nullptr);

// Labels the targets a family can reach; empty when basin classification does not apply.
std::vector<OmegaLabel> family_labels(Family f);

BasinReport classify_start(const DynamicalSystem& sys, const Vec& start, std::size_t index, const BasinOptions& opt);

std::vector<BasinReport> basin_classify(const DynamicalSystem& sys, std::size_t ensemble, std::uint64_t seed,
                                        const BasinOptions& opt = {});

struct LabelFraction {
    OmegaLabel label;
    std::size_t count = 0;
    double fraction = 0.0;
    double half_width = 0.0;  // 1.96 sqrt(p (1 - p) / n)
};

struct BasinSummary {
    std::size_t total = 0;
    std::vector<LabelFraction> fractions;  // family labels, then Unresolved
    double unresolved_fraction = 0.0;
    bool unresolved_flag = false;  // more than 1% unresolved
};

BasinSummary summarize(const std::vector<BasinReport>& reports, Family family);

struct Cluster {
    std::size_t size = 0;
    Eigen::VectorXd centroid;
    int modal_index = 0;
    OmegaLabel modal_label = OmegaLabel::Unresolved;
};

struct ClusterResult {
    std::vector<Cluster> clusters;  // largest first
    std::size_t used = 0;           // resolved reports that entered the clustering
    bool degenerate = false;        // a cluster with fewer than min_members members
};

constexpr double kClusterCutoff = 0.1;

// Single-linkage clustering of Birkhoff vectors in the max metric.
ClusterResult empirical_measure_clusters(const std::vector<BasinReport>& reports, double cutoff = kClusterCutoff,
                                         std::size_t min_members = 5);

}  // namespace phlab
