#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "phlab/ensemble.hpp"
#include "phlab/maps.hpp"

namespace phlab {

// Pushes an orthonormal frame through successive Jacobians with a QR step after each one.
class QrCocycle {
public:
    explicit QrCocycle(int n);
    void push(const Mat& jac);
    int dim() const { return static_cast<int>(sums_.size()); }
    std::size_t count() const { return count_; }
    // Unsorted running sums of log |R_ii|.
    const Vec& log_sums() const { return sums_; }
    void reset_sums();

private:
    Mat q_;
    Vec sums_;
    std::size_t count_ = 0;
};

struct LyapunovReport {
    Vec start;
    Vec end;
    std::size_t transient = 0;
    std::size_t steps = 0;
    Vec exponents;     // descending
    Vec drift;         // |second half - first half| per exponent, same order
    double mean_log_det = 0.0;
    bool resolved = false;

    int unstable_index() const;
    double sum_mismatch() const { return std::abs(exponents.sum() - mean_log_det); }
};

constexpr double kDriftTolerance = 0.05;

std::size_t default_transient(std::size_t steps);

LyapunovReport lyapunov_spectrum(const DynamicalSystem& sys, const Vec& start, std::size_t steps,
                                 std::size_t transient);

// Starts are Lebesgue-uniform, drawn from stream (seed, index).
std::vector<LyapunovReport> lyapunov_ensemble(const DynamicalSystem& sys, std::size_t count, std::size_t steps,
                                              std::size_t transient, std::uint64_t seed,
                                              Exec exec = Exec::Parallel);

// (1 - log 2 lambda / log 3 lambda) log lambda
double beta_constant(double lambda);
// log lambda / log 3 lambda
double u0_bound(double lambda);

// Fraction of the orbit inside the deformation box [-delta0, delta0]^n of the chart.
double u0_frequency(const DynamicalSystem& sys, const Vec& start, std::size_t steps);

}  // namespace phlab
