#pragma once

#include <cstdint>
#include <vector>

#include "phlab/types.hpp"

namespace phlab {

// Seeded trigonometric vector field V on T^n with |V|_C0 + |DV|_C0 <= 1.
// Each mode is a sin(2 pi k.x + theta) d with integer frequency k of total degree <= 3.
class TrigField {
public:
    TrigField(int n, std::uint64_t seed, int modes = 4);

    int dim() const { return n_; }
    Vec value(const Vec& x) const;
    Mat derivative(const Vec& x) const;
    // Bound on sup |V| from the coefficients.
    double sup_bound() const;

private:
    struct Mode {
        Vec freq;
        Vec dir;
        double amp;
        double phase;
    };
    int n_;
    std::vector<Mode> modes_;
};

}  // namespace phlab
