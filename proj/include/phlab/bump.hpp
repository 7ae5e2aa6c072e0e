#pragma once

namespace phlab {

struct BumpBounds {
    double c1;     // sup |p phi'(p)|
    double sup_h;  // grid sup |H|
    double sup_r;  // grid sup |R|, both variants
    double C;      // max(1, sup_h, sup_r) * 1.1
};

struct BoundGrid {
    int h_per_axis = 1001;  // grid for H over the square support
    int r_per_axis = 101;   // grid for R over the cube support
};

// Smooth even cutoff: 1 on |x| <= delta0/4, 0 on |x| >= delta0/2.
class BumpProfile {
public:
    explicit BumpProfile(double delta0, bool r_uses_phi_prime = false);

    double phi(double x) const;
    double phi_prime(double x) const;
    // phi and phi_prime in one call
    void eval(double x, double& value, double& derivative) const;

    double H(double x, double y) const;
    double R(double x, double y, double z) const;
    double R_printed(double x, double y, double z) const;
    double R_phi_prime(double x, double y, double z) const;

    double delta0() const { return delta0_; }
    bool r_uses_phi_prime() const { return r_uses_phi_prime_; }

    BumpBounds bounds(BoundGrid grid = {}) const;
    double compute_C(BoundGrid grid = {}) const { return bounds(grid).C; }

private:
    double delta0_;
    double quarter_;
    bool r_uses_phi_prime_;
};

}  // namespace phlab
