#pragma once

#include <string>
#include <vector>

namespace phlab {

// Time-1 map of the flow x' = -c * orientation * sin(2 pi m x) on R/Z.
class SineFlowMap {
public:
    SineFlowMap(int harmonics, double strength, int orientation = 1);

    // Strength with exp(2 pi m c) = ratio * lambda.
    static double tuned_strength(int harmonics, double lambda, double ratio = 0.7);

    double eval(double x) const;
    double inverse(double y) const;
    double deriv(double x) const;

    int harmonics() const { return m_; }
    double strength() const { return c_; }
    int orientation() const { return orientation_; }
    // Derivative at sinks, e.g. exp(-2 pi m c) for the canonical orientation.
    double sink_multiplier() const { return contraction_; }
    std::vector<double> sinks() const;
    std::vector<double> sources() const;

private:
    double flow(double x, double e) const;

    int m_;
    double c_;
    int orientation_;
    double contraction_;
};

struct ConditionResult {
    std::string name;
    bool pass = false;
    double margin = 0.0;   // worst slack of the inequality; negative means violated
    double witness = 0.0;  // point attaining the worst slack
    std::string detail;
};

struct CircleConditionReport {
    std::vector<ConditionResult> conditions;
    bool pass() const;
};

// Checks the three derivative conditions (K-type for m = 1, J-type otherwise) on a grid of
// 1e5 uniform points plus refinements on each delta0-neighbourhood of the fixed points.
CircleConditionReport check_circle_conditions(const SineFlowMap& map, double lambda, double delta0);

}  // namespace phlab
