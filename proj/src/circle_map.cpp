#include "phlab/circle_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "phlab/torus.hpp"

namespace phlab {

SineFlowMap::SineFlowMap(int harmonics, double strength, int orientation)
    : m_(harmonics), c_(strength), orientation_(orientation) {
    if (harmonics < 1) throw std::invalid_argument("SineFlowMap: harmonics must be >= 1");
    if (!(strength >= 0.0)) throw std::invalid_argument("SineFlowMap: strength must be >= 0");
    if (orientation != 1 && orientation != -1) throw std::invalid_argument("SineFlowMap: orientation must be +-1");
    contraction_ = std::exp(-2.0 * std::numbers::pi * m_ * c_ * orientation_);
}

double SineFlowMap::tuned_strength(int harmonics, double lambda, double ratio) {
    return std::log(ratio * lambda) / (2.0 * std::numbers::pi * harmonics);
}

// Within each cell of length 1/m centred on a zero, tan(pi s) is scaled by e.
// Near the cell ends the complementary form keeps the displacement from the
// other zero well conditioned.
double SineFlowMap::flow(double x, double e) const {
    const double y = m_ * x;
    const double n = std::floor(y + 0.5);
    const double s = y - n;
    if (s == 0.0) return x;
    double s_new;
    const double pi = std::numbers::pi;
    if (std::abs(s) <= 0.25) {
        s_new = std::atan(std::tan(pi * s) * e) / pi;
    } else {
        const double d = 0.5 - std::abs(s);
        const double d_new = d == 0.0 ? 0.0 : std::atan(std::tan(pi * d) / e) / pi;
        s_new = std::copysign(0.5 - d_new, s);
    }
    return wrap01((n + s_new) / m_);
}

double SineFlowMap::eval(double x) const { return flow(x, contraction_); }

double SineFlowMap::inverse(double y) const { return flow(y, 1.0 / contraction_); }

double SineFlowMap::deriv(double x) const {
    const double y = m_ * x;
    const double s = y - std::floor(y + 0.5);
    const double a = std::numbers::pi * s;
    const double c = std::cos(a), sn = std::sin(a);
    const double e = contraction_;
    return e / (c * c + e * e * sn * sn);
}

std::vector<double> SineFlowMap::sinks() const {
    std::vector<double> out;
    for (int j = 0; j < 2 * m_; ++j)
        if ((j % 2 == 0) == (orientation_ == 1)) out.push_back(static_cast<double>(j) / (2 * m_));
    return out;
}

std::vector<double> SineFlowMap::sources() const {
    std::vector<double> out;
    for (int j = 0; j < 2 * m_; ++j)
        if ((j % 2 == 0) != (orientation_ == 1)) out.push_back(static_cast<double>(j) / (2 * m_));
    return out;
}

bool CircleConditionReport::pass() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.pass; });
}

namespace {

struct Extremum {
    double value;
    double at;
};

template <class Pick>
Extremum scan(const SineFlowMap& map, const std::vector<double>& pts, Pick better) {
    Extremum e{map.deriv(pts.front()), pts.front()};
    for (double x : pts) {
        const double d = map.deriv(x);
        if (better(d, e.value)) e = {d, x};
    }
    return e;
}

std::vector<double> neighbourhood(const std::vector<double>& centres, double delta0, int per_centre) {
    std::vector<double> pts;
    for (double c : centres)
        for (int i = 0; i < per_centre; ++i)
            pts.push_back(wrap01(c - delta0 + 2.0 * delta0 * i / (per_centre - 1)));
    for (double c : centres) pts.push_back(c);
    return pts;
}

}  // namespace

CircleConditionReport check_circle_conditions(const SineFlowMap& map, double lambda, double delta0) {
    const std::string tag = map.harmonics() == 1 ? "K" : "J";
    const auto sinks = map.sinks();
    const auto sources = map.sources();

    std::vector<double> all;
    const int uniform = 100000;
    for (int i = 0; i < uniform; ++i) all.push_back(static_cast<double>(i) / uniform);
    auto near_sinks = neighbourhood(sinks, delta0, 2001);
    auto near_sources = neighbourhood(sources, delta0, 2001);
    all.insert(all.end(), near_sinks.begin(), near_sinks.end());
    all.insert(all.end(), near_sources.begin(), near_sources.end());

    CircleConditionReport rep;
    auto lt = [](double a, double b) { return a < b; };
    auto gt = [](double a, double b) { return a > b; };

    const Extremum lo = scan(map, all, lt);
    const Extremum hi = scan(map, all, gt);
    {
        ConditionResult c;
        c.name = tag + "1";
        const double m_lo = lo.value - 1.0 / lambda;
        const double m_hi = lambda - hi.value;
        c.margin = std::min(m_lo, m_hi);
        c.witness = m_lo < m_hi ? lo.at : hi.at;
        c.pass = c.margin > 0.0;
        c.detail = "1/lambda < Df < lambda everywhere";
        rep.conditions.push_back(c);
    }
    {
        const Extremum w = scan(map, near_sinks, gt);
        ConditionResult c;
        c.name = tag + "2";
        c.margin = 1.5 / lambda - w.value;
        c.witness = w.at;
        c.pass = c.margin > 0.0;
        c.detail = "Df < 3/(2 lambda) within delta0 of each sink";
        rep.conditions.push_back(c);
    }
    {
        ConditionResult c;
        c.name = tag + "2-pointwise";
        double worst = -std::numeric_limits<double>::infinity();
        double at = 0.0;
        for (double s : sinks)
            if (map.deriv(s) > worst) {
                worst = map.deriv(s);
                at = s;
            }
        c.margin = std::min(1.5 / lambda - worst, 0.25 - 1.5 / lambda);
        c.witness = at;
        c.pass = c.margin > 0.0;
        c.detail = "Df(sink) < 3/(2 lambda) < 1/4";
        rep.conditions.push_back(c);
    }
    {
        const Extremum w = scan(map, near_sources, lt);
        ConditionResult c;
        c.name = tag + "3";
        c.margin = w.value - 2.0 * lambda / 3.0;
        c.witness = w.at;
        c.pass = c.margin > 0.0;
        c.detail = "Df > 2 lambda / 3 within delta0 of each source";
        rep.conditions.push_back(c);
    }
    return rep;
}

}  // namespace phlab
