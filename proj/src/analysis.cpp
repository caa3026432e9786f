#include "recsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace recsim {

double bias_threshold(int item_count, double p) {
    if (item_count < 1) throw std::invalid_argument("bias_threshold: K must be >= 1");
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("bias_threshold: p must be strictly inside (0,1)");
    double q = std::pow(1.0 - p, item_count);
    return q / (q + p);
}

double exploration_constant(const PreferenceSpec& spec, int item_count) {
    if (item_count < 1) throw std::invalid_argument("exploration_constant: K must be >= 1");
    double gamma_prime = tail_above(spec, 1.0);
    double gamma = tail_at_or_below(spec, 0.0);
    return gamma_prime * std::pow(gamma, item_count - 1);
}

double exploration_constant_bernoulli(double p, int item_count) {
    if (item_count < 1) throw std::invalid_argument("exploration_constant: K must be >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("exploration_constant: p must be in [0,1]");
    return p * std::pow(1.0 - p, item_count - 1);
}

double exploration_constant_symmetric(double gamma, int item_count) {
    if (item_count < 1) throw std::invalid_argument("exploration_constant: K must be >= 1");
    return gamma * std::pow(2.0, 1 - item_count);
}

double regret_bound(const BoundParams& params) {
    if (!(params.delta_min > 0.0))
        throw std::invalid_argument("regret_bound: delta_min must be > 0");
    if (params.item_count < 1 || params.horizon < 1)
        throw std::invalid_argument("regret_bound: K and T must be >= 1");
    if (params.sigma == 0.0) return params.delta_min * params.item_count;
    if (!(params.c > 0.0))
        throw std::domain_error("regret_bound: C = 0 makes the bound vacuous");
    const double d = params.delta_min;
    const double s2 = params.sigma * params.sigma;
    const double k = static_cast<double>(params.item_count);
    double first = (16.0 * s2 / d + d) * k;
    double second = 32.0 * params.alpha * s2 * k *
                    (std::log(static_cast<double>(params.horizon)) - std::log(d) +
                     std::log(2.0)) /
                    (d * d * params.c);
    return first + second;
}

double delta_min(std::span<const double> qualities) {
    if (qualities.size() < 2) throw std::invalid_argument("delta_min: need K >= 2");
    std::vector<double> sorted(qualities.begin(), qualities.end());
    std::sort(sorted.begin(), sorted.end());
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < sorted.size(); ++i) best = std::min(best, sorted[i] - sorted[i - 1]);
    if (best <= 0.0) throw std::invalid_argument("delta_min: qualities must be distinct");
    return best;
}

namespace {

struct LsqFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

LsqFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    LsqFit fit;
    fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    fit.intercept = my - fit.slope * mx;
    if (syy > 0.0) {
        double ss_res = 0.0;
        for (size_t i = 0; i < x.size(); ++i) {
            double r = y[i] - (fit.intercept + fit.slope * x[i]);
            ss_res += r * r;
        }
        fit.r2 = 1.0 - ss_res / syy;
    } else {
        fit.r2 = 1.0; // constant path: both models fit exactly
    }
    return fit;
}

// Linear and logarithmic fits of path[start..n) against t and ln t.
std::pair<LsqFit, LsqFit> window_fits(std::span<const double> path, size_t start) {
    std::vector<double> t, log_t, y;
    t.reserve(path.size() - start);
    for (size_t i = start; i < path.size(); ++i) {
        double ti = static_cast<double>(i + 1);
        t.push_back(ti);
        log_t.push_back(std::log(ti));
        y.push_back(path[i]);
    }
    return {least_squares(t, y), least_squares(log_t, y)};
}

} // namespace

GrowthFit classify_growth(std::span<const double> path, const GrowthFitOptions& options) {
    if (path.size() < 100)
        throw std::invalid_argument("classify_growth: path length must be >= 100");
    for (size_t i = 1; i < path.size(); ++i)
        if (path[i] < path[i - 1] - 1e-9)
            throw std::invalid_argument("classify_growth: path must be non-decreasing");

    const size_t n = path.size();
    size_t start = std::max<size_t>(1, static_cast<size_t>(options.skip_fraction * n));
    auto [lin, lg] = window_fits(path, start);

    double slope_floor = options.slope_floor;
    if (slope_floor < 0.0)
        slope_floor = 1e-3 * (path.back() - path.front()) / static_cast<double>(n - 1);

    GrowthFit fit;
    fit.linear_slope = lin.slope;
    fit.linear_r2 = std::clamp(lin.r2, 0.0, 1.0);
    fit.log_coefficient = lg.slope;
    fit.log_r2 = std::clamp(lg.r2, 0.0, 1.0);
    if (fit.linear_r2 - fit.log_r2 > options.margin && fit.linear_slope > slope_floor)
        fit.classification = GrowthClass::Linear;
    else if (fit.log_r2 - fit.linear_r2 > options.margin)
        fit.classification = GrowthClass::Logarithmic;
    else
        fit.classification = GrowthClass::Indeterminate;

    // Paths with a long early transient can tie on the primary window even
    // though the asymptotic behavior is unambiguous. Settle ties by scoring
    // both fitted models on the last quarter only: the model matching the
    // tail's shape keeps small residuals there, the other accumulates
    // systematic error.
    if (fit.classification == GrowthClass::Indeterminate) {
        size_t tail_start = 3 * n / 4;
        double my = 0.0;
        for (size_t i = tail_start; i < n; ++i) my += path[i];
        my /= static_cast<double>(n - tail_start);
        double syy = 0.0, sse_lin = 0.0, sse_log = 0.0;
        for (size_t i = tail_start; i < n; ++i) {
            double ti = static_cast<double>(i + 1);
            double dy = path[i] - my;
            double rl = path[i] - (lin.intercept + lin.slope * ti);
            double rg = path[i] - (lg.intercept + lg.slope * std::log(ti));
            syy += dy * dy;
            sse_lin += rl * rl;
            sse_log += rg * rg;
        }
        if (syy > 0.0) {
            double tl = std::clamp(1.0 - sse_lin / syy, 0.0, 1.0);
            double tg = std::clamp(1.0 - sse_log / syy, 0.0, 1.0);
            if (tl - tg > options.margin && fit.linear_slope > slope_floor)
                fit.classification = GrowthClass::Linear;
            else if (tg - tl > options.margin)
                fit.classification = GrowthClass::Logarithmic;
        }
    }
    return fit;
}

const char* growth_class_name(GrowthClass c) {
    switch (c) {
        case GrowthClass::Linear: return "Linear";
        case GrowthClass::Logarithmic: return "Logarithmic";
        case GrowthClass::Indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

} // namespace recsim
