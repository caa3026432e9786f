#ifndef RECSIM_ANALYSIS_HPP
#define RECSIM_ANALYSIS_HPP

#include <span>
#include <vector>

#include "recsim/distributions.hpp"

namespace recsim {

struct BoundParams {
    double delta_min = 0.0; // smallest quality gap, > 0
    double sigma = 0.0;     // noise scale
    int item_count = 1;     // K
    long long horizon = 1;  // T
    double c = 0.0;         // exploration constant, in (0, 1]
    // Constant from the bound's proof; it is not pinned down in the statement,
    // so it is an explicit input and bound values are reported "up to alpha".
    double alpha = 1.0;
};

enum class GrowthClass { Linear, Logarithmic, Indeterminate };

struct GrowthFit {
    double linear_slope = 0.0;
    double linear_r2 = 0.0;
    double log_coefficient = 0.0;
    double log_r2 = 0.0;
    GrowthClass classification = GrowthClass::Indeterminate;
};

struct GrowthFitOptions {
    double margin = 0.05;      // required r2 separation between the two fits
    double slope_floor = -1.0; // < 0 means auto: 1e-3 * mean path increment
    // Fraction of the path treated as transient and skipped before fitting.
    // Over longer suffixes log t is nearly affine in t and the two fits
    // become indistinguishable, so the window starts early.
    double skip_fraction = 0.05;
};

// (1-p)^K / ((1-p)^K + p): the quality-gap level below which biased averaging
// locks in linear regret under Bernoulli(p) preferences.
double bias_threshold(int item_count, double p);

// C = P(theta >= 1) * P(theta <= 0)^(K-1). Returns 0 when either factor
// vanishes (the regret bound is then vacuous).
double exploration_constant(const PreferenceSpec& spec, int item_count);
double exploration_constant_bernoulli(double p, int item_count);
// Symmetric-about-zero shortcut: gamma * 2^(1-K).
double exploration_constant_symmetric(double gamma, int item_count);

// (16 sigma^2 / delta + delta) K + 32 alpha sigma^2 K (ln T - ln delta + ln 2) / (delta^2 C)
double regret_bound(const BoundParams& params);

// Minimum pairwise |Q_i - Q_j|; throws on duplicates.
double delta_min(std::span<const double> qualities);

// Classifies a cumulative path as Linear or Logarithmic by comparing
// least-squares fits against t and ln t on the post-transient window; when the
// r2 separation there is below the margin, a decisive fit on the last quarter
// of the path settles it.
GrowthFit classify_growth(std::span<const double> cumulative_regret,
                          const GrowthFitOptions& options = {});

const char* growth_class_name(GrowthClass c);

} // namespace recsim

#endif
