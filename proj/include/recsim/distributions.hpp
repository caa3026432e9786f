#ifndef RECSIM_DISTRIBUTIONS_HPP
#define RECSIM_DISTRIBUTIONS_HPP

#include <string>
#include <variant>

#include "recsim/rng.hpp"

namespace recsim {

// Preference distribution families used for the private signals theta.
struct Bernoulli {
    double p;
};

struct Normal {
    double mu;
    double sigma;
};

struct Exponential {
    double rate;
};

// Pareto Type I: support [minimum, inf), shape > 1 so the mean exists.
struct Pareto {
    double shape;
    double minimum = 1.0;
};

using PreferenceSpec = std::variant<Bernoulli, Normal, Exponential, Pareto>;

// Zero-mean additive noise; sigma == 0 means no noise.
struct NoiseSpec {
    double sigma = 0.0;
};

// Throws std::invalid_argument if parameters are outside the family's domain.
void validate(const PreferenceSpec& spec);
void validate(const NoiseSpec& spec);

std::string family_name(const PreferenceSpec& spec);

double sample_preference(const PreferenceSpec& spec, RngStream& rng);
double sample_noise(const NoiseSpec& spec, RngStream& rng);

// Analytic mean; throws std::domain_error for Pareto with shape <= 1.
double dist_mean(const PreferenceSpec& spec);

// P(theta >= c). Atoms count toward the upper tail, so Bernoulli(p) gives
// tail_above(1) == p, matching the Bernoulli exploration constant p(1-p)^{K-1}.
double tail_above(const PreferenceSpec& spec, double c);

// P(theta <= c), the plain CDF. For continuous families
// tail_above(c) + tail_at_or_below(c) == 1 at every c.
double tail_at_or_below(const PreferenceSpec& spec, double c);

// Standard normal CDF.
double normal_cdf(double z);

} // namespace recsim

#endif
