#include "recsim/distributions.hpp"

#include <cmath>
#include <stdexcept>

namespace recsim {

namespace {

struct Validator {
    void operator()(const Bernoulli& d) const {
        if (!(d.p >= 0.0 && d.p <= 1.0))
            throw std::invalid_argument("Bernoulli p must be in [0,1]");
    }
    void operator()(const Normal& d) const {
        if (!(d.sigma >= 0.0) || !std::isfinite(d.sigma) || !std::isfinite(d.mu))
            throw std::invalid_argument("Normal requires finite mu and sigma >= 0");
    }
    void operator()(const Exponential& d) const {
        if (!(d.rate > 0.0) || !std::isfinite(d.rate))
            throw std::invalid_argument("Exponential rate must be > 0");
    }
    void operator()(const Pareto& d) const {
        if (!(d.shape > 1.0) || !(d.minimum > 0.0))
            throw std::invalid_argument("Pareto requires shape > 1 and minimum > 0");
    }
};

} // namespace

void validate(const PreferenceSpec& spec) { std::visit(Validator{}, spec); }

void validate(const NoiseSpec& spec) {
    if (!(spec.sigma >= 0.0) || !std::isfinite(spec.sigma))
        throw std::invalid_argument("noise sigma must be finite and >= 0");
}

std::string family_name(const PreferenceSpec& spec) {
    struct Name {
        std::string operator()(const Bernoulli&) const { return "bernoulli"; }
        std::string operator()(const Normal&) const { return "normal"; }
        std::string operator()(const Exponential&) const { return "exponential"; }
        std::string operator()(const Pareto&) const { return "pareto"; }
    };
    return std::visit(Name{}, spec);
}

double sample_preference(const PreferenceSpec& spec, RngStream& rng) {
    validate(spec);
    struct Sampler {
        RngStream& rng;
        double operator()(const Bernoulli& d) const {
            return rng.next_double() < d.p ? 1.0 : 0.0;
        }
        double operator()(const Normal& d) const {
            return d.mu + d.sigma * rng.next_normal();
        }
        double operator()(const Exponential& d) const {
            double u = rng.next_double();
            return -std::log1p(-u) / d.rate;
        }
        double operator()(const Pareto& d) const {
            double u = rng.next_double();
            return d.minimum * std::pow(1.0 - u, -1.0 / d.shape);
        }
    };
    return std::visit(Sampler{rng}, spec);
}

double sample_noise(const NoiseSpec& spec, RngStream& rng) {
    if (spec.sigma == 0.0) return 0.0;
    return spec.sigma * rng.next_normal();
}

double dist_mean(const PreferenceSpec& spec) {
    validate(spec);
    struct Mean {
        double operator()(const Bernoulli& d) const { return d.p; }
        double operator()(const Normal& d) const { return d.mu; }
        double operator()(const Exponential& d) const { return 1.0 / d.rate; }
        double operator()(const Pareto& d) const {
            if (d.shape <= 1.0)
                throw std::domain_error("Pareto mean undefined for shape <= 1");
            return d.shape * d.minimum / (d.shape - 1.0);
        }
    };
    return std::visit(Mean{}, spec);
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double tail_above(const PreferenceSpec& spec, double c) {
    validate(spec);
    struct Tail {
        double c;
        double operator()(const Bernoulli& d) const {
            double t = 0.0;
            if (1.0 >= c) t += d.p;
            if (0.0 >= c) t += 1.0 - d.p;
            return t > 1.0 ? 1.0 : t;
        }
        double operator()(const Normal& d) const {
            if (d.sigma == 0.0) return d.mu >= c ? 1.0 : 0.0;
            return 1.0 - normal_cdf((c - d.mu) / d.sigma);
        }
        double operator()(const Exponential& d) const {
            return c <= 0.0 ? 1.0 : std::exp(-d.rate * c);
        }
        double operator()(const Pareto& d) const {
            if (c <= d.minimum) return 1.0;
            return std::pow(d.minimum / c, d.shape);
        }
    };
    return std::visit(Tail{c}, spec);
}

double tail_at_or_below(const PreferenceSpec& spec, double c) {
    validate(spec);
    struct Cdf {
        double c;
        double operator()(const Bernoulli& d) const {
            if (c >= 1.0) return 1.0;
            if (c >= 0.0) return 1.0 - d.p;
            return 0.0;
        }
        double operator()(const Normal& d) const {
            if (d.sigma == 0.0) return d.mu <= c ? 1.0 : 0.0;
            return normal_cdf((c - d.mu) / d.sigma);
        }
        double operator()(const Exponential& d) const {
            return c < 0.0 ? 0.0 : -std::expm1(-d.rate * c);
        }
        double operator()(const Pareto& d) const {
            if (c < d.minimum) return 0.0;
            return 1.0 - std::pow(d.minimum / c, d.shape);
        }
    };
    return std::visit(Cdf{c}, spec);
}

} // namespace recsim
