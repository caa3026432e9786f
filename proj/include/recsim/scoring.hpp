#ifndef RECSIM_SCORING_HPP
#define RECSIM_SCORING_HPP

#include <vector>

#include "recsim/rng.hpp"

namespace recsim {

enum class ScorerKind {
    EmpiricalAverage,
    ClippedAverage,
    Ucb,
    GaussianThompson,
    Oracle,
    Zero,
};

struct ScorerSpec {
    ScorerKind kind = ScorerKind::EmpiricalAverage;
    double sigma = 1.0;                 // Ucb / GaussianThompson width
    std::vector<double> oracle_scores;  // Oracle only
};

// Sentinel score assigned to untried items by UCB; larger than any score the
// simulations can produce, so untried items are picked first (lowest index).
inline constexpr double kUntriedSentinel = 1e300;

// Per-item sufficient statistics (counts and feedback sums) plus the scoring
// algorithm. Scores at time t depend only on past (chosen, feedback) pairs
// and t itself.
class ScoreState {
public:
    ScoreState(ScorerSpec spec, int item_count);

    void observe(int item, double feedback);

    std::vector<double> empirical_scores() const;
    std::vector<double> clipped_scores() const;
    // t >= 1; takes a real-valued t so the confidence width is exact at any time.
    std::vector<double> ucb_scores(double t) const;
    std::vector<double> thompson_scores(RngStream& rng) const;
    // Oracle / Zero; throws std::logic_error for other kinds.
    std::vector<double> fixed_scores() const;

    // Dispatch on the configured algorithm.
    std::vector<double> scores(double t, RngStream& rng) const;

    int item_count() const { return static_cast<int>(counts_.size()); }
    const std::vector<long long>& counts() const { return counts_; }
    const std::vector<double>& sums() const { return sums_; }
    const ScorerSpec& spec() const { return spec_; }

private:
    ScorerSpec spec_;
    std::vector<long long> counts_;
    std::vector<double> sums_;
};

} // namespace recsim

#endif
