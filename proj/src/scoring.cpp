#include "recsim/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace recsim {

ScoreState::ScoreState(ScorerSpec spec, int item_count)
    : spec_(std::move(spec)), counts_(item_count, 0), sums_(item_count, 0.0) {
    if (item_count < 1) throw std::invalid_argument("ScoreState: item_count must be >= 1");
    if (spec_.kind == ScorerKind::Oracle &&
        static_cast<int>(spec_.oracle_scores.size()) != item_count)
        throw std::invalid_argument("ScoreState: oracle score vector length mismatch");
    if (spec_.sigma < 0.0) throw std::invalid_argument("ScoreState: sigma must be >= 0");
}

void ScoreState::observe(int item, double feedback) {
    if (item < 0 || item >= item_count())
        throw std::out_of_range("ScoreState::observe: item out of range");
    counts_[item] += 1;
    sums_[item] += feedback;
}

std::vector<double> ScoreState::empirical_scores() const {
    std::vector<double> s(counts_.size(), 0.0);
    for (size_t i = 0; i < counts_.size(); ++i)
        if (counts_[i] > 0) s[i] = sums_[i] / static_cast<double>(counts_[i]);
    return s;
}

std::vector<double> ScoreState::clipped_scores() const {
    std::vector<double> s = empirical_scores();
    for (double& v : s) v = std::clamp(v, 0.0, 1.0);
    return s;
}

std::vector<double> ScoreState::ucb_scores(double t) const {
    if (t < 1.0) throw std::invalid_argument("ucb_scores: t must be >= 1");
    std::vector<double> s(counts_.size(), 0.0);
    const double lt = std::log(t);
    for (size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] == 0) {
            s[i] = kUntriedSentinel;
        } else {
            double n = static_cast<double>(counts_[i]);
            s[i] = sums_[i] / n + spec_.sigma * std::sqrt(2.0 * std::max(lt, 0.0) / n);
        }
    }
    return s;
}

std::vector<double> ScoreState::thompson_scores(RngStream& rng) const {
    std::vector<double> s = empirical_scores();
    for (size_t i = 0; i < s.size(); ++i) {
        double width = spec_.sigma / std::sqrt(static_cast<double>(counts_[i]) + 1.0);
        s[i] += width * rng.next_normal();
    }
    return s;
}

std::vector<double> ScoreState::fixed_scores() const {
    if (spec_.kind == ScorerKind::Oracle) return spec_.oracle_scores;
    if (spec_.kind == ScorerKind::Zero) return std::vector<double>(counts_.size(), 0.0);
    throw std::logic_error("fixed_scores: scorer is neither Oracle nor Zero");
}

std::vector<double> ScoreState::scores(double t, RngStream& rng) const {
    switch (spec_.kind) {
        case ScorerKind::EmpiricalAverage: return empirical_scores();
        case ScorerKind::ClippedAverage: return clipped_scores();
        case ScorerKind::Ucb: return ucb_scores(t);
        case ScorerKind::GaussianThompson: return thompson_scores(rng);
        case ScorerKind::Oracle:
        case ScorerKind::Zero: return fixed_scores();
    }
    throw std::logic_error("scores: unknown scorer kind");
}

} // namespace recsim
