#include "recsim/model.hpp"

#include <stdexcept>

namespace recsim {

int select_item(std::span<const double> scores, std::span<const double> theta) {
    if (scores.empty() || scores.size() != theta.size())
        throw std::invalid_argument("select_item: scores and theta must have equal nonzero length");
    int best = 0;
    double best_val = scores[0] + theta[0];
    for (size_t i = 1; i < scores.size(); ++i) {
        double v = scores[i] + theta[i];
        if (v > best_val) {
            best_val = v;
            best = static_cast<int>(i);
        }
    }
    return best;
}

double realize_value(const Catalog& catalog, const AgentDraw& draw, int item) {
    if (item < 0 || item >= catalog.item_count())
        throw std::out_of_range("realize_value: item index out of range");
    return catalog.qualities[item] + draw.theta[item] + draw.epsilon[item];
}

double step_regret(const Catalog& catalog, std::span<const double> theta, int chosen) {
    const int k = catalog.item_count();
    if (chosen < 0 || chosen >= k || static_cast<int>(theta.size()) != k)
        throw std::out_of_range("step_regret: bad index or theta length");
    double best = catalog.qualities[0] + theta[0];
    for (int i = 1; i < k; ++i) {
        double v = catalog.qualities[i] + theta[i];
        if (v > best) best = v;
    }
    return best - (catalog.qualities[chosen] + theta[chosen]);
}

double make_feedback(FeedbackChannel channel, double value, double theta_chosen,
                     double score_chosen) {
    switch (channel) {
        case FeedbackChannel::AbsoluteBiased: return value;
        case FeedbackChannel::UnbiasedQuality: return value - theta_chosen;
        case FeedbackChannel::RelativeToExpectation:
            return value - score_chosen - theta_chosen;
    }
    throw std::invalid_argument("make_feedback: unknown channel");
}

} // namespace recsim
