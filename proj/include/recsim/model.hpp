#ifndef RECSIM_MODEL_HPP
#define RECSIM_MODEL_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace recsim {

// Ground-truth item qualities. Item indices are 0-based throughout.
struct Catalog {
    std::vector<double> qualities;

    int item_count() const { return static_cast<int>(qualities.size()); }
};

// One arriving agent: a private preference and a noise draw per item.
// Both vectors have length K; only the chosen item's value is realized,
// the remaining noise draws go unused.
struct AgentDraw {
    std::vector<double> theta;
    std::vector<double> epsilon;
};

// How the platform's feedback query maps the realized value to the report.
enum class FeedbackChannel {
    AbsoluteBiased,        // W = V
    UnbiasedQuality,       // W = V - theta_chosen
    RelativeToExpectation, // W = V - score_chosen - theta_chosen
};

struct InteractionRecord {
    long long t;
    int chosen;
    double value;
    double feedback;
    double score_at_choice;
};

// argmax_i scores[i] + theta[i]; ties broken by lowest index.
int select_item(std::span<const double> scores, std::span<const double> theta);

// Q_i + theta_i + epsilon_i.
double realize_value(const Catalog& catalog, const AgentDraw& draw, int item);

// max_i (Q_i + theta_i) - (Q_chosen + theta_chosen); excludes epsilon.
double step_regret(const Catalog& catalog, std::span<const double> theta, int chosen);

double make_feedback(FeedbackChannel channel, double value, double theta_chosen,
                     double score_chosen);

} // namespace recsim

#endif
