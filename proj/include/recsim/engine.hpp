#ifndef RECSIM_ENGINE_HPP
#define RECSIM_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "recsim/distributions.hpp"
#include "recsim/model.hpp"
#include "recsim/rng.hpp"
#include "recsim/scoring.hpp"

namespace recsim {

// Per-item preference parameters drawn uniformly from [lo, hi]; the parameter
// is p (Bernoulli), sigma with mu = 0 (Normal), the scale 1/rate (Exponential),
// or the shape with minimum 1 (Pareto).
enum class PreferenceFamily { Bernoulli, Normal, Exponential, Pareto };

struct PreferencePrior {
    PreferenceFamily family = PreferenceFamily::Bernoulli;
    double lo = 0.0;
    double hi = 1.0;

    PreferenceSpec draw(RngStream& rng) const;
};

enum class RecordMode { Summary, Stride, Full };

struct SimConfig {
    std::optional<std::vector<double>> qualities; // explicit; else drawn U[0,1]^K
    int item_count = 50;
    std::optional<std::vector<PreferenceSpec>> preferences; // explicit per item
    std::optional<PreferencePrior> preference_prior;        // else redrawn per episode
    NoiseSpec noise;
    FeedbackChannel channel = FeedbackChannel::AbsoluteBiased;
    ScorerSpec scorer;
    long long horizon = 5000;
    uint64_t seed = 0;
    uint64_t stream_id = 0;
    RecordMode record_mode = RecordMode::Summary;
    long long record_stride = 100;

    void validate() const;
};

struct SimulationResult {
    std::vector<double> cumulative_regret; // length T, non-decreasing
    std::vector<long long> selection_counts;
    std::vector<InteractionRecord> records;
    double realized_value_sum = 0.0;
    std::vector<double> qualities; // resolved catalog
};

struct BatchResult {
    std::vector<std::vector<double>> paths; // one regret path per replication
    std::vector<double> mean_path;
    std::vector<double> stderr_path;

    double final_mean_regret() const { return mean_path.back(); }
};

SimulationResult run_episode(const SimConfig& config);

// Replication r runs with stream_id = r off the master seed; prior-configured
// qualities and preference parameters are redrawn per replication. The
// aggregation is ordered by replication index, so results are deterministic
// whether or not replications run in parallel.
BatchResult run_batch(const SimConfig& config, int replications, bool parallel = true);

// ---------------------------------------------------------------------------
// Two-stage dataset machinery.

// Generative model of arriving users for the two-stage protocol: per arrival,
// a mean value (base), a private preference and a noise draw per item, plus an
// optional per-item feature payload used by feature-based scorers.
class UserModel {
public:
    struct UserDraw {
        std::vector<double> base;       // mean value per item
        std::vector<double> preference; // theta per item
        std::vector<double> noise;      // epsilon per item
        std::vector<double> features;   // flattened K x feature_dim, may be empty
        int feature_dim = 0;
        int user_id = -1;
    };

    virtual ~UserModel() = default;
    virtual int item_count() const = 0;
    virtual UserDraw draw_user(RngStream& rng) = 0;

    static double value_of(const UserDraw& d, int item) {
        return d.base[item] + d.preference[item] + d.noise[item];
    }
};

// How rows are selected when generating a dataset: argmax(score + preference),
// or uniform random assignment (the user has no choice).
struct SelectionRule {
    enum class Kind { ScoreArgmax, UniformRandom };
    Kind kind = Kind::ScoreArgmax;
    std::function<std::vector<double>(const UserModel::UserDraw&)> score_fn;

    static SelectionRule uniform_random() { return {Kind::UniformRandom, nullptr}; }
    static SelectionRule argmax(std::function<std::vector<double>(const UserModel::UserDraw&)> fn) {
        return {Kind::ScoreArgmax, std::move(fn)};
    }
};

struct DatasetRow {
    long long step;
    int user_id;
    int item;
    std::vector<double> features; // chosen item's feature payload
    double feedback;
    double value;
};

struct Dataset {
    std::vector<DatasetRow> rows;
    int feature_dim = 0;
};

// The scoring rule is held fixed across all n_obs rows.
Dataset generate_dataset(UserModel& model, const SelectionRule& rule,
                         FeedbackChannel channel, long long n_obs, RngStream rng);

// Mean realized value over a freshly generated test set under the given rule.
double evaluate_policy(UserModel& model, const SelectionRule& rule, long long n_test,
                       RngStream rng);

// The basic catalog-plus-preferences model as a UserModel (no features).
class SimpleCatalogModel : public UserModel {
public:
    SimpleCatalogModel(Catalog catalog, std::vector<PreferenceSpec> prefs, NoiseSpec noise);

    int item_count() const override { return catalog_.item_count(); }
    UserDraw draw_user(RngStream& rng) override;
    const Catalog& catalog() const { return catalog_; }

private:
    Catalog catalog_;
    std::vector<PreferenceSpec> prefs_;
    NoiseSpec noise_;
};

} // namespace recsim

#endif
