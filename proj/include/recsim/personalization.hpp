#ifndef RECSIM_PERSONALIZATION_HPP
#define RECSIM_PERSONALIZATION_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "recsim/engine.hpp"
#include "recsim/rng.hpp"

namespace recsim {

// ---------------------------------------------------------------------------
// Ridge regression.

struct RidgeSolution {
    Eigen::VectorXd coef;
    double intercept = 0.0;
};

// Minimizes ||y - X b - c||^2 + lambda ||b||^2 with the intercept c
// unpenalized (dropped when fit_intercept is false). Throws std::runtime_error
// on a singular system with lambda == 0.
RidgeSolution ridge_fit(const Eigen::MatrixXd& design, const Eigen::VectorXd& targets,
                        double lambda, bool fit_intercept);

// ---------------------------------------------------------------------------
// Feature-based value model: V = Q_i + x^T w_i + theta + eps with
// theta ~ N(x^T w_tilde, sigma_theta) and a fresh feature vector x per
// user-item pair.

struct FeatureModelConfig {
    int n_items = 100;
    int p_dim = 20;
    double sigma_theta = 0.1;
    double noise_sigma = 1.0;
    // The item-weight entries are N(0, s) with s = 1/sqrt(p); by default s is
    // read as the standard deviation, optionally as the variance. Under the
    // sd reading item quality and feature effects have comparable scale, which
    // is what makes oracle-selected training data collapse toward the
    // no-score benchmark; the variance reading weakens that effect.
    bool weight_scale_is_variance = false;
    double pref_weight_scale = 1.0; // multiplies w_tilde; 0 removes preferences
};

class FeatureModel : public UserModel {
public:
    FeatureModel(const FeatureModelConfig& config, RngStream param_rng);

    int item_count() const override { return config_.n_items; }
    UserDraw draw_user(RngStream& rng) override;

    const Eigen::VectorXd& item_quality() const { return quality_; }
    const Eigen::MatrixXd& item_weights() const { return weights_; }
    const Eigen::VectorXd& pref_weights() const { return pref_weights_; }
    const FeatureModelConfig& config() const { return config_; }

    // Oracle score Q_i + x^T w_i, which equals the draw's base vector.
    static SelectionRule oracle_rule();
    static SelectionRule zero_rule();

private:
    FeatureModelConfig config_;
    Eigen::VectorXd quality_;      // n_items
    Eigen::MatrixXd weights_;      // n_items x p
    Eigen::VectorXd pref_weights_; // p
};

// One ridge fit per item; items without training rows score identically 0.
struct FeaturePolicy {
    Eigen::VectorXd intercepts;    // n_items
    Eigen::MatrixXd coefficients;  // n_items x p
    double lambda = 1.0;

    std::vector<double> scores(const UserModel::UserDraw& draw) const;
    SelectionRule rule() const;
};

FeaturePolicy fit_feature_policy(const Dataset& train, int n_items, int p_dim,
                                 double lambda);

// ---------------------------------------------------------------------------
// Low-rank value model: v = a_i + b_j + u_i^T v_j + x_i^T y_j + eps for item i
// and user j; the x_i^T y_j term is the user's private preference.

struct LowRankModelConfig {
    int n_users = 2000;
    int n_items = 500;
    int rank = 4;
    double noise_sigma = 0.1; // variance 0.01
    int ratings_per_user = 40;
};

class LowRankModel {
public:
    LowRankModel(const LowRankModelConfig& config, RngStream param_rng);

    int n_users() const { return config_.n_users; }
    int n_items() const { return config_.n_items; }
    const LowRankModelConfig& config() const { return config_; }

    // a_i + b_j + u_i^T v_j: the part a perfect recommender knows.
    double mean_value(int user, int item) const;
    // x_i^T y_j: the private preference.
    double preference(int user, int item) const;

private:
    LowRankModelConfig config_;
    Eigen::VectorXd item_offset_, user_offset_;
    Eigen::MatrixXd item_factors_, user_factors_;      // interaction
    Eigen::MatrixXd item_pref_, user_pref_;            // preference
};

// Scores as a function of (user, item); nullptr means uniform random selection.
using LowRankScoreFn = std::function<double(int user, int item)>;

// Each user rates `ratings_per_user` distinct items by repeated argmax of
// score + preference over the items not yet rated and not excluded for that
// user. Rows carry user_id and the chosen item.
Dataset generate_lowrank_dataset(const LowRankModel& model, const LowRankScoreFn& score_fn,
                                 FeedbackChannel channel,
                                 const std::vector<std::vector<int>>& excluded_per_user,
                                 RngStream rng,
                                 std::vector<std::vector<int>>* rated_per_user = nullptr);

double lowrank_mean_value(const LowRankModel& model, const Dataset& test);

// ---------------------------------------------------------------------------
// Alternating least squares on (user, item, rating) triples for the model
// r ~ a_i + b_j + u_i^T v_j.

struct RatingTriple {
    int user;
    int item;
    double rating;
};

struct AlsOptions {
    int rank = 8;
    double lambda = 0.1;
    int sweeps = 20;
    uint64_t seed = 0; // factor initialization
};

struct AlsFit {
    Eigen::VectorXd item_offset, user_offset;
    Eigen::MatrixXd item_factors, user_factors; // n x rank
    double lambda = 0.0;
    std::vector<double> objective_trace; // after each half-sweep, non-increasing

    double predict(int user, int item) const;
};

AlsFit als_fit(std::span<const RatingTriple> ratings, int n_users, int n_items,
               const AlsOptions& options);

// ---------------------------------------------------------------------------
// Two-stage experiments.

enum class Regime { Oracle, OracleUnbiased, Random, Iterated };

struct TwoStageResult {
    double test_mean_value = 0.0;
    double oracle_benchmark = 0.0;
    double zero_benchmark = 0.0;
    double lambda = 0.0; // regularization actually used for the final fit
};

struct RidgeTwoStageConfig {
    FeatureModelConfig model;
    long long n_train = 20000;
    long long n_test = 20000;
    double lambda = 1.0;
};

TwoStageResult run_two_stage_ridge(const RidgeTwoStageConfig& config, Regime regime,
                                   uint64_t seed);

struct LowRankTwoStageConfig {
    LowRankModelConfig model;
    int als_rank = -1; // < 0 means 2 * model.rank
    std::vector<double> lambda_grid = {0.01, 0.1, 1.0, 10.0};
    int sweeps = 20;
    double validation_fraction = 0.1;
};

TwoStageResult run_two_stage_lowrank(const LowRankTwoStageConfig& config, Regime regime,
                                     uint64_t seed);

const char* regime_name(Regime regime);

} // namespace recsim

#endif
