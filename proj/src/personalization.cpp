#include "recsim/personalization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace recsim {

// ---------------------------------------------------------------------------
// Ridge.

RidgeSolution ridge_fit(const Eigen::MatrixXd& design, const Eigen::VectorXd& targets,
                        double lambda, bool fit_intercept) {
    const auto n = design.rows();
    const auto d = design.cols();
    if (n < 1 || n != targets.size())
        throw std::invalid_argument("ridge_fit: design/target size mismatch");
    if (lambda < 0.0) throw std::invalid_argument("ridge_fit: lambda must be >= 0");

    Eigen::MatrixXd x = design;
    Eigen::VectorXd y = targets;
    Eigen::RowVectorXd x_mean = Eigen::RowVectorXd::Zero(d);
    double y_mean = 0.0;
    if (fit_intercept) {
        x_mean = x.colwise().mean();
        y_mean = y.mean();
        x.rowwise() -= x_mean;
        y.array() -= y_mean;
    }

    Eigen::MatrixXd gram = x.transpose() * x;
    gram.diagonal().array() += lambda;
    Eigen::VectorXd rhs = x.transpose() * y;

    RidgeSolution sol;
    if (lambda == 0.0) {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
        if (!lu.isInvertible())
            throw std::runtime_error("ridge_fit: singular system with lambda = 0");
        sol.coef = lu.solve(rhs);
    } else {
        sol.coef = Eigen::LDLT<Eigen::MatrixXd>(gram).solve(rhs);
    }
    if (fit_intercept) sol.intercept = y_mean - x_mean * sol.coef;
    return sol;
}

// ---------------------------------------------------------------------------
// Feature model.

FeatureModel::FeatureModel(const FeatureModelConfig& config, RngStream param_rng)
    : config_(config) {
    if (config.n_items < 1 || config.p_dim < 1)
        throw std::invalid_argument("FeatureModel: bad dimensions");
    if (config.sigma_theta < 0.0 || config.noise_sigma < 0.0)
        throw std::invalid_argument("FeatureModel: negative scale");

    double s = 1.0 / std::sqrt(static_cast<double>(config.p_dim));
    double sd = config.weight_scale_is_variance ? std::sqrt(s) : s;

    quality_.resize(config.n_items);
    for (int i = 0; i < config.n_items; ++i) quality_(i) = param_rng.next_normal();
    weights_.resize(config.n_items, config.p_dim);
    for (int i = 0; i < config.n_items; ++i)
        for (int j = 0; j < config.p_dim; ++j) weights_(i, j) = sd * param_rng.next_normal();
    pref_weights_.resize(config.p_dim);
    for (int j = 0; j < config.p_dim; ++j)
        pref_weights_(j) = config.pref_weight_scale * sd * param_rng.next_normal();
}

UserModel::UserDraw FeatureModel::draw_user(RngStream& rng) {
    const int k = config_.n_items;
    const int p = config_.p_dim;
    UserDraw d;
    d.feature_dim = p;
    d.features.resize(static_cast<size_t>(k) * p);
    d.base.resize(k);
    d.preference.resize(k);
    d.noise.resize(k);
    Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> x(
        d.features.data(), k, p);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < p; ++j) x(i, j) = rng.next_normal();
    for (int i = 0; i < k; ++i) {
        d.base[i] = quality_(i) + x.row(i).dot(weights_.row(i));
        d.preference[i] =
            x.row(i).dot(pref_weights_) + config_.sigma_theta * rng.next_normal();
        d.noise[i] = config_.noise_sigma * rng.next_normal();
    }
    return d;
}

SelectionRule FeatureModel::oracle_rule() {
    return SelectionRule::argmax([](const UserDraw& d) { return d.base; });
}

SelectionRule FeatureModel::zero_rule() {
    return SelectionRule::argmax(
        [](const UserDraw& d) { return std::vector<double>(d.base.size(), 0.0); });
}

std::vector<double> FeaturePolicy::scores(const UserModel::UserDraw& draw) const {
    const int k = static_cast<int>(intercepts.size());
    const int p = static_cast<int>(coefficients.cols());
    if (draw.feature_dim != p)
        throw std::invalid_argument("FeaturePolicy: feature dimension mismatch");
    std::vector<double> s(k);
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        x(draw.features.data(), k, p);
    for (int i = 0; i < k; ++i) s[i] = intercepts(i) + x.row(i).dot(coefficients.row(i));
    return s;
}

SelectionRule FeaturePolicy::rule() const {
    return SelectionRule::argmax(
        [policy = *this](const UserModel::UserDraw& d) { return policy.scores(d); });
}

FeaturePolicy fit_feature_policy(const Dataset& train, int n_items, int p_dim,
                                 double lambda) {
    if (train.rows.empty()) throw std::invalid_argument("fit_feature_policy: empty dataset");
    if (train.feature_dim != p_dim)
        throw std::invalid_argument("fit_feature_policy: feature dimension mismatch");

    FeaturePolicy policy;
    policy.lambda = lambda;
    policy.intercepts = Eigen::VectorXd::Zero(n_items);
    policy.coefficients = Eigen::MatrixXd::Zero(n_items, p_dim);

    std::vector<std::vector<const DatasetRow*>> by_item(n_items);
    for (const auto& row : train.rows) {
        if (row.item < 0 || row.item >= n_items)
            throw std::invalid_argument("fit_feature_policy: item index out of range");
        by_item[row.item].push_back(&row);
    }

    for (int i = 0; i < n_items; ++i) {
        const auto& rows = by_item[i];
        if (rows.empty()) continue; // intercept-only fallback, score 0
        Eigen::MatrixXd x(rows.size(), p_dim);
        Eigen::VectorXd y(rows.size());
        for (size_t r = 0; r < rows.size(); ++r) {
            for (int j = 0; j < p_dim; ++j) x(r, j) = rows[r]->features[j];
            y(r) = rows[r]->feedback;
        }
        RidgeSolution sol = ridge_fit(x, y, lambda, /*fit_intercept=*/true);
        policy.intercepts(i) = sol.intercept;
        policy.coefficients.row(i) = sol.coef.transpose();
    }
    return policy;
}

// ---------------------------------------------------------------------------
// Low-rank model.

LowRankModel::LowRankModel(const LowRankModelConfig& config, RngStream param_rng)
    : config_(config) {
    if (config.n_users < 1 || config.n_items < 1 || config.rank < 1)
        throw std::invalid_argument("LowRankModel: bad dimensions");
    if (config.ratings_per_user < 1 || config.ratings_per_user > config.n_items)
        throw std::invalid_argument("LowRankModel: ratings_per_user must be in [1, n_items]");

    const double sd = 1.0 / std::sqrt(static_cast<double>(config.rank));
    auto fill = [&param_rng](Eigen::MatrixXd& m, double scale) {
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                m(i, j) = scale * param_rng.next_normal();
    };
    item_offset_.resize(config.n_items);
    for (int i = 0; i < config.n_items; ++i) item_offset_(i) = param_rng.next_normal();
    user_offset_.resize(config.n_users);
    for (int j = 0; j < config.n_users; ++j) user_offset_(j) = param_rng.next_normal();
    item_factors_.resize(config.n_items, config.rank);
    user_factors_.resize(config.n_users, config.rank);
    item_pref_.resize(config.n_items, config.rank);
    user_pref_.resize(config.n_users, config.rank);
    fill(item_factors_, sd);
    fill(user_factors_, sd);
    fill(item_pref_, sd);
    fill(user_pref_, sd);
}

double LowRankModel::mean_value(int user, int item) const {
    return item_offset_(item) + user_offset_(user) +
           item_factors_.row(item).dot(user_factors_.row(user));
}

double LowRankModel::preference(int user, int item) const {
    return item_pref_.row(item).dot(user_pref_.row(user));
}

Dataset generate_lowrank_dataset(const LowRankModel& model, const LowRankScoreFn& score_fn,
                                 FeedbackChannel channel,
                                 const std::vector<std::vector<int>>& excluded_per_user,
                                 RngStream rng,
                                 std::vector<std::vector<int>>* rated_per_user) {
    const int n_users = model.n_users();
    const int n_items = model.n_items();
    const int per_user = model.config().ratings_per_user;

    Dataset ds;
    ds.rows.reserve(static_cast<size_t>(n_users) * per_user);
    if (rated_per_user) rated_per_user->assign(n_users, {});

    std::vector<char> blocked(n_items);
    std::vector<int> available;
    long long step = 0;
    for (int user = 0; user < n_users; ++user) {
        std::fill(blocked.begin(), blocked.end(), 0);
        if (user < static_cast<int>(excluded_per_user.size()))
            for (int item : excluded_per_user[user]) blocked[item] = 1;
        available.clear();
        for (int i = 0; i < n_items; ++i)
            if (!blocked[i]) available.push_back(i);
        if (static_cast<int>(available.size()) < per_user)
            throw std::invalid_argument(
                "generate_lowrank_dataset: not enough unrated items for a user");

        for (int r = 0; r < per_user; ++r) {
            size_t pick;
            double score_chosen = 0.0;
            if (!score_fn) {
                pick = rng.next_below(available.size());
            } else {
                pick = 0;
                double best = -std::numeric_limits<double>::infinity();
                for (size_t a = 0; a < available.size(); ++a) {
                    int item = available[a];
                    double v = score_fn(user, item) + model.preference(user, item);
                    if (v > best) {
                        best = v;
                        pick = a;
                    }
                }
                score_chosen = score_fn(user, available[pick]);
            }
            int item = available[pick];
            available.erase(available.begin() + static_cast<long>(pick));

            double theta = model.preference(user, item);
            double value = model.mean_value(user, item) + theta +
                           model.config().noise_sigma * rng.next_normal();
            DatasetRow row;
            row.step = step++;
            row.user_id = user;
            row.item = item;
            row.value = value;
            row.feedback = make_feedback(channel, value, theta, score_chosen);
            ds.rows.push_back(std::move(row));
            if (rated_per_user) (*rated_per_user)[user].push_back(item);
        }
    }
    return ds;
}

double lowrank_mean_value(const LowRankModel&, const Dataset& test) {
    double sum = 0.0;
    for (const auto& row : test.rows) sum += row.value;
    return sum / static_cast<double>(test.rows.size());
}

// ---------------------------------------------------------------------------
// ALS.

double AlsFit::predict(int user, int item) const {
    return item_offset(item) + user_offset(user) +
           item_factors.row(item).dot(user_factors.row(user));
}

namespace {

double als_objective(std::span<const RatingTriple> ratings, const AlsFit& fit,
                     double lambda) {
    double obj = 0.0;
    for (const auto& r : ratings) {
        double resid = r.rating - fit.predict(r.user, r.item);
        obj += resid * resid;
    }
    obj += lambda * (fit.item_offset.squaredNorm() + fit.user_offset.squaredNorm() +
                     fit.item_factors.squaredNorm() + fit.user_factors.squaredNorm());
    return obj;
}

} // namespace

AlsFit als_fit(std::span<const RatingTriple> ratings, int n_users, int n_items,
               const AlsOptions& options) {
    if (options.rank < 1) throw std::invalid_argument("als_fit: rank must be >= 1");
    if (options.sweeps < 1) throw std::invalid_argument("als_fit: sweeps must be >= 1");
    if (options.lambda < 0.0) throw std::invalid_argument("als_fit: lambda must be >= 0");
    if (ratings.empty()) throw std::invalid_argument("als_fit: empty rating set");
    const int r = options.rank;

    std::vector<std::vector<int>> by_item(n_items), by_user(n_users);
    for (size_t idx = 0; idx < ratings.size(); ++idx) {
        const auto& t = ratings[idx];
        if (t.user < 0 || t.user >= n_users || t.item < 0 || t.item >= n_items)
            throw std::invalid_argument("als_fit: triple index out of range");
        by_item[t.item].push_back(static_cast<int>(idx));
        by_user[t.user].push_back(static_cast<int>(idx));
    }
    if (options.lambda == 0.0) {
        for (int i = 0; i < n_items; ++i)
            if (!by_item[i].empty() && static_cast<int>(by_item[i].size()) < r + 1)
                throw std::runtime_error("als_fit: underdetermined item block with lambda = 0");
        for (int j = 0; j < n_users; ++j)
            if (!by_user[j].empty() && static_cast<int>(by_user[j].size()) < r + 1)
                throw std::runtime_error("als_fit: underdetermined user block with lambda = 0");
    }

    AlsFit fit;
    fit.lambda = options.lambda;
    fit.item_offset = Eigen::VectorXd::Zero(n_items);
    fit.user_offset = Eigen::VectorXd::Zero(n_users);
    fit.item_factors.resize(n_items, r);
    fit.user_factors.resize(n_users, r);
    RngStream init_rng(options.seed, 0x415);
    const double init_sd = 1.0 / std::sqrt(static_cast<double>(r));
    for (int i = 0; i < n_items; ++i)
        for (int f = 0; f < r; ++f) fit.item_factors(i, f) = init_sd * init_rng.next_normal();
    for (int j = 0; j < n_users; ++j)
        for (int f = 0; f < r; ++f) fit.user_factors(j, f) = init_sd * init_rng.next_normal();
    // offsets start at the item means; user offsets at zero
    for (int i = 0; i < n_items; ++i) {
        if (by_item[i].empty()) continue;
        double m = 0.0;
        for (int idx : by_item[i]) m += ratings[idx].rating;
        fit.item_offset(i) = m / static_cast<double>(by_item[i].size());
    }

    // Solve one side's (offset, factor) blocks jointly given the other side.
    auto solve_items = [&] {
        Eigen::MatrixXd gram(r + 1, r + 1);
        Eigen::VectorXd rhs(r + 1), row_vec(r + 1);
        for (int i = 0; i < n_items; ++i) {
            const auto& idxs = by_item[i];
            if (idxs.empty()) {
                fit.item_offset(i) = 0.0;
                fit.item_factors.row(i).setZero();
                continue;
            }
            gram.setZero();
            gram.diagonal().array() = options.lambda;
            rhs.setZero();
            for (int idx : idxs) {
                const auto& t = ratings[idx];
                row_vec(0) = 1.0;
                row_vec.tail(r) = fit.user_factors.row(t.user).transpose();
                double target = t.rating - fit.user_offset(t.user);
                gram.noalias() += row_vec * row_vec.transpose();
                rhs.noalias() += target * row_vec;
            }
            Eigen::VectorXd sol = Eigen::LDLT<Eigen::MatrixXd>(gram).solve(rhs);
            fit.item_offset(i) = sol(0);
            fit.item_factors.row(i) = sol.tail(r).transpose();
        }
    };
    auto solve_users = [&] {
        Eigen::MatrixXd gram(r + 1, r + 1);
        Eigen::VectorXd rhs(r + 1), row_vec(r + 1);
        for (int j = 0; j < n_users; ++j) {
            const auto& idxs = by_user[j];
            if (idxs.empty()) {
                fit.user_offset(j) = 0.0;
                fit.user_factors.row(j).setZero();
                continue;
            }
            gram.setZero();
            gram.diagonal().array() = options.lambda;
            rhs.setZero();
            for (int idx : idxs) {
                const auto& t = ratings[idx];
                row_vec(0) = 1.0;
                row_vec.tail(r) = fit.item_factors.row(t.item).transpose();
                double target = t.rating - fit.item_offset(t.item);
                gram.noalias() += row_vec * row_vec.transpose();
                rhs.noalias() += target * row_vec;
            }
            Eigen::VectorXd sol = Eigen::LDLT<Eigen::MatrixXd>(gram).solve(rhs);
            fit.user_offset(j) = sol(0);
            fit.user_factors.row(j) = sol.tail(r).transpose();
        }
    };

    fit.objective_trace.reserve(2 * options.sweeps);
    for (int sweep = 0; sweep < options.sweeps; ++sweep) {
        solve_items();
        fit.objective_trace.push_back(als_objective(ratings, fit, options.lambda));
        solve_users();
        fit.objective_trace.push_back(als_objective(ratings, fit, options.lambda));
    }
    return fit;
}

// ---------------------------------------------------------------------------
// Two-stage runs.

const char* regime_name(Regime regime) {
    switch (regime) {
        case Regime::Oracle: return "oracle";
        case Regime::OracleUnbiased: return "oracle_unbiased";
        case Regime::Random: return "random";
        case Regime::Iterated: return "iterated";
    }
    return "unknown";
}

TwoStageResult run_two_stage_ridge(const RidgeTwoStageConfig& config, Regime regime,
                                   uint64_t seed) {
    FeatureModel model(config.model, RngStream(seed, 1));
    RngStream train_rng(seed, 2);
    RngStream train2_rng(seed, 3);
    RngStream test_rng(seed, 4);
    RngStream bench_rng(seed, 5);

    const int n = config.model.n_items;
    const int p = config.model.p_dim;

    FeaturePolicy policy;
    switch (regime) {
        case Regime::Oracle: {
            Dataset train = generate_dataset(model, FeatureModel::oracle_rule(),
                                             FeedbackChannel::AbsoluteBiased,
                                             config.n_train, train_rng);
            policy = fit_feature_policy(train, n, p, config.lambda);
            break;
        }
        case Regime::OracleUnbiased: {
            Dataset train = generate_dataset(model, FeatureModel::oracle_rule(),
                                             FeedbackChannel::UnbiasedQuality,
                                             config.n_train, train_rng);
            policy = fit_feature_policy(train, n, p, config.lambda);
            break;
        }
        case Regime::Random: {
            Dataset train = generate_dataset(model, SelectionRule::uniform_random(),
                                             FeedbackChannel::AbsoluteBiased,
                                             config.n_train, train_rng);
            policy = fit_feature_policy(train, n, p, config.lambda);
            break;
        }
        case Regime::Iterated: {
            Dataset train = generate_dataset(model, SelectionRule::uniform_random(),
                                             FeedbackChannel::AbsoluteBiased,
                                             config.n_train, train_rng);
            FeaturePolicy first = fit_feature_policy(train, n, p, config.lambda);
            Dataset train2 = generate_dataset(model, first.rule(),
                                              FeedbackChannel::AbsoluteBiased,
                                              config.n_train, train2_rng);
            policy = fit_feature_policy(train2, n, p, config.lambda);
            break;
        }
    }

    TwoStageResult result;
    result.lambda = config.lambda;
    result.test_mean_value = evaluate_policy(model, policy.rule(), config.n_test, test_rng);
    result.oracle_benchmark =
        evaluate_policy(model, FeatureModel::oracle_rule(), config.n_test, bench_rng);
    result.zero_benchmark = evaluate_policy(model, FeatureModel::zero_rule(), config.n_test,
                                            RngStream(seed, 6));
    return result;
}

namespace {

std::vector<RatingTriple> to_triples(const Dataset& ds) {
    std::vector<RatingTriple> triples;
    triples.reserve(ds.rows.size());
    for (const auto& row : ds.rows)
        triples.push_back({row.user_id, row.item, row.feedback});
    return triples;
}

// Fit at rank 2q selecting lambda on a held-out slice, then refit on everything.
AlsFit fit_lowrank(const std::vector<RatingTriple>& triples, int n_users, int n_items,
                   const LowRankTwoStageConfig& config, uint64_t seed) {
    const int rank = config.als_rank > 0 ? config.als_rank : 2 * config.model.rank;

    RngStream split_rng(seed, 7);
    std::vector<RatingTriple> fit_set, holdout;
    for (const auto& t : triples) {
        if (split_rng.next_double() < config.validation_fraction)
            holdout.push_back(t);
        else
            fit_set.push_back(t);
    }
    if (holdout.empty() || fit_set.empty()) {
        fit_set = triples;
        holdout = triples;
    }

    double best_lambda = config.lambda_grid.front();
    double best_rmse = std::numeric_limits<double>::infinity();
    for (double lambda : config.lambda_grid) {
        AlsFit f = als_fit(fit_set, n_users, n_items, {rank, lambda, config.sweeps, seed});
        double sse = 0.0;
        for (const auto& t : holdout) {
            double resid = t.rating - f.predict(t.user, t.item);
            sse += resid * resid;
        }
        double rmse = std::sqrt(sse / static_cast<double>(holdout.size()));
        if (rmse < best_rmse) {
            best_rmse = rmse;
            best_lambda = lambda;
        }
    }
    return als_fit(triples, n_users, n_items, {rank, best_lambda, config.sweeps, seed});
}

} // namespace

TwoStageResult run_two_stage_lowrank(const LowRankTwoStageConfig& config, Regime regime,
                                     uint64_t seed) {
    LowRankModel model(config.model, RngStream(seed, 1));
    const int n_users = model.n_users();
    const int n_items = model.n_items();

    LowRankScoreFn oracle = [&model](int user, int item) {
        return model.mean_value(user, item);
    };
    std::vector<std::vector<int>> no_exclusions;

    std::vector<std::vector<int>> trained_items;
    AlsFit fit;
    switch (regime) {
        case Regime::Oracle: {
            Dataset train = generate_lowrank_dataset(model, oracle,
                                                     FeedbackChannel::AbsoluteBiased,
                                                     no_exclusions, RngStream(seed, 2),
                                                     &trained_items);
            fit = fit_lowrank(to_triples(train), n_users, n_items, config, seed);
            break;
        }
        case Regime::OracleUnbiased: {
            Dataset train = generate_lowrank_dataset(model, oracle,
                                                     FeedbackChannel::UnbiasedQuality,
                                                     no_exclusions, RngStream(seed, 2),
                                                     &trained_items);
            fit = fit_lowrank(to_triples(train), n_users, n_items, config, seed);
            break;
        }
        case Regime::Random: {
            Dataset train = generate_lowrank_dataset(model, nullptr,
                                                     FeedbackChannel::AbsoluteBiased,
                                                     no_exclusions, RngStream(seed, 2),
                                                     &trained_items);
            fit = fit_lowrank(to_triples(train), n_users, n_items, config, seed);
            break;
        }
        case Regime::Iterated: {
            std::vector<std::vector<int>> first_items;
            Dataset train1 = generate_lowrank_dataset(model, nullptr,
                                                      FeedbackChannel::AbsoluteBiased,
                                                      no_exclusions, RngStream(seed, 2),
                                                      &first_items);
            AlsFit first = fit_lowrank(to_triples(train1), n_users, n_items, config, seed);
            LowRankScoreFn first_scores = [&first](int user, int item) {
                return first.predict(user, item);
            };
            // second-stage ratings avoid the items already rated in stage one
            Dataset train2 = generate_lowrank_dataset(model, first_scores,
                                                      FeedbackChannel::AbsoluteBiased,
                                                      first_items, RngStream(seed, 3),
                                                      &trained_items);
            fit = fit_lowrank(to_triples(train2), n_users, n_items, config, seed + 1);
            break;
        }
    }

    LowRankScoreFn fitted = [&fit](int user, int item) { return fit.predict(user, item); };
    Dataset test = generate_lowrank_dataset(model, fitted, FeedbackChannel::AbsoluteBiased,
                                            trained_items, RngStream(seed, 4));

    TwoStageResult result;
    result.lambda = fit.lambda;
    result.test_mean_value = lowrank_mean_value(model, test);
    Dataset oracle_test = generate_lowrank_dataset(model, oracle,
                                                   FeedbackChannel::AbsoluteBiased,
                                                   no_exclusions, RngStream(seed, 5));
    result.oracle_benchmark = lowrank_mean_value(model, oracle_test);
    LowRankScoreFn zero = [](int, int) { return 0.0; };
    Dataset zero_test = generate_lowrank_dataset(model, zero,
                                                 FeedbackChannel::AbsoluteBiased,
                                                 no_exclusions, RngStream(seed, 6));
    result.zero_benchmark = lowrank_mean_value(model, zero_test);
    return result;
}

} // namespace recsim
