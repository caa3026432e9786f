#include "recsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

namespace recsim {

PreferenceSpec PreferencePrior::draw(RngStream& rng) const {
    double param = rng.next_uniform(lo, hi);
    switch (family) {
        case PreferenceFamily::Bernoulli:
            return Bernoulli{param};
        case PreferenceFamily::Normal:
            return Normal{0.0, param};
        case PreferenceFamily::Exponential: {
            // param is the scale 1/rate; clamp away from zero
            double scale = std::max(param, 1e-12);
            return Exponential{1.0 / scale};
        }
        case PreferenceFamily::Pareto:
            return Pareto{param, 1.0};
    }
    throw std::invalid_argument("PreferencePrior: unknown family");
}

void SimConfig::validate() const {
    if (horizon < 1) throw std::invalid_argument("SimConfig: horizon must be >= 1");
    int k = item_count;
    if (qualities) {
        if (qualities->empty()) throw std::invalid_argument("SimConfig: empty qualities");
        k = static_cast<int>(qualities->size());
        for (double q : *qualities)
            if (!std::isfinite(q)) throw std::invalid_argument("SimConfig: non-finite quality");
    }
    if (k < 1) throw std::invalid_argument("SimConfig: item_count must be >= 1");
    if (preferences) {
        if (static_cast<int>(preferences->size()) != k)
            throw std::invalid_argument("SimConfig: preference spec count must equal K");
        for (const auto& spec : *preferences) recsim::validate(spec);
    } else if (!preference_prior) {
        throw std::invalid_argument("SimConfig: need preferences or preference_prior");
    }
    recsim::validate(noise);
    if (record_mode == RecordMode::Stride && record_stride < 1)
        throw std::invalid_argument("SimConfig: record_stride must be >= 1");
}

SimulationResult run_episode(const SimConfig& config) {
    config.validate();
    RngStream rng(config.seed, config.stream_id);
    RngStream param_rng = rng.split(0xA11CE);
    RngStream step_rng = rng.split(0xB0B);
    RngStream scorer_rng = rng.split(0xCAFE);

    const int k = config.qualities ? static_cast<int>(config.qualities->size())
                                   : config.item_count;

    Catalog catalog;
    if (config.qualities) {
        catalog.qualities = *config.qualities;
    } else {
        catalog.qualities.resize(k);
        for (double& q : catalog.qualities) q = param_rng.next_double();
    }

    std::vector<PreferenceSpec> prefs;
    if (config.preferences) {
        prefs = *config.preferences;
    } else {
        prefs.reserve(k);
        for (int i = 0; i < k; ++i) prefs.push_back(config.preference_prior->draw(param_rng));
    }

    ScorerSpec scorer = config.scorer;
    if (scorer.kind == ScorerKind::Oracle && scorer.oracle_scores.empty())
        scorer.oracle_scores = catalog.qualities;

    ScoreState state(scorer, k);
    SimulationResult result;
    result.qualities = catalog.qualities;
    result.cumulative_regret.resize(config.horizon);
    result.selection_counts.assign(k, 0);

    AgentDraw draw;
    draw.theta.resize(k);
    draw.epsilon.resize(k);

    double cum_regret = 0.0;
    for (long long t = 1; t <= config.horizon; ++t) {
        for (int i = 0; i < k; ++i) draw.theta[i] = sample_preference(prefs[i], step_rng);
        for (int i = 0; i < k; ++i) draw.epsilon[i] = sample_noise(config.noise, step_rng);

        std::vector<double> scores = state.scores(static_cast<double>(t), scorer_rng);
        int chosen = select_item(scores, draw.theta);
        double value = realize_value(catalog, draw, chosen);
        double feedback =
            make_feedback(config.channel, value, draw.theta[chosen], scores[chosen]);
        state.observe(chosen, feedback);

        cum_regret += step_regret(catalog, draw.theta, chosen);
        result.cumulative_regret[t - 1] = cum_regret;
        result.selection_counts[chosen] += 1;
        result.realized_value_sum += value;

        if (config.record_mode == RecordMode::Full ||
            (config.record_mode == RecordMode::Stride &&
             (t - 1) % config.record_stride == 0)) {
            result.records.push_back({t, chosen, value, feedback, scores[chosen]});
        }
    }
    return result;
}

BatchResult run_batch(const SimConfig& config, int replications, bool parallel) {
    if (replications < 1) throw std::invalid_argument("run_batch: replications must be >= 1");
    config.validate();

    BatchResult out;
    out.paths.resize(replications);

    auto run_one = [&config](int r) {
        SimConfig rep = config;
        rep.stream_id = static_cast<uint64_t>(r);
        return run_episode(rep).cumulative_regret;
    };

    if (parallel && replications > 1) {
        std::vector<std::future<std::vector<double>>> futures(replications);
        for (int r = 0; r < replications; ++r)
            futures[r] = std::async(std::launch::async, run_one, r);
        for (int r = 0; r < replications; ++r) out.paths[r] = futures[r].get();
    } else {
        for (int r = 0; r < replications; ++r) out.paths[r] = run_one(r);
    }

    const size_t t_len = out.paths[0].size();
    out.mean_path.assign(t_len, 0.0);
    out.stderr_path.assign(t_len, 0.0);
    for (const auto& path : out.paths)
        for (size_t t = 0; t < t_len; ++t) out.mean_path[t] += path[t];
    for (double& m : out.mean_path) m /= replications;
    if (replications > 1) {
        for (const auto& path : out.paths)
            for (size_t t = 0; t < t_len; ++t) {
                double d = path[t] - out.mean_path[t];
                out.stderr_path[t] += d * d;
            }
        for (double& s : out.stderr_path)
            s = std::sqrt(s / (replications - 1.0) / replications);
    }
    return out;
}

Dataset generate_dataset(UserModel& model, const SelectionRule& rule,
                         FeedbackChannel channel, long long n_obs, RngStream rng) {
    if (n_obs < 1) throw std::invalid_argument("generate_dataset: n_obs must be >= 1");
    const int k = model.item_count();
    Dataset ds;
    ds.rows.reserve(n_obs);
    for (long long step = 0; step < n_obs; ++step) {
        UserModel::UserDraw draw = model.draw_user(rng);
        if (static_cast<int>(draw.base.size()) != k)
            throw std::invalid_argument("generate_dataset: model draw dimension mismatch");
        int chosen;
        double score_chosen = 0.0;
        if (rule.kind == SelectionRule::Kind::UniformRandom) {
            chosen = static_cast<int>(rng.next_below(static_cast<uint64_t>(k)));
        } else {
            std::vector<double> scores = rule.score_fn(draw);
            if (static_cast<int>(scores.size()) != k)
                throw std::invalid_argument("generate_dataset: score dimension mismatch");
            chosen = select_item(scores, draw.preference);
            score_chosen = scores[chosen];
        }
        double value = UserModel::value_of(draw, chosen);
        double feedback = make_feedback(channel, value, draw.preference[chosen], score_chosen);

        DatasetRow row;
        row.step = step;
        row.user_id = draw.user_id;
        row.item = chosen;
        if (draw.feature_dim > 0) {
            ds.feature_dim = draw.feature_dim;
            auto begin = draw.features.begin() + static_cast<long>(chosen) * draw.feature_dim;
            row.features.assign(begin, begin + draw.feature_dim);
        }
        row.feedback = feedback;
        row.value = value;
        ds.rows.push_back(std::move(row));
    }
    return ds;
}

double evaluate_policy(UserModel& model, const SelectionRule& rule, long long n_test,
                       RngStream rng) {
    Dataset ds = generate_dataset(model, rule, FeedbackChannel::AbsoluteBiased, n_test, rng);
    double sum = 0.0;
    for (const auto& row : ds.rows) sum += row.value;
    return sum / static_cast<double>(ds.rows.size());
}

SimpleCatalogModel::SimpleCatalogModel(Catalog catalog, std::vector<PreferenceSpec> prefs,
                                       NoiseSpec noise)
    : catalog_(std::move(catalog)), prefs_(std::move(prefs)), noise_(noise) {
    if (prefs_.size() != catalog_.qualities.size())
        throw std::invalid_argument("SimpleCatalogModel: per-item spec count must equal K");
    for (const auto& spec : prefs_) recsim::validate(spec);
}

UserModel::UserDraw SimpleCatalogModel::draw_user(RngStream& rng) {
    const int k = item_count();
    UserDraw d;
    d.base = catalog_.qualities;
    d.preference.resize(k);
    d.noise.resize(k);
    for (int i = 0; i < k; ++i) d.preference[i] = sample_preference(prefs_[i], rng);
    for (int i = 0; i < k; ++i) d.noise[i] = sample_noise(noise_, rng);
    return d;
}

} // namespace recsim
