#include "recsim/config.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include "recsim/analysis.hpp"
#include "recsim/personalization.hpp"

namespace recsim {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// Key-checked reading.

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument("config error at '" + path + "': " + what);
}

// Reads keys out of one JSON object, applying defaults and range checks, and
// rejects any key that was never asked for.
class ParamReader {
public:
    ParamReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) fail(path_, "expected an object");
    }

    double number(const std::string& key, double def,
                  double lo = -std::numeric_limits<double>::infinity(),
                  double hi = std::numeric_limits<double>::infinity()) {
        seen_.insert(key);
        if (!j_.contains(key)) return check_range(key, def, lo, hi);
        if (!j_.at(key).is_number()) fail(path_ + "." + key, "expected a number");
        return check_range(key, j_.at(key).get<double>(), lo, hi);
    }

    long long integer(const std::string& key, long long def, long long lo, long long hi) {
        seen_.insert(key);
        if (!j_.contains(key)) return def;
        if (!j_.at(key).is_number_integer()) fail(path_ + "." + key, "expected an integer");
        long long v = j_.at(key).get<long long>();
        if (v < lo || v > hi)
            fail(path_ + "." + key,
                 "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
        return v;
    }

    uint64_t u64(const std::string& key, uint64_t def) {
        seen_.insert(key);
        if (!j_.contains(key)) return def;
        if (!j_.at(key).is_number_unsigned() && !j_.at(key).is_number_integer())
            fail(path_ + "." + key, "expected an unsigned integer");
        return j_.at(key).get<uint64_t>();
    }

    std::string str(const std::string& key, const std::string& def,
                    const std::set<std::string>& allowed = {}) {
        seen_.insert(key);
        std::string v = def;
        if (j_.contains(key)) {
            if (!j_.at(key).is_string()) fail(path_ + "." + key, "expected a string");
            v = j_.at(key).get<std::string>();
        }
        if (!allowed.empty() && !allowed.count(v))
            fail(path_ + "." + key, "unknown value '" + v + "'");
        return v;
    }

    bool boolean(const std::string& key, bool def) {
        seen_.insert(key);
        if (!j_.contains(key)) return def;
        if (!j_.at(key).is_boolean()) fail(path_ + "." + key, "expected a boolean");
        return j_.at(key).get<bool>();
    }

    bool has(const std::string& key) {
        seen_.insert(key);
        return j_.contains(key);
    }

    const json& raw(const std::string& key) {
        seen_.insert(key);
        return j_.at(key);
    }

    std::string subpath(const std::string& key) const { return path_ + "." + key; }

    void finish() const {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!seen_.count(it.key())) fail(path_ + "." + it.key(), "unknown key");
    }

private:
    double check_range(const std::string& key, double v, double lo, double hi) {
        if (!(v >= lo && v <= hi))
            fail(path_ + "." + key, "value " + format_double(v) + " outside [" +
                                        format_double(lo) + ", " + format_double(hi) + "]");
        return v;
    }

    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

const std::set<std::string> kScenarios = {"RegretCompare",  "BiasThresholdSweep",
                                          "BoundReport",    "TwoStageRidge",
                                          "TwoStageLowRank", "Custom"};

const std::set<std::string> kFamilies = {"bernoulli", "normal", "exponential", "pareto"};

PreferencePrior preset_prior(const std::string& family, int item_count) {
    if (family == "bernoulli")
        return {PreferenceFamily::Bernoulli, 0.0, 2.0 * std::log(item_count) / (3.0 * item_count)};
    if (family == "normal") return {PreferenceFamily::Normal, 0.0, 1.0};
    if (family == "exponential") return {PreferenceFamily::Exponential, 0.0, 1.0};
    return {PreferenceFamily::Pareto, 2.0, 4.0};
}

} // namespace

json preference_to_json(const PreferenceSpec& spec) {
    struct ToJson {
        json operator()(const Bernoulli& d) const {
            return {{"family", "bernoulli"}, {"p", d.p}};
        }
        json operator()(const Normal& d) const {
            return {{"family", "normal"}, {"mu", d.mu}, {"sigma", d.sigma}};
        }
        json operator()(const Exponential& d) const {
            return {{"family", "exponential"}, {"rate", d.rate}};
        }
        json operator()(const Pareto& d) const {
            return {{"family", "pareto"}, {"shape", d.shape}, {"minimum", d.minimum}};
        }
    };
    return std::visit(ToJson{}, spec);
}

PreferenceSpec preference_from_json(const json& j) {
    ParamReader r(j, "preference");
    std::string family = r.str("family", "", kFamilies);
    PreferenceSpec spec;
    if (family == "bernoulli") {
        spec = Bernoulli{r.number("p", 0.5, 0.0, 1.0)};
    } else if (family == "normal") {
        spec = Normal{r.number("mu", 0.0), r.number("sigma", 1.0, 0.0)};
    } else if (family == "exponential") {
        spec = Exponential{r.number("rate", 1.0)};
    } else {
        spec = Pareto{r.number("shape", 2.0), r.number("minimum", 1.0)};
    }
    r.finish();
    validate(spec);
    return spec;
}

// ---------------------------------------------------------------------------
// Per-scenario parameter resolution (fills every default).

namespace {

json resolve_regret_compare(ParamReader& p) {
    json out;
    out["item_count"] = p.integer("item_count", 50, 1, 1000000);
    out["horizon"] = p.integer("horizon", 5000, 1, 100000000);
    out["replications"] = p.integer("replications", 50, 1, 100000);
    out["noise_sigma"] = p.number("noise_sigma", 0.0, 0.0);
    out["output_stride"] = p.integer("output_stride", 10, 1, 1000000);
    json families = json::array({"bernoulli", "normal", "exponential", "pareto"});
    if (p.has("families")) {
        const json& f = p.raw("families");
        if (!f.is_array() || f.empty()) fail(p.subpath("families"), "expected a nonempty array");
        for (const auto& name : f)
            if (!name.is_string() || !kFamilies.count(name.get<std::string>()))
                fail(p.subpath("families"), "unknown family");
        families = f;
    }
    out["families"] = families;
    return out;
}

json resolve_threshold_sweep(ParamReader& p) {
    json out;
    out["k_min"] = p.integer("k_min", 2, 1, 10000000);
    out["k_max"] = p.integer("k_max", 10000, 1, 10000000);
    out["p_rule"] = p.str("p_rule", "half_log_over_k", {"half_log_over_k", "fixed"});
    out["p"] = p.number("p", 0.02, 0.0, 1.0);
    if (out["k_min"].get<long long>() > out["k_max"].get<long long>())
        fail(p.subpath("k_min"), "k_min must not exceed k_max");
    return out;
}

json resolve_bound_report(ParamReader& p) {
    json out;
    out["delta_min"] = p.number("delta_min", 0.5);
    out["sigma"] = p.number("sigma", 1.0, 0.0);
    out["item_count"] = p.integer("item_count", 2, 1, 10000000);
    out["horizon"] = p.integer("horizon", 5000, 1, std::numeric_limits<long long>::max());
    out["c"] = p.number("c", 0.25, 0.0, 1.0);
    out["alpha"] = p.number("alpha", 1.0);
    return out;
}

json resolve_two_stage_ridge(ParamReader& p) {
    json out;
    out["n_items"] = p.integer("n_items", 100, 1, 100000);
    out["p_dim"] = p.integer("p_dim", 20, 1, 10000);
    out["sigma_theta"] = p.number("sigma_theta", 0.1, 0.0);
    out["noise_sigma"] = p.number("noise_sigma", 1.0, 0.0);
    out["weight_scale_is_variance"] = p.boolean("weight_scale_is_variance", false);
    out["n_train"] = p.integer("n_train", 20000, 1, 100000000);
    out["n_test"] = p.integer("n_test", 20000, 1, 100000000);
    out["lambda"] = p.number("lambda", 1.0, 0.0);
    out["seeds"] = p.integer("seeds", 5, 1, 10000);
    return out;
}

json resolve_two_stage_lowrank(ParamReader& p) {
    json out;
    out["n_users"] = p.integer("n_users", 2000, 1, 1000000);
    out["n_items"] = p.integer("n_items", 500, 1, 1000000);
    out["rank"] = p.integer("rank", 4, 1, 1000);
    out["noise_sigma"] = p.number("noise_sigma", 0.1, 0.0);
    out["ratings_per_user"] = p.integer("ratings_per_user", 40, 1, 1000000);
    out["sweeps"] = p.integer("sweeps", 20, 1, 10000);
    out["seeds"] = p.integer("seeds", 5, 1, 10000);
    json grid = json::array({0.01, 0.1, 1.0, 10.0});
    if (p.has("lambda_grid")) {
        const json& g = p.raw("lambda_grid");
        if (!g.is_array() || g.empty())
            fail(p.subpath("lambda_grid"), "expected a nonempty array of numbers");
        for (const auto& v : g)
            if (!v.is_number() || v.get<double>() < 0.0)
                fail(p.subpath("lambda_grid"), "lambdas must be numbers >= 0");
        grid = g;
    }
    out["lambda_grid"] = grid;
    return out;
}

json resolve_custom(ParamReader& p) {
    json out;
    out["horizon"] = p.integer("horizon", 5000, 1, 100000000);
    out["replications"] = p.integer("replications", 50, 1, 100000);
    out["item_count"] = p.integer("item_count", 50, 1, 1000000);
    out["noise_sigma"] = p.number("noise_sigma", 0.0, 0.0);
    out["channel"] = p.str("channel", "absolute", {"absolute", "unbiased", "relative"});
    out["scorer"] = p.str("scorer", "empirical",
                          {"empirical", "clipped", "ucb", "thompson", "oracle", "zero"});
    out["scorer_sigma"] = p.number("scorer_sigma", 1.0, 0.0);
    out["output_stride"] = p.integer("output_stride", 10, 1, 1000000);
    if (p.has("qualities")) {
        const json& q = p.raw("qualities");
        if (!q.is_array() || q.empty())
            fail(p.subpath("qualities"), "expected a nonempty array of numbers");
        for (const auto& v : q)
            if (!v.is_number()) fail(p.subpath("qualities"), "expected numbers");
        out["qualities"] = q;
        out["item_count"] = q.size();
    }
    if (p.has("preference")) {
        PreferenceSpec spec = preference_from_json(p.raw("preference"));
        out["preference"] = preference_to_json(spec);
    } else {
        std::string fam = "normal";
        double lo = 0.0, hi = 1.0;
        if (p.has("preference_prior")) {
            ParamReader pr(p.raw("preference_prior"), p.subpath("preference_prior"));
            fam = pr.str("family", "normal", kFamilies);
            PreferencePrior preset = preset_prior(fam, out["item_count"].get<int>());
            lo = pr.number("lo", preset.lo);
            hi = pr.number("hi", preset.hi);
            pr.finish();
        } else {
            PreferencePrior preset = preset_prior(fam, out["item_count"].get<int>());
            lo = preset.lo;
            hi = preset.hi;
        }
        if (hi < lo) fail(p.subpath("preference_prior"), "hi must be >= lo");
        out["preference_prior"] = {{"family", fam}, {"lo", lo}, {"hi", hi}};
    }
    return out;
}

json resolve_parameters(const std::string& scenario, const json& params) {
    ParamReader p(params, "parameters");
    json out;
    if (scenario == "RegretCompare") out = resolve_regret_compare(p);
    else if (scenario == "BiasThresholdSweep") out = resolve_threshold_sweep(p);
    else if (scenario == "BoundReport") out = resolve_bound_report(p);
    else if (scenario == "TwoStageRidge") out = resolve_two_stage_ridge(p);
    else if (scenario == "TwoStageLowRank") out = resolve_two_stage_lowrank(p);
    else out = resolve_custom(p);
    p.finish();
    return out;
}

} // namespace

ScenarioConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    ParamReader top(doc, "$");
    ScenarioConfig config;
    config.scenario = top.str("scenario", "Custom", kScenarios);
    config.seed = top.u64("seed", 0);
    config.output_dir = top.str("output_dir", "out");
    json params = json::object();
    if (top.has("parameters")) params = top.raw("parameters");
    top.finish();
    config.parameters = resolve_parameters(config.scenario, params);
    return config;
}

json to_json(const ScenarioConfig& config) {
    return {{"scenario", config.scenario},
            {"seed", config.seed},
            {"output_dir", config.output_dir},
            {"parameters", config.parameters}};
}

// ---------------------------------------------------------------------------
// Scenario execution.

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string config_comment(const ScenarioConfig& config) {
    return "# config: " + to_json(config).dump() + "\n";
}

std::string regret_csv(const ScenarioConfig& config, const BatchResult& batch,
                       long long stride) {
    std::string out = config_comment(config);
    out += "replication,t,cumulative_regret\n";
    for (size_t r = 0; r < batch.paths.size(); ++r) {
        const auto& path = batch.paths[r];
        for (size_t t = stride - 1; t < path.size(); t += stride) {
            out += std::to_string(r);
            out += ',';
            out += std::to_string(t + 1);
            out += ',';
            out += format_double(path[t]);
            out += '\n';
        }
    }
    return out;
}

SimConfig custom_sim_config(const json& p, uint64_t seed) {
    SimConfig sim;
    sim.horizon = p.at("horizon").get<long long>();
    sim.item_count = p.at("item_count").get<int>();
    sim.noise = NoiseSpec{p.at("noise_sigma").get<double>()};
    sim.seed = seed;
    std::string channel = p.at("channel").get<std::string>();
    sim.channel = channel == "absolute"   ? FeedbackChannel::AbsoluteBiased
                  : channel == "unbiased" ? FeedbackChannel::UnbiasedQuality
                                          : FeedbackChannel::RelativeToExpectation;
    std::string scorer = p.at("scorer").get<std::string>();
    sim.scorer.sigma = p.at("scorer_sigma").get<double>();
    sim.scorer.kind = scorer == "empirical" ? ScorerKind::EmpiricalAverage
                      : scorer == "clipped" ? ScorerKind::ClippedAverage
                      : scorer == "ucb"     ? ScorerKind::Ucb
                      : scorer == "thompson" ? ScorerKind::GaussianThompson
                      : scorer == "oracle"  ? ScorerKind::Oracle
                                            : ScorerKind::Zero;
    if (p.contains("qualities"))
        sim.qualities = p.at("qualities").get<std::vector<double>>();
    if (p.contains("preference")) {
        PreferenceSpec spec = preference_from_json(p.at("preference"));
        sim.preferences = std::vector<PreferenceSpec>(sim.item_count, spec);
    } else {
        const json& prior = p.at("preference_prior");
        std::string fam = prior.at("family").get<std::string>();
        PreferenceFamily family = fam == "bernoulli"   ? PreferenceFamily::Bernoulli
                                  : fam == "normal"     ? PreferenceFamily::Normal
                                  : fam == "exponential" ? PreferenceFamily::Exponential
                                                         : PreferenceFamily::Pareto;
        sim.preference_prior =
            PreferencePrior{family, prior.at("lo").get<double>(), prior.at("hi").get<double>()};
    }
    return sim;
}

void run_regret_compare(const ScenarioConfig& config, const fs::path& dir) {
    const json& p = config.parameters;
    const int k = p.at("item_count").get<int>();
    const long long stride = p.at("output_stride").get<long long>();
    const int reps = p.at("replications").get<int>();

    json classification;
    for (const auto& fam_json : p.at("families")) {
        std::string family = fam_json.get<std::string>();
        SimConfig sim;
        sim.item_count = k;
        sim.horizon = p.at("horizon").get<long long>();
        sim.noise = NoiseSpec{p.at("noise_sigma").get<double>()};
        sim.preference_prior = preset_prior(family, k);
        sim.seed = config.seed;

        SimConfig biased = sim;
        biased.scorer.kind = ScorerKind::EmpiricalAverage;
        biased.channel = FeedbackChannel::AbsoluteBiased;
        SimConfig unbiased = sim;
        unbiased.scorer.kind = ScorerKind::ClippedAverage;
        unbiased.channel = FeedbackChannel::UnbiasedQuality;

        BatchResult biased_batch = run_batch(biased, reps);
        BatchResult unbiased_batch = run_batch(unbiased, reps);
        write_file(dir / (family + "_biased.csv"),
                   regret_csv(config, biased_batch, stride));
        write_file(dir / (family + "_unbiased.csv"),
                   regret_csv(config, unbiased_batch, stride));

        GrowthFit fb = classify_growth(biased_batch.mean_path);
        GrowthFit fu = classify_growth(unbiased_batch.mean_path);
        classification[family] = {
            {"biased",
             {{"classification", growth_class_name(fb.classification)},
              {"linear_slope", fb.linear_slope},
              {"linear_r2", fb.linear_r2},
              {"log_coefficient", fb.log_coefficient},
              {"log_r2", fb.log_r2},
              {"final_mean_regret", biased_batch.final_mean_regret()}}},
            {"unbiased",
             {{"classification", growth_class_name(fu.classification)},
              {"linear_slope", fu.linear_slope},
              {"linear_r2", fu.linear_r2},
              {"log_coefficient", fu.log_coefficient},
              {"log_r2", fu.log_r2},
              {"final_mean_regret", unbiased_batch.final_mean_regret()}}}};
    }
    json out = {{"config", to_json(config)}, {"classification", classification}};
    write_file(dir / "classification.json", out.dump(2) + "\n");
}

void run_threshold_sweep(const ScenarioConfig& config, const fs::path& dir) {
    const json& p = config.parameters;
    const long long k_min = p.at("k_min").get<long long>();
    const long long k_max = p.at("k_max").get<long long>();
    const bool fixed = p.at("p_rule").get<std::string>() == "fixed";
    const double fixed_p = p.at("p").get<double>();

    std::string csv = config_comment(config);
    csv += "K,p,threshold\n";
    double min_threshold = std::numeric_limits<double>::infinity();
    for (long long k = k_min; k <= k_max; ++k) {
        double pk = fixed ? fixed_p : std::log(static_cast<double>(k)) / (2.0 * k);
        if (!(pk > 0.0 && pk < 1.0)) continue;
        double th = bias_threshold(static_cast<int>(k), pk);
        min_threshold = std::min(min_threshold, th);
        csv += std::to_string(k) + ',' + format_double(pk) + ',' + format_double(th) + '\n';
    }
    write_file(dir / "thresholds.csv", csv);
    json out = {{"config", to_json(config)}, {"min_threshold", min_threshold}};
    write_file(dir / "thresholds.json", out.dump(2) + "\n");
}

void run_bound_report(const ScenarioConfig& config, const fs::path& dir) {
    const json& p = config.parameters;
    BoundParams params;
    params.delta_min = p.at("delta_min").get<double>();
    params.sigma = p.at("sigma").get<double>();
    params.item_count = p.at("item_count").get<int>();
    params.horizon = p.at("horizon").get<long long>();
    params.c = p.at("c").get<double>();
    params.alpha = p.at("alpha").get<double>();
    json out = {{"config", to_json(config)}, {"bound", regret_bound(params)}};
    write_file(dir / "bound.json", out.dump(2) + "\n");
}

json two_stage_to_json(const TwoStageResult& r) {
    return {{"test_mean_value", r.test_mean_value},
            {"oracle_benchmark", r.oracle_benchmark},
            {"zero_benchmark", r.zero_benchmark},
            {"lambda", r.lambda}};
}

void run_two_stage_ridge_scenario(const ScenarioConfig& config, const fs::path& dir) {
    const json& p = config.parameters;
    RidgeTwoStageConfig rc;
    rc.model.n_items = p.at("n_items").get<int>();
    rc.model.p_dim = p.at("p_dim").get<int>();
    rc.model.sigma_theta = p.at("sigma_theta").get<double>();
    rc.model.noise_sigma = p.at("noise_sigma").get<double>();
    rc.model.weight_scale_is_variance = p.at("weight_scale_is_variance").get<bool>();
    rc.n_train = p.at("n_train").get<long long>();
    rc.n_test = p.at("n_test").get<long long>();
    rc.lambda = p.at("lambda").get<double>();
    const int seeds = p.at("seeds").get<int>();

    json results = json::array();
    for (int s = 0; s < seeds; ++s) {
        uint64_t seed = config.seed + static_cast<uint64_t>(s);
        json per_seed = {{"seed", seed}, {"experiment", "Ridge"}};
        for (Regime regime : {Regime::Oracle, Regime::OracleUnbiased, Regime::Random,
                              Regime::Iterated}) {
            TwoStageResult r = run_two_stage_ridge(rc, regime, seed);
            per_seed[regime_name(regime)] = two_stage_to_json(r);
        }
        results.push_back(per_seed);
    }
    json out = {{"config", to_json(config)}, {"results", results}};
    write_file(dir / "two_stage_ridge.json", out.dump(2) + "\n");
}

void run_two_stage_lowrank_scenario(const ScenarioConfig& config, const fs::path& dir) {
    const json& p = config.parameters;
    LowRankTwoStageConfig lc;
    lc.model.n_users = p.at("n_users").get<int>();
    lc.model.n_items = p.at("n_items").get<int>();
    lc.model.rank = p.at("rank").get<int>();
    lc.model.noise_sigma = p.at("noise_sigma").get<double>();
    lc.model.ratings_per_user = p.at("ratings_per_user").get<int>();
    lc.sweeps = p.at("sweeps").get<int>();
    lc.lambda_grid = p.at("lambda_grid").get<std::vector<double>>();
    const int seeds = p.at("seeds").get<int>();

    json results = json::array();
    for (int s = 0; s < seeds; ++s) {
        uint64_t seed = config.seed + static_cast<uint64_t>(s);
        json per_seed = {{"seed", seed}, {"experiment", "LowRank"}};
        for (Regime regime : {Regime::Oracle, Regime::OracleUnbiased, Regime::Random,
                              Regime::Iterated}) {
            TwoStageResult r = run_two_stage_lowrank(lc, regime, seed);
            per_seed[regime_name(regime)] = two_stage_to_json(r);
        }
        results.push_back(per_seed);
    }
    json out = {{"config", to_json(config)}, {"results", results}};
    write_file(dir / "two_stage_lowrank.json", out.dump(2) + "\n");
}

void run_custom(const ScenarioConfig& config, const fs::path& dir) {
    const json& p = config.parameters;
    SimConfig sim = custom_sim_config(p, config.seed);
    const int reps = p.at("replications").get<int>();
    BatchResult batch = run_batch(sim, reps);
    write_file(dir / "regret.csv",
               regret_csv(config, batch, p.at("output_stride").get<long long>()));

    // selection-count histogram from replication 0
    SimConfig rep0 = sim;
    rep0.stream_id = 0;
    SimulationResult first = run_episode(rep0);
    json summary = {{"config", to_json(config)},
                    {"final_mean_regret", batch.final_mean_regret()},
                    {"final_stderr", batch.stderr_path.back()},
                    {"selection_counts", first.selection_counts}};
    if (batch.mean_path.size() >= 100) {
        GrowthFit fit = classify_growth(batch.mean_path);
        summary["classification"] = growth_class_name(fit.classification);
        summary["linear_slope"] = fit.linear_slope;
        summary["linear_r2"] = fit.linear_r2;
        summary["log_coefficient"] = fit.log_coefficient;
        summary["log_r2"] = fit.log_r2;
    }
    write_file(dir / "summary.json", summary.dump(2) + "\n");
}

} // namespace

int run_scenario(const ScenarioConfig& config) {
    fs::path dir(config.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw std::runtime_error("invalid output directory: " + config.output_dir);

    if (config.scenario == "RegretCompare") run_regret_compare(config, dir);
    else if (config.scenario == "BiasThresholdSweep") run_threshold_sweep(config, dir);
    else if (config.scenario == "BoundReport") run_bound_report(config, dir);
    else if (config.scenario == "TwoStageRidge") run_two_stage_ridge_scenario(config, dir);
    else if (config.scenario == "TwoStageLowRank") run_two_stage_lowrank_scenario(config, dir);
    else run_custom(config, dir);
    return 0;
}

} // namespace recsim
