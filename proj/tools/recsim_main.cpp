#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "recsim/config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"recsim: feedback-loop recommendation simulations"};

    std::string config_path;
    std::string scenario;
    std::string out_dir;
    uint64_t seed = 0;
    bool seed_set = false;
    long long reps = -1;
    long long horizon = -1;

    app.add_option("--config", config_path, "JSON config file; omit to use defaults");
    app.add_option("--scenario", scenario,
                   "Scenario name (RegretCompare, BiasThresholdSweep, BoundReport, "
                   "TwoStageRidge, TwoStageLowRank, Custom); overrides the config");
    app.add_option("--seed", seed, "Master seed override")->each([&](const std::string&) {
        seed_set = true;
    });
    app.add_option("--out", out_dir, "Output directory override");
    app.add_option("--reps", reps, "Replication-count override");
    app.add_option("--horizon", horizon, "Horizon override");

    CLI11_PARSE(app, argc, argv);

    try {
        std::string text = "{}";
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "error: cannot read config file " << config_path << "\n";
                return 1;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }

        // apply CLI overrides onto the raw document, then re-validate
        nlohmann::json doc = nlohmann::json::parse(text);
        if (!scenario.empty()) doc["scenario"] = scenario;
        if (seed_set) doc["seed"] = seed;
        if (!out_dir.empty()) doc["output_dir"] = out_dir;
        if (reps >= 0) doc["parameters"]["replications"] = reps;
        if (horizon >= 0) doc["parameters"]["horizon"] = horizon;

        recsim::ScenarioConfig config = recsim::parse_config(doc.dump());
        int status = recsim::run_scenario(config);
        if (status == 0)
            std::cout << "wrote results for scenario " << config.scenario << " to "
                      << config.output_dir << "\n";
        return status;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
