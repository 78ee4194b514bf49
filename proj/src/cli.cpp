#include "amod/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "amod/campaign.hpp"
#include "amod/config.hpp"

namespace amod {

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"amodsim: event-driven simulator for autonomous mobility-on-demand fleets"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "run a simulation campaign");
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir;
    int parallel = 0;
    run_cmd->add_option("--config", config_path, "campaign config file (flat key=value)");
    run_cmd->add_option("--set", overrides, "override a config key, e.g. --set seats=4")
        ->type_name("KEY=VALUE");
    run_cmd->add_option("--out", out_dir, "output directory (overrides output_dir)");
    run_cmd->add_option("--parallel", parallel, "max concurrently executing runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    CampaignSpec spec;
    try {
        std::optional<std::filesystem::path> file;
        if (!config_path.empty())
            file = config_path;
        spec = load_config(file, overrides);
        if (!out_dir.empty())
            spec.output_dir = out_dir;
        if (parallel > 0)
            spec.max_parallel = parallel;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    std::cout << "campaign: " << spec.run_count() << " run(s) -> " << spec.output_dir.string()
              << " (max " << spec.max_parallel << " in parallel)\n";
    int status = 1;
    try {
        status = run_campaign(spec);
    } catch (const std::exception& e) {
        std::cerr << "campaign failed: " << e.what() << '\n';
        return 1;
    }
    std::cout << (status == 0 ? "all runs completed\n" : "some runs failed, see index.csv\n");
    return status;
}

} // namespace amod
