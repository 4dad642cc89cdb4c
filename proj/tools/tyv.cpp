#include "tyv/harness.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

int cmd_roots(const std::string& type) {
    auto cd = tyv::chevalley(type);
    nlohmann::ordered_json j = tyv::roots_json(*cd);
    std::vector<tyv::ItemResult> res = tyv::run_items(tyv::root_data_items(cd), 1);
    j["checks"] = nlohmann::ordered_json::object();
    bool ok = true;
    for (const auto& r : res) {
        j["checks"][r.id] = r.status;
        ok = ok && r.status == "pass";
    }
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_check(const tyv::SuiteConfig& cfg) {
    tyv::CheckReport rep = tyv::run_suite(cfg);
    std::size_t failed = 0;
    for (const auto& r : rep.items) {
        std::printf("%-5s %-32s %-16s %6lldms  %s\n", r.status == "pass" ? "PASS" : r.status == "fail" ? "FAIL" : "ERROR",
                    r.id.c_str(), r.anchor.c_str(), r.millis, r.detail.c_str());
        failed += r.status != "pass";
    }
    std::printf("%s: %zu items, %zu not passing\n", rep.suite.c_str(), rep.items.size(), failed);
    if (!cfg.json_path.empty()) tyv::write_report(rep, cfg.json_path);
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of twisted Yangian presentations"};
    app.set_version_flag("--version", tyv::kVersion);
    app.require_subcommand(1);

    std::string roots_type;
    auto* roots = app.add_subcommand("roots", "Print root data and run the root-data checks");
    roots->add_option("--type", roots_type, "Lie type, e.g. C2")->required();

    tyv::SuiteConfig cfg;
    std::string mutate, type;
    int order = 0;
    auto* check = app.add_subcommand("check", "Run a verification suite");
    check->add_option("suite", cfg.suite, "classical | embedding | casimir | rank1 | rtt | all")->required();
    check->add_option("--type", type, "Lie type; default is the full list for the suite");
    check->add_option("--zdeg", cfg.zdeg, "z-degree truncation of the current algebra");
    check->add_option("--order", order, "series order (rank1 estimates: 8, rtt: 6)");
    check->add_option("--maxidx", cfg.maxidx, "largest Drinfeld generator index");
    check->add_option("--json", cfg.json_path, "write a JSON report here");
    check->add_option("--mutate", mutate, "replace relation coefficients, ID:VALUE[,ID:VALUE]");
    check->add_option("--jobs", cfg.jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*roots) return cmd_roots(roots_type);
        if (!type.empty()) cfg.type = type;
        if (check->count("--order")) cfg.order = order;
        if (!mutate.empty()) {
            try {
                cfg.mutation = tyv::Mutation::parse(mutate);
            } catch (const std::exception& e) {
                throw tyv::ConfigError(e.what());
            }
        }
        return cmd_check(cfg);
    } catch (const tyv::ConfigError& e) {
        std::fprintf(stderr, "tyv: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "tyv: internal error: %s\n", e.what());
        return 2;
    }
}
