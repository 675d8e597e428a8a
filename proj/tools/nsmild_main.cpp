#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "nsmild/checks.hpp"
#include "nsmild/config.hpp"
#include "nsmild/parallel.hpp"
#include "nsmild/report.hpp"

int main(int argc, char** argv) {
    nsmild::apply_thread_cap();

    CLI::App app{"nsmild - numerical verification of mild Navier-Stokes solution properties"};
    app.require_subcommand(1);

    std::string config_path, out_dir, format;
    long long seed = -1;
    for (const char* kind : {"simulate", "verify-weak", "kato", "kernels", "holder", "all"}) {
        CLI::App* sub = app.add_subcommand(kind, std::string("run the ") + kind + " pipeline");
        sub->add_option("--config", config_path, "configuration file (key = value lines)");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--seed", seed, "random seed override");
        sub->add_option("--format", format, "report format: csv or json");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        nsmild::ExperimentConfig cfg;
        if (!config_path.empty()) cfg = nsmild::ExperimentConfig::from_file(config_path);
        cfg.kind = app.get_subcommands().front()->get_name();
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
        if (!format.empty()) cfg.format = format;
        cfg.validate();

        const nsmild::VerificationReport report = nsmild::checks::run_experiment(cfg);
        nsmild::emit_report(report, cfg.out_dir, cfg.format);

        for (const auto& r : report.records)
            std::printf("[%s] %-28s value=%.6g target=%.6g (%.2fs)\n", r.pass ? "PASS" : "FAIL",
                        r.check_id.c_str(), r.value, r.target, r.runtime_s);
        std::printf("%d/%zu checks passed; report written to %s/report.%s\n",
                    static_cast<int>(report.records.size()) - report.fail_count(),
                    report.records.size(), cfg.out_dir.c_str(), cfg.format.c_str());
        return report.all_pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
