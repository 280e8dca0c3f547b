#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "obls/datasets.hpp"
#include "obls/harness.hpp"

namespace {

struct StreamFlags {
    std::string dataset;
    std::string label_column = "label";
    std::string drop_columns;
    bool no_header = false;
    bool normalize = false;
    std::size_t samples = 100000;
    double noise = -1.0;
    double drift = -1.0;
    std::size_t segment_length = 25000;
    std::vector<double> thresholds;
    std::uint64_t generator_seed = 0;
    std::size_t limit = 0;
};

void add_stream_flags(CLI::App* cmd, StreamFlags& flags) {
    cmd->add_option("--dataset", flags.dataset,
                    "CSV file path, or one of: hyperplane, sea");
    cmd->add_option("--label-col", flags.label_column, "label column name or index (CSV)");
    cmd->add_option("--drop-cols", flags.drop_columns,
                    "comma-separated columns to drop (CSV)");
    cmd->add_flag("--no-header", flags.no_header, "CSV file has no header row");
    cmd->add_flag("--normalize,!--no-normalize", flags.normalize,
                  "min-max normalize each attribute to [0,1]");
    cmd->add_option("--samples", flags.samples, "sample count for generated streams");
    cmd->add_option("--noise", flags.noise, "label noise for generated streams");
    cmd->add_option("--drift", flags.drift, "hyperplane drift magnitude");
    cmd->add_option("--segment-length", flags.segment_length, "sea segment length");
    cmd->add_option("--thresholds", flags.thresholds, "four sea thresholds")->expected(0, 4);
    cmd->add_option("--generator-seed", flags.generator_seed,
                    "seed for `generate` (runs derive per-trial seeds instead)");
    cmd->add_option("--limit", flags.limit, "cap the number of samples per trial");
}

std::vector<std::string> split_commas(const std::string& joined) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : joined) {
        if (ch == ',') {
            if (!cur.empty()) {
                parts.push_back(cur);
            }
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) {
        parts.push_back(cur);
    }
    return parts;
}

obls::StreamSpec stream_spec_from_flags(const StreamFlags& flags) {
    obls::StreamSpec spec;
    if (flags.dataset == "hyperplane") {
        spec.source = obls::StreamSpec::Source::Hyperplane;
        if (flags.noise >= 0.0) {
            spec.hyperplane.noise = flags.noise;
        }
        if (flags.drift >= 0.0) {
            spec.hyperplane.drift_magnitude = flags.drift;
        }
    } else if (flags.dataset == "sea") {
        spec.source = obls::StreamSpec::Source::Sea;
        if (flags.noise >= 0.0) {
            spec.sea.noise = flags.noise;
        }
        spec.sea.segment_length = flags.segment_length;
        if (!flags.thresholds.empty()) {
            if (flags.thresholds.size() != 4) {
                throw CLI::ValidationError("--thresholds expects exactly 4 values");
            }
            std::copy(flags.thresholds.begin(), flags.thresholds.end(),
                      spec.sea.thresholds.begin());
        }
    } else {
        spec.source = obls::StreamSpec::Source::Csv;
        spec.csv_path = flags.dataset;
        spec.schema.label_column = flags.label_column;
        spec.schema.has_header = !flags.no_header;
        spec.schema.drop_columns = split_commas(flags.drop_columns);
    }
    spec.generator_seed = flags.generator_seed;
    spec.generator_count = flags.samples;
    spec.normalize = flags.normalize;
    if (flags.limit > 0) {
        spec.limit = flags.limit;
    }
    return spec;
}

int run_command(const obls::TrialConfig& config) {
    const obls::ExperimentReport report = obls::run_experiment(config);
    std::cout << obls::to_json(report)["aggregate"].dump(2) << '\n';
    if (!config.output_dir.empty()) {
        std::cout << "reports written to " << config.output_dir << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online broad learning system: prequential experiments, "
                 "synthetic drift streams and model comparisons"};
    app.require_subcommand(1);

    // --- run ---------------------------------------------------------------
    auto* run = app.add_subcommand("run", "run a prequential experiment");
    StreamFlags run_stream;
    add_stream_flags(run, run_stream);
    std::string model_name = "online-bls";
    std::string config_path;
    obls::TrialConfig base;
    run->add_option("--model", model_name, "online-bls | online-bls-ada | ibls | ribls | blscil");
    run->add_option("--config", config_path, "JSON config file (flags override its values)");
    auto* n1_opt = run->add_option("--n1", base.n1, "feature nodes per group");
    auto* n2_opt = run->add_option("--n2", base.n2, "feature node groups");
    auto* n3_opt = run->add_option("--n3", base.n3, "enhancement nodes per group");
    auto* n4_opt = run->add_option("--n4", base.n4, "enhancement node groups");
    auto* lambda_opt = run->add_option("--lambda", base.lambda, "ridge regularizer");
    auto* mu_opt = run->add_option("--mu", base.mu, "forgetting factor (adaptive)");
    auto* l1_opt = run->add_option("--lambda1", base.lambda1, "blscil inter-class weight");
    auto* l2_opt = run->add_option("--lambda2", base.lambda2, "blscil intra-class weight");
    auto* seed_opt = run->add_option("--seed", base.seed, "experiment seed");
    auto* trials_opt = run->add_option("--trials", base.trials, "number of seeded trials");
    auto* jobs_opt = run->add_option("--jobs", base.jobs, "parallel trial workers");
    auto* shuffle_opt =
        run->add_flag("--shuffle,!--no-shuffle", base.shuffle, "reshuffle CSV order per trial");
    auto* output_opt = run->add_option("--output", base.output_dir, "report directory");

    // --- generate ----------------------------------------------------------
    auto* generate = app.add_subcommand("generate", "write a synthetic stream as CSV");
    StreamFlags gen_stream;
    add_stream_flags(generate, gen_stream);
    std::string gen_output = "stream.csv";
    generate->add_option("--output", gen_output, "destination CSV file");

    // --- compare -----------------------------------------------------------
    auto* compare = app.add_subcommand("compare", "run several models on one stream");
    StreamFlags cmp_stream;
    add_stream_flags(compare, cmp_stream);
    std::string models_joined = "online-bls,ribls";
    obls::TrialConfig cmp_base;
    compare->add_option("--models", models_joined, "comma-separated model list");
    compare->add_option("--n1", cmp_base.n1);
    compare->add_option("--n2", cmp_base.n2);
    compare->add_option("--n3", cmp_base.n3);
    compare->add_option("--n4", cmp_base.n4);
    compare->add_option("--lambda", cmp_base.lambda);
    compare->add_option("--mu", cmp_base.mu);
    compare->add_option("--lambda1", cmp_base.lambda1);
    compare->add_option("--lambda2", cmp_base.lambda2);
    compare->add_option("--seed", cmp_base.seed);
    compare->add_option("--trials", cmp_base.trials);
    compare->add_option("--jobs", cmp_base.jobs);
    compare->add_flag("--shuffle,!--no-shuffle", cmp_base.shuffle);
    compare->add_option("--output", cmp_base.output_dir);

    // --- report ------------------------------------------------------------
    auto* report_cmd = app.add_subcommand("report", "re-aggregate existing step logs");
    std::string report_input;
    std::string report_output;
    report_cmd->add_option("--input", report_input, "directory with trial_<i>_steps.csv")
        ->required();
    report_cmd->add_option("--output", report_output, "directory for the rebuilt summary");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            obls::TrialConfig config;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) {
                    std::cerr << "error: cannot open config " << config_path << '\n';
                    return 1;
                }
                config = obls::trial_config_from_json(nlohmann::json::parse(in));
            }
            if (run->count("--model")) {
                config.model = obls::model_kind_from_string(model_name);
            } else if (config_path.empty()) {
                config.model = obls::model_kind_from_string(model_name);
            }
            if (run->count("--dataset") || config_path.empty()) {
                if (run_stream.dataset.empty()) {
                    std::cerr << "error: --dataset (or --config with a stream) is required\n";
                    return 1;
                }
                config.stream = stream_spec_from_flags(run_stream);
            }
            if (n1_opt->count()) config.n1 = base.n1;
            if (n2_opt->count()) config.n2 = base.n2;
            if (n3_opt->count()) config.n3 = base.n3;
            if (n4_opt->count()) config.n4 = base.n4;
            if (lambda_opt->count()) config.lambda = base.lambda;
            if (mu_opt->count()) config.mu = base.mu;
            if (l1_opt->count()) config.lambda1 = base.lambda1;
            if (l2_opt->count()) config.lambda2 = base.lambda2;
            if (seed_opt->count()) config.seed = base.seed;
            if (trials_opt->count()) config.trials = base.trials;
            if (jobs_opt->count()) config.jobs = base.jobs;
            if (shuffle_opt->count()) config.shuffle = base.shuffle;
            if (output_opt->count()) config.output_dir = base.output_dir;
            return run_command(config);
        }

        if (generate->parsed()) {
            const obls::StreamSpec spec = stream_spec_from_flags(gen_stream);
            if (spec.source == obls::StreamSpec::Source::Csv) {
                std::cerr << "error: generate needs --dataset hyperplane or sea\n";
                return 1;
            }
            const obls::Stream stream = obls::make_stream(spec);
            obls::write_stream_csv(stream, gen_output);
            std::cout << "wrote " << stream.size() << " samples to " << gen_output << '\n';
            return 0;
        }

        if (compare->parsed()) {
            if (cmp_stream.dataset.empty()) {
                std::cerr << "error: --dataset is required\n";
                return 1;
            }
            cmp_base.stream = stream_spec_from_flags(cmp_stream);
            std::vector<obls::TrialConfig> configs;
            for (const std::string& name : split_commas(models_joined)) {
                obls::TrialConfig config = cmp_base;
                config.model = obls::model_kind_from_string(name);
                configs.push_back(config);
            }
            const obls::ComparisonReport report = obls::compare_models(configs);
            std::cout << obls::format_comparison(report);
            if (!cmp_base.output_dir.empty()) {
                std::filesystem::create_directories(cmp_base.output_dir);
                std::ofstream out(std::filesystem::path(cmp_base.output_dir) / "comparison.json");
                out << obls::to_json(report).dump(2) << '\n';
                std::cout << "reports written to " << cmp_base.output_dir << '\n';
            }
            return 0;
        }

        if (report_cmd->parsed()) {
            const obls::ExperimentReport report = obls::reaggregate_logs(report_input);
            nlohmann::json summary = obls::to_json(report);
            summary["reaggregated_from"] = report_input;
            std::cout << summary["aggregate"].dump(2) << '\n';
            if (!report_output.empty()) {
                std::filesystem::create_directories(report_output);
                std::ofstream out(std::filesystem::path(report_output) / "summary.json");
                out << summary.dump(2) << '\n';
                std::ofstream conv(std::filesystem::path(report_output) / "convergence.csv");
                conv << "k,mean_oce,sd_oce\n";
                for (std::size_t k = 0; k < report.mean_oce_by_step.size(); ++k) {
                    conv << (k + 1) << ',' << report.mean_oce_by_step[k] << ','
                         << report.sd_oce_by_step[k] << '\n';
                }
            }
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
