#include "obls/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "obls/adaptive.hpp"
#include "obls/baselines.hpp"
#include "obls/errors.hpp"
#include "obls/features.hpp"
#include "obls/labels.hpp"
#include "obls/metrics.hpp"
#include "obls/online.hpp"
#include "obls/rng.hpp"

namespace obls {

namespace {

namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

double micros_between(clock_type::time_point a, clock_type::time_point b) {
    return std::chrono::duration<double, std::micro>(b - a).count();
}

MetricAggregate aggregate_of(const std::vector<double>& values) {
    MetricAggregate agg;
    if (values.empty()) {
        return agg;
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    agg.mean = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) {
        const double d = v - agg.mean;
        sq += d * d;
    }
    // population SD, so a single trial reports 0
    agg.sd = std::sqrt(sq / static_cast<double>(values.size()));
    return agg;
}

template <typename Model>
class ModelAdapter final : public OnlineModel {
public:
    template <typename... Args>
    explicit ModelAdapter(Args&&... args) : model_(std::forward<Args>(args)...) {}

    std::vector<double> predict(std::span<const double> a) const override {
        return model_.predict(a);
    }
    void update(std::span<const double> a, std::span<const double> y) override {
        model_.update(a, y);
    }
    const DenseMatrix& weights() const override { return model_.weights(); }

private:
    Model model_;
};

} // namespace

std::string to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::OnlineBls:
        return "online-bls";
    case ModelKind::OnlineBlsAdaptive:
        return "online-bls-ada";
    case ModelKind::IBls:
        return "ibls";
    case ModelKind::RiBls:
        return "ribls";
    case ModelKind::BlsCil:
        return "blscil";
    }
    return "online-bls";
}

ModelKind model_kind_from_string(const std::string& name) {
    if (name == "online-bls") {
        return ModelKind::OnlineBls;
    }
    if (name == "online-bls-ada") {
        return ModelKind::OnlineBlsAdaptive;
    }
    if (name == "ibls") {
        return ModelKind::IBls;
    }
    if (name == "ribls") {
        return ModelKind::RiBls;
    }
    if (name == "blscil") {
        return ModelKind::BlsCil;
    }
    throw InvalidArgument("unknown model '" + name + "'");
}

std::unique_ptr<OnlineModel> make_model(const TrialConfig& config, std::size_t broad_dim,
                                        std::size_t num_classes) {
    switch (config.model) {
    case ModelKind::OnlineBls:
        return std::make_unique<ModelAdapter<OnlineBls>>(broad_dim, num_classes, config.lambda);
    case ModelKind::OnlineBlsAdaptive:
        return std::make_unique<ModelAdapter<AdaptiveBls>>(broad_dim, num_classes, config.lambda,
                                                           config.mu);
    case ModelKind::IBls:
        return std::make_unique<ModelAdapter<IBls>>(broad_dim, num_classes, config.lambda);
    case ModelKind::RiBls:
        return std::make_unique<ModelAdapter<RiBls>>(broad_dim, num_classes, config.lambda);
    case ModelKind::BlsCil:
        return std::make_unique<ModelAdapter<BlsCil>>(broad_dim, num_classes, config.lambda1,
                                                      config.lambda2);
    }
    throw InvalidArgument("make_model: unhandled model kind");
}

TrialResult run_trial(const TrialConfig& config, std::size_t trial_index) {
    const std::uint64_t trial_seed = derive_seed(config.seed, trial_index);
    const std::uint64_t mapper_seed = derive_seed(trial_seed, 1);
    const std::uint64_t stream_seed = derive_seed(trial_seed, 2);

    StreamSpec spec = config.stream;
    if (spec.source == StreamSpec::Source::Csv) {
        if (config.shuffle) {
            spec.shuffle_seed = stream_seed;
        }
    } else {
        // synthetic streams get a fresh realization per trial; their order
        // carries the drift structure and is never shuffled by the harness
        spec.generator_seed = stream_seed;
    }
    const Stream stream = make_stream(spec);
    if (stream.samples.empty()) {
        throw EmptyAfterCleaning("run_trial: stream is empty");
    }

    const BroadMapper mapper(
        MapperDims{stream.num_features, config.n1, config.n2, config.n3, config.n4}, mapper_seed);
    auto model = make_model(config, mapper.broad_dim(), stream.num_classes);

    ConfusionMatrix cm(stream.num_classes);
    std::vector<double> bacc_history;
    bacc_history.reserve(stream.size());
    std::vector<double> update_times;
    update_times.reserve(stream.size());

    TrialResult result;
    result.steps.reserve(stream.size());

    const auto trial_start = clock_type::now();
    for (std::size_t k = 0; k < stream.size(); ++k) {
        const Sample& sample = stream.samples[k];
        const std::vector<double> a = mapper.map(sample.features);

        // test ...
        const std::vector<double> scores = model->predict(a);
        const std::size_t predicted = argmax(scores);
        cm.record(sample.label, predicted);

        // ... then train; only the update call is timed
        const std::vector<double> target = one_hot(sample.label, stream.num_classes);
        const auto t0 = clock_type::now();
        model->update(a, target);
        const auto t1 = clock_type::now();

        const double step_bacc = bacc(cm);
        bacc_history.push_back(step_bacc);
        update_times.push_back(micros_between(t0, t1));

        result.steps.push_back(StepRecord{k + 1, sample.label, predicted,
                                          predicted == sample.label, update_times.back(),
                                          oca(cm), step_bacc});
    }
    const auto trial_end = clock_type::now();

    const MetricAggregate timing = aggregate_of(update_times);
    result.summary = TrialSummary{trial_seed,
                                  stream.size(),
                                  oca(cm),
                                  oce(cm),
                                  bacc(cm),
                                  avrbacc(bacc_history),
                                  macro_f1(cm),
                                  mcc(cm),
                                  timing.mean,
                                  timing.sd,
                                  micros_between(trial_start, trial_end) / 1e6};
    result.final_weights = model->weights();
    return result;
}

namespace {

std::vector<TrialResult> run_all_trials(const TrialConfig& config) {
    if (config.trials == 0) {
        throw InvalidArgument("run_experiment: trials must be >= 1");
    }
    std::vector<TrialResult> results(config.trials);
    std::vector<std::string> failures(config.trials);

    const std::size_t workers = std::max<std::size_t>(1, std::min(config.jobs, config.trials));
    if (workers == 1) {
        for (std::size_t t = 0; t < config.trials; ++t) {
            try {
                results[t] = run_trial(config, t);
            } catch (const std::exception& ex) {
                failures[t] = ex.what();
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t t = next.fetch_add(1);
                if (t >= config.trials) {
                    return;
                }
                try {
                    results[t] = run_trial(config, t);
                } catch (const std::exception& ex) {
                    failures[t] = ex.what();
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }

    std::string failed;
    for (std::size_t t = 0; t < config.trials; ++t) {
        if (!failures[t].empty()) {
            if (!failed.empty()) {
                failed += "; ";
            }
            failed += "trial " + std::to_string(t) + ": " + failures[t];
        }
    }
    if (!failed.empty()) {
        throw PartialFailure("failed trials: " + failed);
    }
    return results;
}

ExperimentReport aggregate_report(const std::vector<TrialResult>& results) {
    ExperimentReport report;
    std::vector<double> v_oca, v_oce, v_bacc, v_avr, v_f1, v_mcc, v_upd;
    for (const TrialResult& r : results) {
        report.trials.push_back(r.summary);
        v_oca.push_back(r.summary.oca);
        v_oce.push_back(r.summary.oce);
        v_bacc.push_back(r.summary.bacc);
        v_avr.push_back(r.summary.avrbacc);
        v_f1.push_back(r.summary.f1);
        v_mcc.push_back(r.summary.mcc);
        v_upd.push_back(r.summary.mean_update_micros);
    }
    report.oca = aggregate_of(v_oca);
    report.oce = aggregate_of(v_oce);
    report.bacc = aggregate_of(v_bacc);
    report.avrbacc = aggregate_of(v_avr);
    report.f1 = aggregate_of(v_f1);
    report.mcc = aggregate_of(v_mcc);
    report.update_micros = aggregate_of(v_upd);

    std::size_t steps = results.empty() ? 0 : results.front().steps.size();
    for (const TrialResult& r : results) {
        steps = std::min(steps, r.steps.size());
    }
    report.mean_oce_by_step.resize(steps);
    report.sd_oce_by_step.resize(steps);
    std::vector<double> column(results.size());
    for (std::size_t k = 0; k < steps; ++k) {
        for (std::size_t t = 0; t < results.size(); ++t) {
            column[t] = 1.0 - results[t].steps[k].cum_oca;
        }
        const MetricAggregate agg = aggregate_of(column);
        report.mean_oce_by_step[k] = agg.mean;
        report.sd_oce_by_step[k] = agg.sd;
    }
    return report;
}

void write_steps_csv(const fs::path& path, const std::vector<StepRecord>& steps) {
    std::ofstream out(path);
    if (!out) {
        throw FileNotFound("cannot open " + path.string());
    }
    out << "k,true_label,pred_label,correct,update_micros,cum_oca,cum_bacc\n";
    char buf[160];
    for (const StepRecord& s : steps) {
        std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%d,%.3f,%.10g,%.10g\n", s.index, s.true_label,
                      s.pred_label, s.correct ? 1 : 0, s.update_micros, s.cum_oca, s.cum_bacc);
        out << buf;
    }
}

void write_experiment_outputs(const TrialConfig& config, const ExperimentReport& report,
                              const std::vector<TrialResult>& results) {
    const fs::path dir(config.output_dir);
    fs::create_directories(dir);

    nlohmann::json summary = to_json(report);
    summary["config"] = to_json(config);
    std::ofstream out(dir / "summary.json");
    out << summary.dump(2) << '\n';

    for (std::size_t t = 0; t < results.size(); ++t) {
        write_steps_csv(dir / ("trial_" + std::to_string(t) + "_steps.csv"), results[t].steps);
    }

    std::ofstream conv(dir / "convergence.csv");
    conv << "k,mean_oce,sd_oce\n";
    char buf[96];
    for (std::size_t k = 0; k < report.mean_oce_by_step.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%zu,%.10g,%.10g\n", k + 1, report.mean_oce_by_step[k],
                      report.sd_oce_by_step[k]);
        conv << buf;
    }
}

} // namespace

ExperimentReport run_experiment(const TrialConfig& config) {
    const std::vector<TrialResult> results = run_all_trials(config);
    ExperimentReport report = aggregate_report(results);
    if (!config.output_dir.empty()) {
        write_experiment_outputs(config, report, results);
    }
    return report;
}

ComparisonReport compare_models(const std::vector<TrialConfig>& configs) {
    if (configs.empty()) {
        throw IncompatibleConfigs("compare_models: no configurations given");
    }
    const std::string stream_fingerprint = to_json(configs.front().stream).dump();
    for (const TrialConfig& c : configs) {
        if (to_json(c.stream).dump() != stream_fingerprint || c.seed != configs.front().seed ||
            c.trials != configs.front().trials || c.shuffle != configs.front().shuffle) {
            throw IncompatibleConfigs("compare_models: configs must share stream, seed and trials");
        }
    }

    ComparisonReport report;
    std::optional<DenseMatrix> online_weights;
    std::optional<DenseMatrix> ribls_weights;

    for (const TrialConfig& config : configs) {
        TrialConfig local = config;
        if (!config.output_dir.empty()) {
            local.output_dir = (fs::path(config.output_dir) / to_string(config.model)).string();
        }
        const std::vector<TrialResult> results = run_all_trials(local);
        if (!local.output_dir.empty()) {
            write_experiment_outputs(local, aggregate_report(results), results);
        }
        const ExperimentReport agg = aggregate_report(results);
        report.rows.push_back(ComparisonRow{to_string(config.model), agg.oca, agg.bacc,
                                            agg.avrbacc, agg.f1, agg.mcc, agg.update_micros});
        if (config.model == ModelKind::OnlineBls) {
            online_weights = results.front().final_weights;
        } else if (config.model == ModelKind::RiBls) {
            ribls_weights = results.front().final_weights;
        }
    }

    if (online_weights && ribls_weights && online_weights->rows() == ribls_weights->rows() &&
        online_weights->cols() == ribls_weights->cols()) {
        const double ref = frobenius_norm(*ribls_weights);
        report.online_ribls_weight_gap =
            frobenius_norm(subtract(*online_weights, *ribls_weights)) / (ref > 0.0 ? ref : 1.0);
    }

    auto best_index = [&](auto field, bool smaller_is_better) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < report.rows.size(); ++i) {
            const double lhs = field(report.rows[i]);
            const double rhs = field(report.rows[best]);
            if (smaller_is_better ? lhs < rhs : lhs > rhs) {
                best = i;
            }
        }
        return best;
    };
    report.best_oca = best_index([](const ComparisonRow& r) { return r.oca.mean; }, false);
    report.best_bacc = best_index([](const ComparisonRow& r) { return r.bacc.mean; }, false);
    report.best_avrbacc = best_index([](const ComparisonRow& r) { return r.avrbacc.mean; }, false);
    report.best_f1 = best_index([](const ComparisonRow& r) { return r.f1.mean; }, false);
    report.best_mcc = best_index([](const ComparisonRow& r) { return r.mcc.mean; }, false);
    report.best_update_micros =
        best_index([](const ComparisonRow& r) { return r.update_micros.mean; }, true);
    return report;
}

std::string format_comparison(const ComparisonReport& report) {
    std::ostringstream out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-16s %-14s %-14s %-14s %-14s %-14s %-14s\n", "model", "oca",
                  "bacc", "avrbacc", "f1", "mcc", "update_us");
    out << buf;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const ComparisonRow& r = report.rows[i];
        auto cell = [&](const MetricAggregate& m, bool best) {
            char c[48];
            std::snprintf(c, sizeof c, "%.4f%s", m.mean, best ? "*" : "");
            return std::string(c);
        };
        auto time_cell = [&](const MetricAggregate& m, bool best) {
            char c[48];
            std::snprintf(c, sizeof c, "%.2f%s", m.mean, best ? "*" : "");
            return std::string(c);
        };
        std::snprintf(buf, sizeof buf, "%-16s %-14s %-14s %-14s %-14s %-14s %-14s\n",
                      r.model.c_str(), cell(r.oca, i == report.best_oca).c_str(),
                      cell(r.bacc, i == report.best_bacc).c_str(),
                      cell(r.avrbacc, i == report.best_avrbacc).c_str(),
                      cell(r.f1, i == report.best_f1).c_str(),
                      cell(r.mcc, i == report.best_mcc).c_str(),
                      time_cell(r.update_micros, i == report.best_update_micros).c_str());
        out << buf;
    }
    if (report.online_ribls_weight_gap) {
        std::snprintf(buf, sizeof buf,
                      "online-bls vs ribls final-weight gap (rel. Frobenius): %.3e\n",
                      *report.online_ribls_weight_gap);
        out << buf;
    }
    return out.str();
}

ExperimentReport reaggregate_logs(const std::string& dir) {
    std::vector<TrialResult> results;
    for (std::size_t t = 0;; ++t) {
        const fs::path path = fs::path(dir) / ("trial_" + std::to_string(t) + "_steps.csv");
        if (!fs::exists(path)) {
            break;
        }
        std::ifstream in(path);
        std::string line;
        std::getline(in, line); // header
        TrialResult result;
        std::size_t max_label = 0;
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            StepRecord s;
            int correct = 0;
            if (std::sscanf(line.c_str(), "%zu,%zu,%zu,%d,%lf,%lf,%lf", &s.index, &s.true_label,
                            &s.pred_label, &correct, &s.update_micros, &s.cum_oca,
                            &s.cum_bacc) != 7) {
                throw SchemaMismatch("reaggregate_logs: malformed row in " + path.string());
            }
            s.correct = correct != 0;
            max_label = std::max({max_label, s.true_label, s.pred_label});
            result.steps.push_back(s);
        }
        if (result.steps.empty()) {
            throw SchemaMismatch("reaggregate_logs: " + path.string() + " has no steps");
        }

        ConfusionMatrix cm(max_label + 1);
        std::vector<double> bacc_history;
        std::vector<double> times;
        for (const StepRecord& s : result.steps) {
            cm.record(s.true_label, s.pred_label);
            bacc_history.push_back(s.cum_bacc);
            times.push_back(s.update_micros);
        }
        const MetricAggregate timing = aggregate_of(times);
        result.summary =
            TrialSummary{0,        result.steps.size(), oca(cm),     oce(cm),   bacc(cm),
                         avrbacc(bacc_history),         macro_f1(cm), mcc(cm),  timing.mean,
                         timing.sd, 0.0};
        results.push_back(std::move(result));
    }
    if (results.empty()) {
        throw FileNotFound("reaggregate_logs: no trial_<i>_steps.csv files in " + dir);
    }
    return aggregate_report(results);
}

// ---------------------------------------------------------------------------
// JSON (de)serialization
// ---------------------------------------------------------------------------

nlohmann::json to_json(const StreamSpec& spec) {
    const char* source = spec.source == StreamSpec::Source::Csv          ? "csv"
                         : spec.source == StreamSpec::Source::Hyperplane ? "hyperplane"
                                                                         : "sea";
    nlohmann::json j{
        {"source", source},
        {"path", spec.csv_path},
        {"label", spec.schema.label_column},
        {"drop", spec.schema.drop_columns},
        {"has_header", spec.schema.has_header},
        {"normalize", spec.normalize},
        {"samples", spec.generator_count},
        {"generator_seed", spec.generator_seed},
        {"hyperplane",
         {{"dims", spec.hyperplane.dims},
          {"noise", spec.hyperplane.noise},
          {"drift", spec.hyperplane.drift_magnitude},
          {"sign_flip_prob", spec.hyperplane.sign_flip_prob}}},
        {"sea",
         {{"noise", spec.sea.noise},
          {"segment_length", spec.sea.segment_length},
          {"thresholds", spec.sea.thresholds}}},
    };
    if (spec.limit) {
        j["limit"] = *spec.limit;
    }
    if (spec.shuffle_seed) {
        j["shuffle_seed"] = *spec.shuffle_seed;
    }
    return j;
}

StreamSpec stream_spec_from_json(const nlohmann::json& j) {
    StreamSpec spec;
    const std::string source = j.value("source", "csv");
    if (source == "csv") {
        spec.source = StreamSpec::Source::Csv;
    } else if (source == "hyperplane") {
        spec.source = StreamSpec::Source::Hyperplane;
    } else if (source == "sea") {
        spec.source = StreamSpec::Source::Sea;
    } else {
        throw SchemaMismatch("stream spec: unknown source '" + source + "'");
    }
    spec.csv_path = j.value("path", "");
    spec.schema.label_column = j.value("label", "label");
    spec.schema.drop_columns = j.value("drop", std::vector<std::string>{});
    spec.schema.has_header = j.value("has_header", true);
    spec.normalize = j.value("normalize", false);
    spec.generator_count = j.value("samples", std::size_t{0});
    spec.generator_seed = j.value("generator_seed", std::uint64_t{0});
    if (j.contains("hyperplane")) {
        const auto& h = j.at("hyperplane");
        spec.hyperplane.dims = h.value("dims", std::size_t{20});
        spec.hyperplane.noise = h.value("noise", 0.01);
        spec.hyperplane.drift_magnitude = h.value("drift", 0.005);
        spec.hyperplane.sign_flip_prob = h.value("sign_flip_prob", 0.1);
    }
    if (j.contains("sea")) {
        const auto& s = j.at("sea");
        spec.sea.noise = s.value("noise", 0.10);
        spec.sea.segment_length = s.value("segment_length", std::size_t{25000});
        if (s.contains("thresholds")) {
            const auto t = s.at("thresholds").get<std::vector<double>>();
            if (t.size() != 4) {
                throw SchemaMismatch("stream spec: sea.thresholds must have 4 values");
            }
            std::copy(t.begin(), t.end(), spec.sea.thresholds.begin());
        }
    }
    if (j.contains("limit") && !j.at("limit").is_null()) {
        spec.limit = j.at("limit").get<std::size_t>();
    }
    if (j.contains("shuffle_seed") && !j.at("shuffle_seed").is_null()) {
        spec.shuffle_seed = j.at("shuffle_seed").get<std::uint64_t>();
    }
    return spec;
}

nlohmann::json to_json(const TrialConfig& config) {
    return nlohmann::json{
        {"model", to_string(config.model)},
        {"stream", to_json(config.stream)},
        {"n1", config.n1},
        {"n2", config.n2},
        {"n3", config.n3},
        {"n4", config.n4},
        {"lambda", config.lambda},
        {"mu", config.mu},
        {"lambda1", config.lambda1},
        {"lambda2", config.lambda2},
        {"seed", config.seed},
        {"trials", config.trials},
        {"jobs", config.jobs},
        {"shuffle", config.shuffle},
        {"output", config.output_dir},
    };
}

TrialConfig trial_config_from_json(const nlohmann::json& j) {
    TrialConfig config;
    config.model = model_kind_from_string(j.value("model", "online-bls"));
    if (j.contains("stream")) {
        config.stream = stream_spec_from_json(j.at("stream"));
    }
    config.n1 = j.value("n1", std::size_t{10});
    config.n2 = j.value("n2", std::size_t{10});
    config.n3 = j.value("n3", std::size_t{1000});
    config.n4 = j.value("n4", std::size_t{1});
    config.lambda = j.value("lambda", 1e-8);
    config.mu = j.value("mu", 0.99);
    config.lambda1 = j.value("lambda1", 0.1);
    config.lambda2 = j.value("lambda2", 0.1);
    config.seed = j.value("seed", std::uint64_t{0});
    config.trials = j.value("trials", std::size_t{1});
    config.jobs = j.value("jobs", std::size_t{1});
    config.shuffle = j.value("shuffle", true);
    config.output_dir = j.value("output", "");
    return config;
}

namespace {

nlohmann::json to_json(const MetricAggregate& agg) {
    return nlohmann::json{{"mean", agg.mean}, {"sd", agg.sd}};
}

nlohmann::json to_json(const TrialSummary& s) {
    return nlohmann::json{
        {"trial_seed", s.trial_seed},
        {"samples", s.samples},
        {"oca", s.oca},
        {"oce", s.oce},
        {"bacc", s.bacc},
        {"avrbacc", s.avrbacc},
        {"f1", s.f1},
        {"mcc", s.mcc},
        {"mean_update_micros", s.mean_update_micros},
        {"sd_update_micros", s.sd_update_micros},
        {"total_seconds", s.total_seconds},
    };
}

} // namespace

nlohmann::json to_json(const ExperimentReport& report) {
    nlohmann::json trials = nlohmann::json::array();
    for (const TrialSummary& s : report.trials) {
        trials.push_back(to_json(s));
    }
    return nlohmann::json{
        {"trials", trials},
        {"aggregate",
         {{"oca", to_json(report.oca)},
          {"oce", to_json(report.oce)},
          {"bacc", to_json(report.bacc)},
          {"avrbacc", to_json(report.avrbacc)},
          {"f1", to_json(report.f1)},
          {"mcc", to_json(report.mcc)},
          {"update_micros", to_json(report.update_micros)}}},
    };
}

nlohmann::json to_json(const ComparisonReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ComparisonRow& r : report.rows) {
        rows.push_back(nlohmann::json{
            {"model", r.model},
            {"oca", to_json(r.oca)},
            {"bacc", to_json(r.bacc)},
            {"avrbacc", to_json(r.avrbacc)},
            {"f1", to_json(r.f1)},
            {"mcc", to_json(r.mcc)},
            {"update_micros", to_json(r.update_micros)},
        });
    }
    nlohmann::json j{
        {"rows", rows},
        {"best",
         {{"oca", report.best_oca},
          {"bacc", report.best_bacc},
          {"avrbacc", report.best_avrbacc},
          {"f1", report.best_f1},
          {"mcc", report.best_mcc},
          {"update_micros", report.best_update_micros}}},
    };
    if (report.online_ribls_weight_gap) {
        j["online_ribls_weight_gap"] = *report.online_ribls_weight_gap;
    }
    return j;
}

} // namespace obls
