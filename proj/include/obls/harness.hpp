#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "obls/datasets.hpp"
#include "obls/linalg.hpp"

namespace obls {

enum class ModelKind { OnlineBls, OnlineBlsAdaptive, IBls, RiBls, BlsCil };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

/// Everything one experiment needs: model choice, stream recipe, mapper
/// dimensions, regularization, seeding and reporting destinations.
struct TrialConfig {
    ModelKind model = ModelKind::OnlineBls;
    StreamSpec stream;

    std::size_t n1 = 10;
    std::size_t n2 = 10;
    std::size_t n3 = 1000;
    std::size_t n4 = 1;

    double lambda = 1e-8;
    double mu = 0.99;       ///< adaptive model only
    double lambda1 = 0.1;   ///< blscil only
    double lambda2 = 0.1;   ///< blscil only

    std::uint64_t seed = 0;
    std::size_t trials = 1;
    std::size_t jobs = 1;
    bool shuffle = true;    ///< per-trial reorder; applies to CSV sources
    std::string output_dir; ///< empty disables file output
};

/// One prequential step: prediction made before the label was revealed,
/// then the model update, timed around the update call alone.
struct StepRecord {
    std::size_t index = 0; ///< 1-based sample number
    std::size_t true_label = 0;
    std::size_t pred_label = 0;
    bool correct = false;
    double update_micros = 0.0;
    double cum_oca = 0.0;
    double cum_bacc = 0.0;
};

struct TrialSummary {
    std::uint64_t trial_seed = 0;
    std::size_t samples = 0;
    double oca = 0.0;
    double oce = 0.0;
    double bacc = 0.0;
    double avrbacc = 0.0;
    double f1 = 0.0;
    double mcc = 0.0;
    double mean_update_micros = 0.0;
    double sd_update_micros = 0.0;
    double total_seconds = 0.0;
};

struct TrialResult {
    TrialSummary summary;
    std::vector<StepRecord> steps;
    DenseMatrix final_weights;
};

/// Uniform face over the five model variants.
class OnlineModel {
public:
    virtual ~OnlineModel() = default;
    virtual std::vector<double> predict(std::span<const double> a) const = 0;
    virtual void update(std::span<const double> a, std::span<const double> y_one_hot) = 0;
    virtual const DenseMatrix& weights() const = 0;
};

std::unique_ptr<OnlineModel> make_model(const TrialConfig& config, std::size_t broad_dim,
                                        std::size_t num_classes);

/// Runs one test-then-train pass over the configured stream. The trial
/// seed derives from (config.seed, trial_index) and drives both the
/// mapper weights and the stream order, so a fixed config reproduces the
/// identical log byte-for-byte apart from the timing column.
TrialResult run_trial(const TrialConfig& config, std::size_t trial_index);

struct MetricAggregate {
    double mean = 0.0;
    double sd = 0.0;
};

struct ExperimentReport {
    std::vector<TrialSummary> trials;
    MetricAggregate oca, oce, bacc, avrbacc, f1, mcc, update_micros;
    std::vector<double> mean_oce_by_step;
    std::vector<double> sd_oce_by_step;
};

/// Runs all trials (in parallel when jobs > 1), aggregates mean/SD per
/// metric, and when output_dir is set writes summary.json, one
/// trial_<i>_steps.csv per trial and convergence.csv (per-step mean/SD of
/// the cumulative error). Throws PartialFailure listing any failed trials.
ExperimentReport run_experiment(const TrialConfig& config);

struct ComparisonRow {
    std::string model;
    MetricAggregate oca, bacc, avrbacc, f1, mcc, update_micros;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    std::size_t best_oca = 0;
    std::size_t best_bacc = 0;
    std::size_t best_avrbacc = 0;
    std::size_t best_f1 = 0;
    std::size_t best_mcc = 0;
    std::size_t best_update_micros = 0; ///< fastest
    /// Relative Frobenius gap between the final weights of online-bls and
    /// ribls on trial 0, present when both models are compared.
    std::optional<double> online_ribls_weight_gap;
};

/// Runs each config (they must share stream, seeds and trial count) and
/// tabulates the aggregate metrics, flagging the best value per column.
ComparisonReport compare_models(const std::vector<TrialConfig>& configs);

std::string format_comparison(const ComparisonReport& report);

/// Rebuilds an ExperimentReport from trial_<i>_steps.csv files written by
/// an earlier run; used by the `report` CLI subcommand.
ExperimentReport reaggregate_logs(const std::string& dir);

nlohmann::json to_json(const StreamSpec& spec);
StreamSpec stream_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TrialConfig& config);
TrialConfig trial_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentReport& report);
nlohmann::json to_json(const ComparisonReport& report);

} // namespace obls
