#pragma once

#include <cstdint>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "eqcm/corpus.hpp"
#include "eqcm/encoding.hpp"
#include "eqcm/features.hpp"
#include "eqcm/metrics.hpp"
#include "eqcm/quantum.hpp"
#include "eqcm/readout.hpp"

namespace eqcm {

enum class TaskPreset { Task1, Task2, Task2Hw, Custom };
enum class EncoderKind { ConsonantVowel, MaxEntropy };
enum class ReservoirKind { Goe, Ising };
/// Class whose training words calibrate the max-entropy encoding.
enum class ReferenceClass { Positive, Negative };

/// Fully resolved experiment description. Presets bake in the
/// benchmark hyperparameters; every field can be overridden through the
/// JSON config or CLI flags. Two runs with equal configs produce
/// byte-identical artifacts.
struct ExperimentConfig {
  TaskPreset task = TaskPreset::Custom;

  EncoderKind encoder = EncoderKind::ConsonantVowel;
  ReferenceClass reference_class = ReferenceClass::Positive;
  AggregationMap aggregation;

  ReservoirKind reservoir = ReservoirKind::Goe;
  double sigma = 0.1;
  std::optional<std::uint64_t> goe_seed;  // required for GOE reservoirs
  bool goe_textbook_diagonal = false;
  double ising_coupling = -1.0;
  double ising_field_z = 1.5;
  double ising_field_x = 0.7;

  double g1 = 0.0;
  double g2 = 0.0;
  AttentionTopology topology = AttentionTopology::AllPairs;

  double tau = 10.0;
  double lambda = 2e-3;
  double delta = 1.0;
  FamilyKind family = FamilyKind::Full;

  std::string positive_words;  // word-list path
  std::string negative_words;  // empty: uniform random strings
  std::size_t n_train_per_class = 150;
  std::size_t n_test_per_class = 40;
  double t_plus = 0.5;
  double t_minus = -0.5;
  std::uint64_t split_seed = 1;
  std::uint64_t random_words_seed = 1;
  std::size_t word_length = 7;

  std::string output_dir;  // empty: keep the report in memory only
};

/// Caption parameters of the corresponding benchmark figures. Word-list
/// paths default to the pools under data/.
ExperimentConfig preset_config(TaskPreset task);

TaskPreset task_preset_from_name(const std::string& name);
std::string task_preset_name(TaskPreset task);

nlohmann::json to_json(const ExperimentConfig& config);
/// Overlays the fields present in `j` onto `config`; unknown keys are
/// an error.
void apply_config_json(ExperimentConfig& config, const nlohmann::json& j);

struct SampleRecord {
  std::string word;
  std::vector<double> z;
  double y = 0.0;
  double prediction = 0.0;
  double truth = 0.0;
};

struct RunTimings {
  double dataset_seconds = 0.0;
  double quantum_seconds = 0.0;
  double readout_seconds = 0.0;
  double total_seconds = 0.0;
};

/// Everything a run produced. Every number is recomputable from the
/// echoed config; timings are informational and never written into
/// artifacts.
struct RunReport {
  ExperimentConfig config;
  ObservableFamily family;
  BinPartition partition;  // the encoding actually used
  ReadoutModel model;
  std::vector<SampleRecord> train;
  std::vector<SampleRecord> test;
  std::vector<FeatureVector> train_features;
  std::vector<FeatureVector> test_features;
  MetricsReport train_metrics;
  MetricsReport test_metrics;
  /// FNV-1a over the words fed to the bin fitting (0 for the
  /// consonant-vowel encoder); guards against train/test leakage.
  std::uint64_t encoder_fit_input_hash = 0;
  std::string positive_source;  // path@hash or random(...) description
  std::string negative_source;
  RunTimings timings;
};

/// Runs the full pipeline: corpus -> encoding (bins fitted on the
/// reference class of the training split only) -> per-sample
/// H0 + H_I(z) evolution -> features -> ridge fit on the training split
/// -> index, decision and metrics on both splits. Writes artifacts when
/// config.output_dir is set.
RunReport run_experiment(const ExperimentConfig& config);

/// Writes the deterministic artifact set: config echo, dataset
/// manifest, encoding, model + weights, feature matrices, per-sample
/// tables, metrics, histograms.
void write_artifacts(const RunReport& report, const std::filesystem::path& dir);

struct HistogramEmission {
  std::vector<std::filesystem::path> written;
  std::vector<std::string> skipped_empty;  // splits without samples
};

/// Per-split, per-class histogram of the deliberative index over a
/// symmetric range covering all observed values.
HistogramEmission emit_histograms(const RunReport& report, int bins,
                                  const std::filesystem::path& dir);

struct SweepReplicate {
  std::uint64_t split_seed = 0;
  std::optional<std::uint64_t> reservoir_seed;
  MetricsReport train_metrics;
  MetricsReport test_metrics;
};

struct SweepSummary {
  std::vector<SweepReplicate> replicates;
  nlohmann::json aggregates;  // median/IQR per metric
};

/// Runs `count` replicates; replicate i shifts the split seed, the
/// random-word seed and (for GOE reservoirs) the reservoir seed by i.
/// Writes per-replicate artifacts plus sweep_metrics.csv and
/// sweep_summary.json when the base config has an output directory.
SweepSummary run_sweep(const ExperimentConfig& base, std::size_t count);

}  // namespace eqcm
