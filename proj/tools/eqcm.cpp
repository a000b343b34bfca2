// Command-line front end: `run` executes an experiment preset or config,
// `encode-fit` freezes a max-entropy bin partition, `metrics` evaluates
// a prediction CSV. Exits 0 on success; failures print a JSON error
// object to stderr and exit nonzero.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>

#include "eqcm/corpus.hpp"
#include "eqcm/encoding.hpp"
#include "eqcm/experiment.hpp"
#include "eqcm/hash.hpp"
#include "eqcm/metrics.hpp"
#include "eqcm/serialize.hpp"
#include "eqcm/text.hpp"

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void print_metrics_line(const std::string& split, const eqcm::MetricsReport& m) {
  auto fmt = [](const std::optional<double>& v) {
    return v ? std::to_string(*v) : std::string("undefined");
  };
  std::cout << split << ": accuracy=" << fmt(m.accuracy)
            << " balanced_accuracy=" << fmt(m.balanced_accuracy) << " tp=" << m.counts.tp
            << " fn=" << m.counts.fn << " fp=" << m.counts.fp << " tn=" << m.counts.tn << "\n";
}

int cmd_run(const std::string& config_path, const std::string& task_name,
            std::size_t seeds, const std::string& out_dir, const json& overrides) {
  eqcm::ExperimentConfig cfg = eqcm::preset_config(
      task_name.empty() ? eqcm::TaskPreset::Custom : eqcm::task_preset_from_name(task_name));
  if (!config_path.empty()) {
    eqcm::apply_config_json(cfg, load_json_file(config_path));
  }
  eqcm::apply_config_json(cfg, overrides);
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  if (const char* env_dir = std::getenv("EQCM_OUTPUT_DIR")) cfg.output_dir = env_dir;

  if (seeds > 1) {
    eqcm::SweepSummary summary = eqcm::run_sweep(cfg, seeds);
    std::cout << summary.aggregates.dump(2) << "\n";
    return 0;
  }
  eqcm::RunReport report = eqcm::run_experiment(cfg);
  print_metrics_line("train", report.train_metrics);
  if (!report.test.empty()) print_metrics_line("test", report.test_metrics);
  std::cout << "timings: dataset=" << report.timings.dataset_seconds
            << "s quantum=" << report.timings.quantum_seconds
            << "s readout=" << report.timings.readout_seconds
            << "s total=" << report.timings.total_seconds << "s\n";
  if (!cfg.output_dir.empty()) {
    std::cout << "artifacts written to " << cfg.output_dir << "\n";
  }
  return 0;
}

int cmd_encode_fit(const std::string& words_path, const std::string& label,
                   std::size_t length, const std::string& aggregation_json,
                   const std::string& out_path) {
  eqcm::AggregationMap aggregation = eqcm::default_italian_aggregation();
  if (!aggregation_json.empty()) {
    aggregation.clear();
    for (const auto& [variant, canonical] : json::parse(aggregation_json).items()) {
      const std::u32string v = eqcm::decode_utf8(variant);
      const std::u32string c = eqcm::decode_utf8(canonical.get<std::string>());
      if (v.size() != 1 || c.size() != 1) {
        throw std::invalid_argument("aggregation entries must be single symbols");
      }
      aggregation[v.front()] = c.front();
    }
  }
  eqcm::LoadStats stats;
  eqcm::WordList words =
      eqcm::load_word_list(words_path, length, eqcm::Alphabet::italian(), label, &stats);
  eqcm::BinPartition partition = eqcm::fit_max_entropy_bins(words, aggregation);
  const json j = eqcm::to_json(partition);
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << j.dump(2) << "\n";
    std::cout << "partition written to " << out_path << " (fitted on " << stats.kept
              << " words, " << stats.out_of_alphabet << " skipped out-of-alphabet)\n";
  }
  return 0;
}

int cmd_metrics(const std::string& csv_path, double positive, double negative,
                const std::string& out_path) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("cannot open " + csv_path);
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty predictions file");

  // Locate the prediction/truth columns by name.
  std::vector<std::string> columns;
  {
    std::stringstream ss(header);
    std::string cell;
    while (std::getline(ss, cell, ',')) columns.push_back(cell);
  }
  auto column_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == name) return i;
    }
    throw std::runtime_error("predictions file has no '" + name + "' column");
  };
  const std::size_t pred_col = column_of("prediction");
  const std::size_t truth_col = column_of("truth");

  std::vector<double> predictions;
  std::vector<double> truths;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() <= std::max(pred_col, truth_col)) {
      throw std::runtime_error("short row in predictions file: " + line);
    }
    predictions.push_back(std::stod(cells[pred_col]));
    truths.push_back(std::stod(cells[truth_col]));
  }
  const eqcm::MetricsReport report =
      eqcm::derived_metrics(eqcm::confusion(predictions, truths, positive, negative));
  const json j = eqcm::to_json(report);
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-reservoir deliberation benchmark runner"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run an experiment (preset or config file)");
  std::string config_path, task_name, out_dir;
  std::size_t seeds = 1;
  run->add_option("--config", config_path, "JSON config file");
  run->add_option("--task", task_name, "Preset: task1 | task2 | task2_hw | custom");
  run->add_option("--seeds", seeds, "Replicates; seeds are shifted per replicate");
  run->add_option("--out", out_dir, "Output directory for artifacts");
  std::optional<double> g1, g2, tau, lambda, sigma, delta;
  std::optional<std::uint64_t> goe_seed, split_seed, random_seed;
  std::optional<std::string> encoder, positive_words, negative_words, family;
  std::optional<std::size_t> n_train, n_test;
  run->add_option("--g1", g1, "Attention local coupling");
  run->add_option("--g2", g2, "Attention pair coupling");
  run->add_option("--tau", tau, "Evolution time");
  run->add_option("--lambda", lambda, "Ridge regularization");
  run->add_option("--sigma", sigma, "GOE variance");
  run->add_option("--delta", delta, "Encoding amplitude");
  run->add_option("--goe-seed", goe_seed, "GOE reservoir seed");
  run->add_option("--split-seed", split_seed, "Dataset split seed");
  run->add_option("--random-seed", random_seed, "Random-string pool seed");
  run->add_option("--encoder", encoder, "consonant_vowel | max_entropy");
  run->add_option("--family", family, "full | local");
  run->add_option("--positive-words", positive_words, "Positive-class word list");
  run->add_option("--negative-words", negative_words, "Negative-class word list");
  run->add_option("--n-train", n_train, "Training samples per class");
  run->add_option("--n-test", n_test, "Test samples per class");

  // encode-fit
  auto* encode_fit = app.add_subcommand("encode-fit", "Fit and emit a max-entropy bin partition");
  std::string ef_words, ef_label, ef_aggregation, ef_out;
  std::size_t ef_length = 7;
  encode_fit->add_option("--words", ef_words, "Word-list file")->required();
  encode_fit->add_option("--label", ef_label, "Class tag recorded in the partition")->required();
  encode_fit->add_option("--length", ef_length, "Word length filter");
  encode_fit->add_option("--aggregation", ef_aggregation, "JSON symbol-aggregation map");
  encode_fit->add_option("--out", ef_out, "Output JSON path (stdout when omitted)");

  // metrics
  auto* metrics = app.add_subcommand("metrics", "Evaluate a prediction CSV");
  std::string m_csv, m_out;
  double m_positive = 0.5, m_negative = -0.5;
  metrics->add_option("--predictions", m_csv, "CSV with prediction,truth columns")->required();
  metrics->add_option("--positive", m_positive, "Positive-class label value");
  metrics->add_option("--negative", m_negative, "Negative-class label value");
  metrics->add_option("--out", m_out, "Output JSON path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      json overrides = json::object();
      if (g1 || g2) {
        overrides["attention"] = json::object();
        if (g1) overrides["attention"]["g1"] = *g1;
        if (g2) overrides["attention"]["g2"] = *g2;
      }
      if (tau) overrides["tau"] = *tau;
      if (lambda) overrides["lambda"] = *lambda;
      if (delta) overrides["delta"] = *delta;
      if (family) overrides["family"] = *family;
      if (sigma || goe_seed) {
        overrides["reservoir"] = json::object();
        if (sigma) overrides["reservoir"]["sigma"] = *sigma;
        if (goe_seed) overrides["reservoir"]["seed"] = *goe_seed;
      }
      if (encoder) overrides["encoder"] = {{"kind", *encoder}};
      json dataset = json::object();
      if (positive_words) dataset["positive_words"] = *positive_words;
      if (negative_words) dataset["negative_words"] = *negative_words;
      if (split_seed) dataset["split_seed"] = *split_seed;
      if (random_seed) dataset["random_words_seed"] = *random_seed;
      if (n_train) dataset["n_train_per_class"] = *n_train;
      if (n_test) dataset["n_test_per_class"] = *n_test;
      if (!dataset.empty()) overrides["dataset"] = dataset;
      return cmd_run(config_path, task_name, seeds, out_dir, overrides);
    }
    if (encode_fit->parsed()) {
      return cmd_encode_fit(ef_words, ef_label, ef_length, ef_aggregation, ef_out);
    }
    if (metrics->parsed()) {
      return cmd_metrics(m_csv, m_positive, m_negative, m_out);
    }
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
