#include "eqcm/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "eqcm/hash.hpp"
#include "eqcm/serialize.hpp"
#include "eqcm/text.hpp"

namespace eqcm {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Shortest round-trip decimal form; bytes are deterministic.
std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string join_z(const std::vector<double>& z) {
  std::string out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) out += ';';
    out += format_double(z[i]);
  }
  return out;
}

std::uint64_t hash_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot hash missing file: " + path.string());
  std::uint64_t h = 0xcbf29ce484222325ull;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    h = fnv1a64(std::string_view(buf, static_cast<std::size_t>(in.gcount())), h);
  }
  return h;
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write artifact: " + path.string());
  out << content;
}

void write_json(const fs::path& path, const nlohmann::json& j) {
  write_text(path, j.dump(2) + "\n");
}

std::string source_tag_for(const fs::path& path) {
  return path.stem().string();
}

}  // namespace

ExperimentConfig preset_config(TaskPreset task) {
  ExperimentConfig cfg;
  cfg.task = task;
  switch (task) {
    case TaskPreset::Task1:
      cfg.encoder = EncoderKind::ConsonantVowel;
      cfg.reservoir = ReservoirKind::Goe;
      cfg.sigma = 0.1;
      cfg.g1 = 0.1;
      cfg.g2 = 0.4;
      cfg.topology = AttentionTopology::AllPairs;
      cfg.tau = 10.0;
      cfg.lambda = 2e-3;
      cfg.family = FamilyKind::Full;
      cfg.positive_words = "data/italian_7.txt";
      cfg.negative_words = "";  // uniform random strings
      break;
    case TaskPreset::Task2:
      cfg.encoder = EncoderKind::ConsonantVowel;
      cfg.reservoir = ReservoirKind::Goe;
      cfg.sigma = 0.1;
      cfg.g1 = 0.1;
      cfg.g2 = 0.4;
      cfg.topology = AttentionTopology::AllPairs;
      cfg.tau = 10.0;
      cfg.lambda = 2e-3;
      cfg.family = FamilyKind::Full;
      cfg.positive_words = "data/italian_7.txt";
      cfg.negative_words = "data/english_7.txt";
      break;
    case TaskPreset::Task2Hw:
      cfg.encoder = EncoderKind::ConsonantVowel;
      cfg.reservoir = ReservoirKind::Ising;
      cfg.ising_coupling = -1.0;
      cfg.ising_field_z = 1.5;
      cfg.ising_field_x = 0.7;
      cfg.g1 = 2.0;
      cfg.g2 = 2.0;
      cfg.topology = AttentionTopology::Chain;
      cfg.tau = 20.0;
      cfg.lambda = 2e-3;
      cfg.family = FamilyKind::Local;
      cfg.positive_words = "data/italian_7.txt";
      cfg.negative_words = "data/english_7.txt";
      break;
    case TaskPreset::Custom:
      break;
  }
  cfg.aggregation = default_italian_aggregation();
  cfg.n_train_per_class = 150;
  cfg.n_test_per_class = 40;
  cfg.t_plus = 0.5;
  cfg.t_minus = -0.5;
  cfg.delta = 1.0;
  cfg.word_length = 7;
  return cfg;
}

TaskPreset task_preset_from_name(const std::string& name) {
  if (name == "task1") return TaskPreset::Task1;
  if (name == "task2") return TaskPreset::Task2;
  if (name == "task2_hw") return TaskPreset::Task2Hw;
  if (name == "custom") return TaskPreset::Custom;
  throw std::invalid_argument("unknown task preset '" + name + "'");
}

std::string task_preset_name(TaskPreset task) {
  switch (task) {
    case TaskPreset::Task1: return "task1";
    case TaskPreset::Task2: return "task2";
    case TaskPreset::Task2Hw: return "task2_hw";
    case TaskPreset::Custom: return "custom";
  }
  return "custom";
}

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json encoder;
  encoder["kind"] = c.encoder == EncoderKind::ConsonantVowel ? "consonant_vowel" : "max_entropy";
  if (c.encoder == EncoderKind::MaxEntropy) {
    encoder["reference_class"] =
        c.reference_class == ReferenceClass::Positive ? "positive" : "negative";
    nlohmann::json agg = nlohmann::json::object();
    for (const auto& [variant, canonical] : c.aggregation) {
      agg[encode_utf8(variant)] = encode_utf8(canonical);
    }
    encoder["aggregation"] = agg;
  }

  nlohmann::json reservoir;
  if (c.reservoir == ReservoirKind::Goe) {
    reservoir["kind"] = "goe";
    reservoir["sigma"] = c.sigma;
    if (c.goe_seed) reservoir["seed"] = *c.goe_seed;
    reservoir["textbook_diagonal"] = c.goe_textbook_diagonal;
  } else {
    reservoir["kind"] = "ising";
    reservoir["coupling"] = c.ising_coupling;
    reservoir["field_z"] = c.ising_field_z;
    reservoir["field_x"] = c.ising_field_x;
  }

  return nlohmann::json{
      {"task", task_preset_name(c.task)},
      {"encoder", encoder},
      {"reservoir", reservoir},
      {"attention",
       {{"g1", c.g1},
        {"g2", c.g2},
        {"topology", c.topology == AttentionTopology::AllPairs ? "all_pairs" : "chain"}}},
      {"tau", c.tau},
      {"lambda", c.lambda},
      {"delta", c.delta},
      {"family", c.family == FamilyKind::Full ? "full" : "local"},
      {"dataset",
       {{"positive_words", c.positive_words},
        {"negative_words", c.negative_words},
        {"n_train_per_class", c.n_train_per_class},
        {"n_test_per_class", c.n_test_per_class},
        {"t_plus", c.t_plus},
        {"t_minus", c.t_minus},
        {"split_seed", c.split_seed},
        {"random_words_seed", c.random_words_seed},
        {"word_length", c.word_length}}},
      {"output_dir", c.output_dir}};
}

namespace {

[[noreturn]] void unknown_key(const std::string& where, const std::string& key) {
  throw std::invalid_argument("config: unknown key '" + key + "' in " + where);
}

void apply_encoder(ExperimentConfig& c, const nlohmann::json& j) {
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") {
      const std::string kind = value.get<std::string>();
      if (kind == "consonant_vowel") c.encoder = EncoderKind::ConsonantVowel;
      else if (kind == "max_entropy") c.encoder = EncoderKind::MaxEntropy;
      else throw std::invalid_argument("config: unknown encoder kind '" + kind + "'");
    } else if (key == "reference_class") {
      const std::string ref = value.get<std::string>();
      if (ref == "positive") c.reference_class = ReferenceClass::Positive;
      else if (ref == "negative") c.reference_class = ReferenceClass::Negative;
      else throw std::invalid_argument("config: unknown reference class '" + ref + "'");
    } else if (key == "aggregation") {
      c.aggregation.clear();
      for (const auto& [variant, canonical] : value.items()) {
        const std::u32string v = decode_utf8(variant);
        const std::u32string canon = decode_utf8(canonical.get<std::string>());
        if (v.size() != 1 || canon.size() != 1) {
          throw std::invalid_argument("config: aggregation entries must be single symbols");
        }
        c.aggregation[v.front()] = canon.front();
      }
    } else {
      unknown_key("encoder", key);
    }
  }
}

void apply_reservoir(ExperimentConfig& c, const nlohmann::json& j) {
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") {
      const std::string kind = value.get<std::string>();
      if (kind == "goe") c.reservoir = ReservoirKind::Goe;
      else if (kind == "ising") c.reservoir = ReservoirKind::Ising;
      else throw std::invalid_argument("config: unknown reservoir kind '" + kind + "'");
    } else if (key == "sigma") c.sigma = value.get<double>();
    else if (key == "seed") c.goe_seed = value.get<std::uint64_t>();
    else if (key == "textbook_diagonal") c.goe_textbook_diagonal = value.get<bool>();
    else if (key == "coupling") c.ising_coupling = value.get<double>();
    else if (key == "field_z") c.ising_field_z = value.get<double>();
    else if (key == "field_x") c.ising_field_x = value.get<double>();
    else unknown_key("reservoir", key);
  }
}

void apply_dataset(ExperimentConfig& c, const nlohmann::json& j) {
  for (const auto& [key, value] : j.items()) {
    if (key == "positive_words") c.positive_words = value.get<std::string>();
    else if (key == "negative_words") c.negative_words = value.is_null() ? "" : value.get<std::string>();
    else if (key == "n_train_per_class") c.n_train_per_class = value.get<std::size_t>();
    else if (key == "n_test_per_class") c.n_test_per_class = value.get<std::size_t>();
    else if (key == "t_plus") c.t_plus = value.get<double>();
    else if (key == "t_minus") c.t_minus = value.get<double>();
    else if (key == "split_seed") c.split_seed = value.get<std::uint64_t>();
    else if (key == "random_words_seed") c.random_words_seed = value.get<std::uint64_t>();
    else if (key == "word_length") c.word_length = value.get<std::size_t>();
    else unknown_key("dataset", key);
  }
}

}  // namespace

void apply_config_json(ExperimentConfig& c, const nlohmann::json& j) {
  for (const auto& [key, value] : j.items()) {
    if (key == "task") c.task = task_preset_from_name(value.get<std::string>());
    else if (key == "encoder") apply_encoder(c, value);
    else if (key == "reservoir") apply_reservoir(c, value);
    else if (key == "attention") {
      for (const auto& [akey, avalue] : value.items()) {
        if (akey == "g1") c.g1 = avalue.get<double>();
        else if (akey == "g2") c.g2 = avalue.get<double>();
        else if (akey == "topology") {
          const std::string topo = avalue.get<std::string>();
          if (topo == "all_pairs") c.topology = AttentionTopology::AllPairs;
          else if (topo == "chain") c.topology = AttentionTopology::Chain;
          else throw std::invalid_argument("config: unknown topology '" + topo + "'");
        } else unknown_key("attention", akey);
      }
    } else if (key == "tau") c.tau = value.get<double>();
    else if (key == "lambda") c.lambda = value.get<double>();
    else if (key == "delta") c.delta = value.get<double>();
    else if (key == "family") {
      const std::string fam = value.get<std::string>();
      if (fam == "full") c.family = FamilyKind::Full;
      else if (fam == "local") c.family = FamilyKind::Local;
      else throw std::invalid_argument("config: unknown family '" + fam + "'");
    } else if (key == "dataset") apply_dataset(c, value);
    else if (key == "output_dir") c.output_dir = value.get<std::string>();
    else unknown_key("config", key);
  }
}

namespace {

struct PreparedData {
  LabeledDataset dataset;
  std::string positive_source;
  std::string negative_source;
};

PreparedData prepare_dataset(const ExperimentConfig& c) {
  const Alphabet& alphabet = Alphabet::italian();
  if (c.positive_words.empty()) {
    throw std::invalid_argument("config: dataset.positive_words is required");
  }
  WordList pos = load_word_list(c.positive_words, c.word_length, alphabet,
                                source_tag_for(c.positive_words));
  std::string pos_source =
      c.positive_words + "@fnv1a64:" + to_hex(hash_file(c.positive_words));

  WordList neg{{}, "", alphabet};
  std::string neg_source;
  if (c.negative_words.empty()) {
    const std::size_t pool =
        2 * (c.n_train_per_class + c.n_test_per_class);
    neg = generate_random_strings(pool, c.word_length, c.random_words_seed);
    neg_source = "random_strings(seed=" + std::to_string(c.random_words_seed) +
                 ",count=" + std::to_string(pool) + ")";
  } else {
    neg = load_word_list(c.negative_words, c.word_length, alphabet,
                         source_tag_for(c.negative_words));
    neg_source = c.negative_words + "@fnv1a64:" + to_hex(hash_file(c.negative_words));
  }

  PreparedData out{build_dataset(pos, neg, c.n_train_per_class, c.n_test_per_class, c.t_plus,
                                 c.t_minus, c.split_seed),
                   std::move(pos_source), std::move(neg_source)};
  return out;
}

}  // namespace

RunReport run_experiment(const ExperimentConfig& config) {
  const auto t_start = Clock::now();
  RunReport report;
  report.config = config;

  PreparedData data = prepare_dataset(config);
  report.positive_source = data.positive_source;
  report.negative_source = data.negative_source;
  const Alphabet& alphabet = Alphabet::italian();

  // Encoding: the max-entropy bins see only training words of the
  // reference class; nothing from the test split reaches the fit.
  if (config.encoder == EncoderKind::ConsonantVowel) {
    report.partition = consonant_vowel_partition(alphabet, italian_vowels());
    report.encoder_fit_input_hash = 0;
  } else {
    const double ref_label =
        config.reference_class == ReferenceClass::Positive ? config.t_plus : config.t_minus;
    WordList fit_words{{}, config.reference_class == ReferenceClass::Positive ? "positive"
                                                                              : "negative",
                       alphabet};
    std::uint64_t fit_hash = 0xcbf29ce484222325ull;
    for (const auto& sample : data.dataset.train) {
      if (sample.target == ref_label) {
        fit_words.words.push_back(sample.word);
        fit_hash = fnv1a64(sample.word + "\n", fit_hash);
      }
    }
    report.partition = fit_max_entropy_bins(fit_words, config.aggregation);
    report.partition.fit_seed = config.split_seed;
    report.encoder_fit_input_hash = fit_hash;
  }
  report.timings.dataset_seconds = seconds_since(t_start);

  // Reservoir, fixed across samples; the attention term is rebuilt per
  // sample because it depends on z.
  const auto t_quantum = Clock::now();
  const int sites = static_cast<int>(config.word_length);
  Hamiltonian h0 = [&] {
    if (config.reservoir == ReservoirKind::Goe) {
      if (!config.goe_seed) {
        throw std::invalid_argument("config: reservoir.seed is required for the GOE reservoir");
      }
      return build_goe(sites, config.sigma, *config.goe_seed, config.goe_textbook_diagonal);
    }
    return build_ising(sites, config.ising_coupling, config.ising_field_z, config.ising_field_x);
  }();

  report.family = observable_family(config.family, sites);
  const FamilyEvaluator evaluate(report.family);

  auto process = [&](const std::vector<LabeledSample>& samples,
                     std::vector<SampleRecord>& records, std::vector<FeatureVector>& features) {
    records.reserve(samples.size());
    features.reserve(samples.size());
    for (const auto& sample : samples) {
      try {
        const std::u32string tokens = tokenize(sample.word, alphabet);
        const EncodedInput encoded = bin_encode(tokens, report.partition, config.delta);
        const DensityMatrix rho0 = init_state(encoded.z);
        const Hamiltonian h =
            h0 + build_attention(encoded.z, config.g1, config.g2, config.topology);
        const DensityMatrix rho_tau = evolve(rho0, h, config.tau);
        features.push_back(evaluate(rho_tau));
        records.push_back({sample.word, encoded.z, 0.0, 0.0, sample.target});
      } catch (const std::exception& e) {
        throw std::runtime_error("sample '" + sample.word + "': " + e.what());
      }
    }
  };

  process(data.dataset.train, report.train, report.train_features);
  process(data.dataset.test, report.test, report.test_features);
  report.timings.quantum_seconds = seconds_since(t_quantum);

  const auto t_readout = Clock::now();
  std::vector<double> train_targets;
  train_targets.reserve(report.train.size());
  for (const auto& r : report.train) train_targets.push_back(r.truth);
  report.model =
      fit_ridge(make_design_matrix(report.train_features, train_targets), config.lambda);

  auto score = [&](std::vector<SampleRecord>& records, const std::vector<FeatureVector>& feats) {
    std::vector<double> predictions;
    std::vector<double> truths;
    predictions.reserve(records.size());
    truths.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
      records[i].y = deliberative_index(report.model, feats[i]);
      records[i].prediction = decide(records[i].y, config.t_plus, config.t_minus);
      predictions.push_back(records[i].prediction);
      truths.push_back(records[i].truth);
    }
    return derived_metrics(confusion(predictions, truths, config.t_plus, config.t_minus));
  };
  report.train_metrics = score(report.train, report.train_features);
  if (!report.test.empty()) {
    report.test_metrics = score(report.test, report.test_features);
  }
  report.timings.readout_seconds = seconds_since(t_readout);
  report.timings.total_seconds = seconds_since(t_start);

  if (!config.output_dir.empty()) {
    write_artifacts(report, config.output_dir);
  }
  return report;
}

namespace {

void write_samples_csv(const fs::path& path, const std::vector<SampleRecord>& records) {
  std::string csv = "word,z,y,prediction,truth\n";
  for (const auto& r : records) {
    csv += r.word + "," + join_z(r.z) + "," + format_double(r.y) + "," +
           format_double(r.prediction) + "," + format_double(r.truth) + "\n";
  }
  write_text(path, csv);
}

void write_features_csv(const fs::path& path, const ObservableFamily& family,
                        const std::vector<FeatureVector>& features) {
  std::string csv = "# family_fingerprint=" + to_hex(family.fingerprint) + "\n";
  for (std::size_t i = 0; i < family.specs.size(); ++i) {
    if (i) csv += ',';
    csv += family.specs[i].label;
  }
  csv += '\n';
  for (const auto& f : features) {
    for (Eigen::Index i = 0; i < f.values.size(); ++i) {
      if (i) csv += ',';
      csv += format_double(f.values(i));
    }
    csv += '\n';
  }
  write_text(path, csv);
}

}  // namespace

void write_artifacts(const RunReport& report, const std::filesystem::path& dir) {
  fs::create_directories(dir);

  write_json(dir / "config.json", to_json(report.config));

  nlohmann::json manifest;
  manifest["split_seed"] = report.config.split_seed;
  manifest["positive_source"] = report.positive_source;
  manifest["negative_source"] = report.negative_source;
  manifest["encoder_fit_input_hash"] = to_hex(report.encoder_fit_input_hash);
  auto words_of = [](const std::vector<SampleRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back({{"word", r.word}, {"target", r.truth}});
    return arr;
  };
  manifest["train"] = words_of(report.train);
  manifest["test"] = words_of(report.test);
  write_json(dir / "dataset_manifest.json", manifest);

  write_json(dir / "bin_partition.json", to_json(report.partition));
  write_json(dir / "model.json", to_json(report.model, report.family));

  std::string weights_csv = "index,label,weight\n";
  for (Eigen::Index i = 0; i < report.model.weights.size(); ++i) {
    weights_csv += std::to_string(i) + "," +
                   report.family.specs[static_cast<std::size_t>(i)].label + "," +
                   format_double(report.model.weights(i)) + "\n";
  }
  write_text(dir / "weights.csv", weights_csv);

  write_json(dir / "metrics_train.json", to_json(report.train_metrics));
  if (!report.test.empty()) {
    write_json(dir / "metrics_test.json", to_json(report.test_metrics));
  }

  write_samples_csv(dir / "samples_train.csv", report.train);
  write_samples_csv(dir / "samples_test.csv", report.test);
  write_features_csv(dir / "features_train.csv", report.family, report.train_features);
  write_features_csv(dir / "features_test.csv", report.family, report.test_features);

  emit_histograms(report, 30, dir);
}

HistogramEmission emit_histograms(const RunReport& report, int bins,
                                  const std::filesystem::path& dir) {
  if (bins < 1) throw std::invalid_argument("emit_histograms: bins must be >= 1");
  fs::create_directories(dir);
  HistogramEmission emission;

  auto emit = [&](const std::vector<SampleRecord>& records, const std::string& split) {
    if (records.empty()) {
      emission.skipped_empty.push_back(split);
      return;
    }
    double max_abs = 0.0;
    for (const auto& r : records) max_abs = std::max(max_abs, std::abs(r.y));
    if (max_abs == 0.0) max_abs = 1.0;
    const double lo = -max_abs;
    const double width = 2.0 * max_abs / bins;

    std::vector<std::uint64_t> pos_counts(static_cast<std::size_t>(bins), 0);
    std::vector<std::uint64_t> neg_counts(static_cast<std::size_t>(bins), 0);
    for (const auto& r : records) {
      auto idx = static_cast<long>((r.y - lo) / width);
      idx = std::clamp(idx, 0L, static_cast<long>(bins - 1));
      if (r.truth == report.config.t_plus) ++pos_counts[static_cast<std::size_t>(idx)];
      else ++neg_counts[static_cast<std::size_t>(idx)];
    }
    std::string csv = "bin_lo,bin_hi,count_positive,count_negative\n";
    for (int b = 0; b < bins; ++b) {
      csv += format_double(lo + b * width) + "," + format_double(lo + (b + 1) * width) + "," +
             std::to_string(pos_counts[static_cast<std::size_t>(b)]) + "," +
             std::to_string(neg_counts[static_cast<std::size_t>(b)]) + "\n";
    }
    const fs::path path = dir / ("histogram_" + split + ".csv");
    write_text(path, csv);
    emission.written.push_back(path);
  };

  emit(report.train, "train");
  emit(report.test, "test");
  return emission;
}

namespace {

nlohmann::json quartiles(std::vector<double> values) {
  if (values.empty()) return nullptr;
  std::sort(values.begin(), values.end());
  // Linear interpolation between order statistics (the common type-7
  // definition).
  auto quantile = [&](double q) {
    const double pos = q * (static_cast<double>(values.size()) - 1.0);
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[hi] * frac;
  };
  return {{"median", quantile(0.5)}, {"q1", quantile(0.25)}, {"q3", quantile(0.75)}};
}

}  // namespace

SweepSummary run_sweep(const ExperimentConfig& base, std::size_t count) {
  if (count < 1) throw std::invalid_argument("run_sweep: need at least one replicate");
  SweepSummary summary;
  summary.replicates.reserve(count);

  std::string metrics_csv =
      "replicate,split_seed,reservoir_seed,train_accuracy,train_balanced_accuracy,train_fn,"
      "train_fp,test_accuracy,test_balanced_accuracy,test_fn,test_fp\n";

  for (std::size_t i = 0; i < count; ++i) {
    ExperimentConfig cfg = base;
    cfg.split_seed = base.split_seed + i;
    cfg.random_words_seed = base.random_words_seed + i;
    if (cfg.reservoir == ReservoirKind::Goe && base.goe_seed) {
      cfg.goe_seed = *base.goe_seed + i;
    }
    if (!base.output_dir.empty()) {
      char name[32];
      std::snprintf(name, sizeof(name), "replicate_%03zu", i);
      cfg.output_dir = (fs::path(base.output_dir) / name).string();
    }
    RunReport report = run_experiment(cfg);
    SweepReplicate rep{cfg.split_seed, cfg.goe_seed, report.train_metrics, report.test_metrics};
    summary.replicates.push_back(rep);

    auto field = [](const std::optional<double>& v) {
      return v ? format_double(*v) : std::string("undefined");
    };
    metrics_csv += std::to_string(i) + "," + std::to_string(cfg.split_seed) + "," +
                   (cfg.reservoir == ReservoirKind::Goe ? std::to_string(*cfg.goe_seed) : "-") +
                   "," + field(report.train_metrics.accuracy) + "," +
                   field(report.train_metrics.balanced_accuracy) + "," +
                   std::to_string(report.train_metrics.counts.fn) + "," +
                   std::to_string(report.train_metrics.counts.fp) + "," +
                   field(report.test_metrics.accuracy) + "," +
                   field(report.test_metrics.balanced_accuracy) + "," +
                   std::to_string(report.test_metrics.counts.fn) + "," +
                   std::to_string(report.test_metrics.counts.fp) + "\n";
  }

  auto collect = [&](auto getter) {
    std::vector<double> values;
    for (const auto& rep : summary.replicates) {
      if (auto v = getter(rep)) values.push_back(*v);
    }
    return quartiles(std::move(values));
  };
  summary.aggregates = {
      {"replicates", count},
      {"train_accuracy", collect([](const SweepReplicate& r) { return r.train_metrics.accuracy; })},
      {"train_balanced_accuracy",
       collect([](const SweepReplicate& r) { return r.train_metrics.balanced_accuracy; })},
      {"test_accuracy", collect([](const SweepReplicate& r) { return r.test_metrics.accuracy; })},
      {"test_balanced_accuracy",
       collect([](const SweepReplicate& r) { return r.test_metrics.balanced_accuracy; })}};

  if (!base.output_dir.empty()) {
    fs::create_directories(base.output_dir);
    write_text(fs::path(base.output_dir) / "sweep_metrics.csv", metrics_csv);
    write_json(fs::path(base.output_dir) / "sweep_summary.json", summary.aggregates);
  }
  return summary;
}

}  // namespace eqcm
