#include "eqcm/serialize.hpp"

#include <algorithm>

#include "eqcm/hash.hpp"
#include "eqcm/text.hpp"

namespace eqcm {

namespace {

nlohmann::json symbols_sorted(const std::u32string& symbols) {
  std::u32string sorted(symbols);
  std::sort(sorted.begin(), sorted.end());
  nlohmann::json arr = nlohmann::json::array();
  for (char32_t cp : sorted) arr.push_back(encode_utf8(cp));
  return arr;
}

std::u32string symbols_from(const nlohmann::json& arr) {
  std::u32string out;
  for (const auto& item : arr) {
    const std::u32string cp = decode_utf8(item.get<std::string>());
    if (cp.size() != 1) {
      throw std::invalid_argument("bin partition: symbol entries must be single code points");
    }
    out.push_back(cp.front());
  }
  return out;
}

nlohmann::json opt(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const BinPartition& partition) {
  nlohmann::json j;
  j["kind"] = partition.kind == BinProvenanceKind::ConsonantVowel ? "consonant_vowel"
                                                                  : "max_entropy";
  j["frequent"] = symbols_sorted(partition.frequent);
  j["rare"] = symbols_sorted(partition.rare);
  j["p_frequent"] = partition.p_frequent;
  if (partition.kind == BinProvenanceKind::MaxEntropy) {
    j["reference_label"] = partition.reference_label;
    j["fit_seed"] = partition.fit_seed;
    nlohmann::json agg = nlohmann::json::object();
    for (const auto& [variant, canonical] : partition.aggregation) {
      agg[encode_utf8(variant)] = encode_utf8(canonical);
    }
    j["aggregation"] = agg;
  }
  return j;
}

BinPartition bin_partition_from_json(const nlohmann::json& j) {
  BinPartition p;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "consonant_vowel") {
    p.kind = BinProvenanceKind::ConsonantVowel;
  } else if (kind == "max_entropy") {
    p.kind = BinProvenanceKind::MaxEntropy;
  } else {
    throw std::invalid_argument("bin partition: unknown kind '" + kind + "'");
  }
  p.frequent = symbols_from(j.at("frequent"));
  p.rare = symbols_from(j.at("rare"));
  p.p_frequent = j.value("p_frequent", 0.0);
  if (p.kind == BinProvenanceKind::MaxEntropy) {
    p.reference_label = j.value("reference_label", "");
    p.fit_seed = j.value("fit_seed", std::uint64_t{0});
    if (j.contains("aggregation")) {
      for (const auto& [variant, canonical] : j.at("aggregation").items()) {
        const std::u32string v = decode_utf8(variant);
        const std::u32string c = decode_utf8(canonical.get<std::string>());
        if (v.size() != 1 || c.size() != 1) {
          throw std::invalid_argument("bin partition: aggregation entries must be single symbols");
        }
        p.aggregation[v.front()] = c.front();
      }
    }
  }
  return p;
}

nlohmann::json to_json(const MetricsReport& report) {
  nlohmann::json j;
  j["counts"] = {{"tp", report.counts.tp},
                 {"fn", report.counts.fn},
                 {"fp", report.counts.fp},
                 {"tn", report.counts.tn}};
  j["accuracy"] = opt(report.accuracy);
  j["balanced_accuracy"] = opt(report.balanced_accuracy);
  j["precision_pos"] = opt(report.precision_pos);
  j["npv"] = opt(report.npv);
  j["tpr"] = opt(report.tpr);
  j["tnr"] = opt(report.tnr);
  j["fpr"] = opt(report.fpr);
  j["fnr"] = opt(report.fnr);
  return j;
}

nlohmann::json to_json(const ReadoutModel& model, const ObservableFamily& family) {
  if (model.family_fingerprint != family.fingerprint) {
    throw std::invalid_argument("model export: family fingerprint mismatch");
  }
  if (static_cast<std::size_t>(model.weights.size()) != family.specs.size()) {
    throw std::invalid_argument("model export: weight count differs from family size");
  }
  nlohmann::json weights = nlohmann::json::array();
  for (Eigen::Index i = 0; i < model.weights.size(); ++i) {
    weights.push_back({{"label", family.specs[static_cast<std::size_t>(i)].label},
                       {"w", model.weights(i)}});
  }
  return {{"lambda", model.lambda},
          {"family_fingerprint", to_hex(model.family_fingerprint)},
          {"weights", weights}};
}

ReadoutModel readout_model_from_json(const nlohmann::json& j) {
  ReadoutModel model;
  model.lambda = j.at("lambda").get<double>();
  model.family_fingerprint = from_hex(j.at("family_fingerprint").get<std::string>());
  const auto& weights = j.at("weights");
  model.weights.resize(static_cast<Eigen::Index>(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    model.weights(static_cast<Eigen::Index>(i)) = weights[i].at("w").get<double>();
  }
  return model;
}

nlohmann::json to_json(const Hamiltonian& hamiltonian) {
  nlohmann::json entries = nlohmann::json::array();
  const auto& h = hamiltonian.matrix;
  for (Eigen::Index r = 0; r < h.rows(); ++r) {
    for (Eigen::Index c = 0; c < h.cols(); ++c) {
      entries.push_back({h(r, c).real(), h(r, c).imag()});
    }
  }
  return {{"provenance", describe(hamiltonian.provenance)},
          {"dim", h.rows()},
          {"entries", entries}};
}

}  // namespace eqcm
