#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace eqcm {

struct ConfusionMatrix {
  std::uint64_t tp = 0;
  std::uint64_t fn = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;

  std::uint64_t total() const { return tp + fn + fp + tn; }
  std::uint64_t positives() const { return tp + fn; }
  std::uint64_t negatives() const { return tn + fp; }
};

/// Counts the four confusion cells. Predictions and truths must have
/// equal lengths and take only the two declared label values.
ConfusionMatrix confusion(std::span<const double> predictions, std::span<const double> truths,
                          double positive, double negative);

/// Derived classification metrics. A metric whose denominator is zero
/// is reported as std::nullopt rather than NaN.
struct MetricsReport {
  ConfusionMatrix counts;
  std::optional<double> accuracy;
  std::optional<double> balanced_accuracy;
  std::optional<double> precision_pos;  // PPV
  std::optional<double> npv;
  std::optional<double> tpr;  // recall / sensitivity
  std::optional<double> tnr;  // specificity
  std::optional<double> fpr;
  std::optional<double> fnr;
};

MetricsReport derived_metrics(const ConfusionMatrix& cm);

}  // namespace eqcm
