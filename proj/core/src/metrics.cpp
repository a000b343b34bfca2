#include "eqcm/metrics.hpp"

#include <stdexcept>
#include <string>

namespace eqcm {

ConfusionMatrix confusion(std::span<const double> predictions, std::span<const double> truths,
                          double positive, double negative) {
  if (predictions.size() != truths.size()) {
    throw std::invalid_argument("confusion: prediction/truth length mismatch");
  }
  if (positive == negative) {
    throw std::invalid_argument("confusion: the two class labels must differ");
  }
  auto check = [&](double label, const char* which) {
    if (label != positive && label != negative) {
      throw std::invalid_argument(std::string("confusion: unknown ") + which + " label " +
                                  std::to_string(label));
    }
  };
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    check(truths[i], "truth");
    check(predictions[i], "prediction");
    const bool truth_pos = truths[i] == positive;
    const bool pred_pos = predictions[i] == positive;
    if (truth_pos && pred_pos) ++cm.tp;
    else if (truth_pos && !pred_pos) ++cm.fn;
    else if (!truth_pos && pred_pos) ++cm.fp;
    else ++cm.tn;
  }
  return cm;
}

MetricsReport derived_metrics(const ConfusionMatrix& cm) {
  if (cm.total() < 1) throw std::invalid_argument("derived_metrics: empty confusion matrix");
  auto ratio = [](std::uint64_t num, std::uint64_t den) -> std::optional<double> {
    if (den == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
  };
  MetricsReport r;
  r.counts = cm;
  r.accuracy = ratio(cm.tp + cm.tn, cm.total());
  r.tpr = ratio(cm.tp, cm.positives());
  r.tnr = ratio(cm.tn, cm.negatives());
  r.fpr = r.tnr ? std::optional<double>(1.0 - *r.tnr) : std::nullopt;
  r.fnr = r.tpr ? std::optional<double>(1.0 - *r.tpr) : std::nullopt;
  r.precision_pos = ratio(cm.tp, cm.tp + cm.fp);
  r.npv = ratio(cm.tn, cm.tn + cm.fn);
  if (r.tpr && r.tnr) {
    r.balanced_accuracy = 0.5 * (*r.tpr + *r.tnr);
  }
  return r;
}

}  // namespace eqcm
