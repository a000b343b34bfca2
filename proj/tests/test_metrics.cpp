#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "eqcm/metrics.hpp"
#include "eqcm/serialize.hpp"

using namespace eqcm;

namespace {

std::vector<double> labels(std::size_t n_pos, std::size_t n_neg) {
  std::vector<double> out(n_pos, 1.0);
  out.insert(out.end(), n_neg, -1.0);
  return out;
}

}  // namespace

TEST_CASE("confusion counting") {
  SUBCASE("perfect predictions") {
    const auto truth = labels(10, 10);
    ConfusionMatrix cm = confusion(truth, truth, 1.0, -1.0);
    CHECK(cm.tp == 10);
    CHECK(cm.tn == 10);
    CHECK(cm.fp == 0);
    CHECK(cm.fn == 0);
  }
  SUBCASE("all-positive predictor") {
    const auto truth = labels(10, 10);
    const std::vector<double> pred(20, 1.0);
    ConfusionMatrix cm = confusion(pred, truth, 1.0, -1.0);
    CHECK(cm.tp == 10);
    CHECK(cm.fp == 10);
    CHECK(cm.tn == 0);
    CHECK(cm.fn == 0);
  }
  SUBCASE("errors") {
    const std::vector<double> a{1.0}, b{1.0, -1.0};
    CHECK_THROWS_AS(confusion(a, b, 1.0, -1.0), std::invalid_argument);
    const std::vector<double> bad{2.0};
    const std::vector<double> ok{1.0};
    CHECK_THROWS_AS(confusion(bad, ok, 1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(confusion(ok, ok, 1.0, 1.0), std::invalid_argument);
  }
}

TEST_CASE("derived metrics reproduce the benchmark confusion matrix") {
  // TP=150, TN=136, FP=14, FN=0
  MetricsReport r = derived_metrics(ConfusionMatrix{150, 0, 14, 136});
  REQUIRE(r.accuracy);
  REQUIRE(r.precision_pos);
  REQUIRE(r.tpr);
  REQUIRE(r.tnr);
  CHECK(*r.accuracy == doctest::Approx(286.0 / 300.0));
  CHECK(*r.precision_pos == doctest::Approx(150.0 / 164.0));
  CHECK(*r.tpr == doctest::Approx(1.0));
  CHECK(*r.tnr == doctest::Approx(136.0 / 150.0));
  // rounded to four decimals: 0.9533, 0.9146, 1.0000, 0.9067
  auto round4 = [](double v) { return std::round(v * 1e4) / 1e4; };
  CHECK(round4(*r.accuracy) == doctest::Approx(0.9533));
  CHECK(round4(*r.precision_pos) == doctest::Approx(0.9146));
  CHECK(round4(*r.tpr) == doctest::Approx(1.0));
  CHECK(round4(*r.tnr) == doctest::Approx(0.9067));
}

TEST_CASE("degenerate counts mark metrics undefined instead of NaN") {
  MetricsReport all_ones = derived_metrics(ConfusionMatrix{1, 0, 0, 1});
  CHECK(*all_ones.accuracy == doctest::Approx(1.0));
  CHECK(*all_ones.balanced_accuracy == doctest::Approx(1.0));
  CHECK(*all_ones.precision_pos == doctest::Approx(1.0));
  CHECK(*all_ones.npv == doctest::Approx(1.0));

  // tp=0, fn=5, fp=0, tn=5: no positive predictions at all
  MetricsReport r = derived_metrics(ConfusionMatrix{0, 5, 0, 5});
  CHECK(*r.accuracy == doctest::Approx(0.5));
  CHECK(*r.balanced_accuracy == doctest::Approx(0.5));
  CHECK_FALSE(r.precision_pos.has_value());

  // empty positive class: recall and balanced accuracy undefined
  MetricsReport no_pos = derived_metrics(ConfusionMatrix{0, 0, 2, 8});
  CHECK_FALSE(no_pos.tpr.has_value());
  CHECK_FALSE(no_pos.balanced_accuracy.has_value());
  CHECK_FALSE(no_pos.fnr.has_value());

  CHECK_THROWS_AS(derived_metrics(ConfusionMatrix{0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("metric identities") {
  const ConfusionMatrix cm{37, 3, 11, 29};
  MetricsReport r = derived_metrics(cm);
  // BA is the mean of the class recalls; accuracy is their support-weighted mean
  CHECK(*r.balanced_accuracy == doctest::Approx(0.5 * (*r.tpr + *r.tnr)));
  const double n = static_cast<double>(cm.total());
  CHECK(*r.accuracy ==
        doctest::Approx((cm.positives() * *r.tpr + cm.negatives() * *r.tnr) / n));
  CHECK(*r.fpr == doctest::Approx(1.0 - *r.tnr));
  CHECK(*r.fnr == doctest::Approx(1.0 - *r.tpr));

  SUBCASE("balanced data makes accuracy equal balanced accuracy") {
    const ConfusionMatrix balanced{45, 5, 12, 38};  // N+ = N- = 50
    MetricsReport b = derived_metrics(balanced);
    CHECK(*b.accuracy == doctest::Approx(*b.balanced_accuracy).epsilon(1e-15));
  }
  SUBCASE("swapping the positive class swaps the paired metrics") {
    const ConfusionMatrix swapped{cm.tn, cm.fp, cm.fn, cm.tp};
    MetricsReport s = derived_metrics(swapped);
    CHECK(*s.precision_pos == doctest::Approx(*r.npv));
    CHECK(*s.npv == doctest::Approx(*r.precision_pos));
    CHECK(*s.tpr == doctest::Approx(*r.tnr));
    CHECK(*s.tnr == doctest::Approx(*r.tpr));
    CHECK(*s.accuracy == doctest::Approx(*r.accuracy));
  }
}

TEST_CASE("metrics JSON carries raw counts and null for undefined") {
  MetricsReport r = derived_metrics(ConfusionMatrix{0, 5, 0, 5});
  const nlohmann::json j = to_json(r);
  CHECK(j.at("counts").at("tp") == 0);
  CHECK(j.at("counts").at("fn") == 5);
  CHECK(j.at("precision_pos").is_null());
  CHECK(j.at("accuracy").get<double>() == doctest::Approx(0.5));
}
