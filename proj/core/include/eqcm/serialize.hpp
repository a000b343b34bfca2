#pragma once

#include <nlohmann/json.hpp>

#include "eqcm/encoding.hpp"
#include "eqcm/metrics.hpp"
#include "eqcm/quantum.hpp"
#include "eqcm/readout.hpp"

namespace eqcm {

/// JSON forms used by the artifact files. Symbol lists are emitted
/// sorted by code point; all numbers keep full double precision.

nlohmann::json to_json(const BinPartition& partition);
BinPartition bin_partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MetricsReport& report);

/// Model export: lambda, family fingerprint (hex) and the weights in
/// family order, keyed by observable label.
nlohmann::json to_json(const ReadoutModel& model, const ObservableFamily& family);
ReadoutModel readout_model_from_json(const nlohmann::json& j);

/// Regression-fixture dump: provenance string, dimension, and the
/// row-major entries as [re, im] pairs.
nlohmann::json to_json(const Hamiltonian& hamiltonian);

}  // namespace eqcm
