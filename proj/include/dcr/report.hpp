#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "dcr/factorization.hpp"
#include "dcr/instance_file.hpp"
#include "dcr/oracle.hpp"

namespace dcr {

struct ComputeOptions {
  std::string method = "auto";  ///< auto|ip5m|oracle|incl-excl|mc
  std::optional<Mode> mode;     ///< defaults to the file's natural mode
  std::optional<Rational> p_value;
  IrrelevanceLevel irrelevance = IrrelevanceLevel::C3;
  PivotPolicy pivot = PivotPolicy::Random;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t samples = 1'000'000;
  bool trace = false;
  std::size_t trace_limit = 10'000;
  OracleLimits limits;
};

/// Result documents. Every document is a pure function of its inputs (no
/// timings, no host data), so identical invocations serialize identically.
nlohmann::json compute_document(const InstanceFile& file, const ComputeOptions& options);
nlohmann::json irrelevant_document(const InstanceFile& file, IrrelevanceLevel condition);
nlohmann::json reduce_document(const InstanceFile& file, IrrelevanceLevel prune_first);

nlohmann::json value_json(const Prob& value);
nlohmann::json stats_json(const FactorStats& stats);
nlohmann::json step_json(const ReductionStep& step);
nlohmann::json certificate_json(const Graph& g, const IrrelevanceCertificate& c);

/// Two-space indented JSON with a trailing newline.
std::string serialize(const nlohmann::json& doc);

}  // namespace dcr
