#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "antisym/campaigns.hpp"
#include "antisym/eof.hpp"

namespace antisym {

/// State file schema: { "n": int, "amplitudes": [[re, im], ...] } with 3^n
/// entries in lexicographic order. Readers reject wrong-length arrays and
/// norm deviation > 1e-9 (accepted tensors are renormalized exactly).
nlohmann::json state_to_json(const AmplitudeTensor& a);
AmplitudeTensor state_from_json(const nlohmann::json& j);
void write_state_file(const std::filesystem::path& path, const AmplitudeTensor& a);
AmplitudeTensor read_state_file(const std::filesystem::path& path);

/// Mixed-state input for the optimizer. Accepts three schemas:
///   state file (pure),
///   { "dim_a": int, "dim_b": int, "entries": [[re, im], ...] } row-major,
///   { "weights": [..], "states": [state-file paths...] }.
/// Square 3^n x 3^n inputs whose support lies in the antisymmetric subspace
/// are tagged with n.
MixedState read_mixed_state_file(const std::filesystem::path& path);

nlohmann::json to_json(const SpectrumSummary& s);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const SampleRecord& r);
nlohmann::json to_json(const CampaignSummary& s);
nlohmann::json to_json(const FurutaGridResult& r);
nlohmann::json to_json(const TracePoint& t);
nlohmann::json to_json(const OptimizerConfig& cfg);
nlohmann::json to_json(const SandwichReport& r);
nlohmann::json to_json(const EcPoint& p);

/// Current UTC time, ISO 8601. Reports are byte-identical apart from this.
std::string iso_timestamp_utc();

}  // namespace antisym
