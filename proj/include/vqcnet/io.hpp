#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "vqcnet/diagnostics.hpp"
#include "vqcnet/trainer.hpp"

namespace vqcnet {

// Bumped whenever a persisted column set changes; stamped into every file.
inline constexpr int kSchemaVersion = 1;

// 17 significant digits (printf %.17g): enough to round-trip a double, and
// a fixed format so repeated runs emit identical bytes.
std::string g17(double value);

std::string csv_escape(std::string_view field);

// All renderers produce LF-terminated text; write_text_file writes it in
// binary mode so the bytes are identical across platforms.
std::string trajectory_csv(const RunResult& result);
std::string records_csv(std::span<const RunRow> rows, std::string_view experiment);
std::string aggregate_csv(std::span<const SweepCell> cells);
std::string variance_csv(std::span<const VarianceReport> reports);
std::string identity_csv(std::span<const IdentityProximityReport> reports);
std::string lemmas_csv(std::span<const LemmaCheckReport> reports);

void ensure_dir(const std::filesystem::path& dir);
void write_text_file(const std::filesystem::path& path, std::string_view content);
// Sorted-key dump with a trailing newline; deterministic for a given value.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& value);

// Flat JSON config: top-level object, scalar values only.
nlohmann::json load_flat_config(const std::filesystem::path& path);
void reject_unknown_keys(const nlohmann::json& config,
                         std::span<const std::string_view> allowed);

// Default output directory: $VQCNET_OUT when set, otherwise ./vqcnet-out.
std::string default_out_dir();

// Wall-clock timestamp (UTC, ISO 8601); deliberately kept out of every
// deterministic artifact and only written when timings are requested.
std::string iso_timestamp();

}  // namespace vqcnet
