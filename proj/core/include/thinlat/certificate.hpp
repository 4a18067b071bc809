#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace thinlat {

inline constexpr const char* kCertSchema = "thinlat-cert/1";
inline constexpr const char* kToolVersion = "0.1.0";

/// FNV-1a over the canonical dump; timing and the hash itself are excluded,
/// so reruns with identical inputs produce identical hashes.
std::string content_hash(const nlohmann::json& body);

/// Fills schema/toolchain fields and stamps the content hash.
nlohmann::json finalize_certificate(nlohmann::json body, long timing_ms);

/// True when every entry of body["verdicts"] equals "PASS".
bool certificate_passes(const nlohmann::json& body);

/// Store: one JSON file per command inside cert_dir.
void store_certificate(const nlohmann::json& body, const std::string& cert_dir);

/// Loads a stored certificate, recomputing and checking its content hash.
/// Returns nullopt when missing or stale.
std::optional<nlohmann::json> load_certificate(const std::string& cert_dir,
                                               const std::string& command);

/// Upstream gating: the named upstream certificate must exist, verify its
/// own hash, and pass. Returns its content hash.
std::string require_upstream_pass(const std::string& cert_dir, const std::string& command);

/// Human-readable rendering.
std::string render_markdown(const nlohmann::json& body);

}  // namespace thinlat
