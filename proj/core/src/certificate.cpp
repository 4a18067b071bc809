#include "thinlat/certificate.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace thinlat {

namespace {

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace

std::string content_hash(const nlohmann::json& body) {
  nlohmann::json clean = body;
  clean.erase("content_hash");
  clean.erase("timing_ms");
  return hex64(fnv1a64(clean.dump()));
}

nlohmann::json finalize_certificate(nlohmann::json body, long timing_ms) {
  body["schema"] = kCertSchema;
  body["toolchain"] = {{"name", "thinlat"}, {"version", kToolVersion}};
  body["timing_ms"] = timing_ms;
  body["content_hash"] = content_hash(body);
  return body;
}

bool certificate_passes(const nlohmann::json& body) {
  if (!body.contains("verdicts")) return false;
  for (const auto& [k, v] : body.at("verdicts").items())
    if (v != "PASS") return false;
  return true;
}

void store_certificate(const nlohmann::json& body, const std::string& cert_dir) {
  std::filesystem::create_directories(cert_dir);
  std::string command = body.at("command").get<std::string>();
  std::ofstream out(std::filesystem::path(cert_dir) / (command + ".json"));
  out << body.dump(2) << "\n";
}

std::optional<nlohmann::json> load_certificate(const std::string& cert_dir,
                                               const std::string& command) {
  std::ifstream in(std::filesystem::path(cert_dir) / (command + ".json"));
  if (!in) return std::nullopt;
  nlohmann::json body;
  try {
    in >> body;
  } catch (...) {
    return std::nullopt;
  }
  if (!body.contains("content_hash")) return std::nullopt;
  if (body.at("content_hash").get<std::string>() != content_hash(body)) return std::nullopt;
  return body;
}

std::string require_upstream_pass(const std::string& cert_dir, const std::string& command) {
  auto cert = load_certificate(cert_dir, command);
  if (!cert)
    throw std::runtime_error("missing or stale upstream certificate '" + command +
                             "' in " + cert_dir + "; run `thinlat " + command + "` first");
  if (!certificate_passes(*cert))
    throw std::runtime_error("upstream certificate '" + command + "' did not pass");
  return cert->at("content_hash").get<std::string>();
}

namespace {

void render_value(std::ostringstream& os, const nlohmann::json& v, int indent) {
  std::string pad(static_cast<size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [k, val] : v.items()) {
      if (val.is_object() || (val.is_array() && !val.empty() && val[0].is_object())) {
        os << pad << "- **" << k << "**:\n";
        render_value(os, val, indent + 2);
      } else {
        os << pad << "- **" << k << "**: " << (val.is_string() ? val.get<std::string>() : val.dump())
           << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& item : v) render_value(os, item, indent);
  } else {
    os << pad << "- " << v.dump() << "\n";
  }
}

}  // namespace

std::string render_markdown(const nlohmann::json& body) {
  std::ostringstream os;
  os << "## thinlat certificate: " << body.value("command", "?") << "\n\n";
  if (body.contains("inputs")) {
    os << "### Inputs\n";
    render_value(os, body.at("inputs"), 0);
    os << "\n";
  }
  if (body.contains("verdicts")) {
    os << "### Verdicts\n";
    for (const auto& [k, v] : body.at("verdicts").items())
      os << "- " << (v == "PASS" ? "[PASS] " : "[FAIL] ") << k << "\n";
    os << "\n";
  }
  if (body.contains("witnesses")) {
    os << "### Witnesses\n";
    render_value(os, body.at("witnesses"), 0);
    os << "\n";
  }
  os << "_hash: " << body.value("content_hash", "?") << ", timing: " << body.value("timing_ms", 0)
     << " ms_\n";
  return os.str();
}

}  // namespace thinlat
