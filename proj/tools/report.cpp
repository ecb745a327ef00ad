#include "report.hpp"

#include <cmath>
#include <cstdio>

#include <openssl/evp.h>

#include "noisebound/errors.hpp"

#ifndef NOISEBOUND_VERSION
#define NOISEBOUND_VERSION "unknown"
#endif

namespace noisebound::cli {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw ComputationError("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  char buffer[3];
  for (unsigned int k = 0; k < length; ++k) {
    std::snprintf(buffer, sizeof buffer, "%02x", digest[k]);
    hex += buffer;
  }
  return hex;
}

BoundReport::BoundReport(std::string command, std::vector<std::string> arguments)
    : command_(std::move(command)), arguments_(std::move(arguments)) {}

void BoundReport::set_input(const std::string& instance_json) { digest_ = sha256_hex(instance_json); }

void BoundReport::add(const std::string& name, double value, const std::string& unit, const std::string& provenance) {
  if (!std::isfinite(value)) throw ComputationError("result '" + name + "' is not finite");
  values_[name] = {{"value", value}, {"unit", unit}, {"provenance", provenance}};
}

void BoundReport::add_text(const std::string& name, const std::string& value, const std::string& provenance) {
  values_[name] = {{"value", value}, {"unit", "none"}, {"provenance", provenance}};
}

void BoundReport::add_flag(const std::string& name, bool value, const std::string& provenance) {
  values_[name] = {{"value", value}, {"unit", "none"}, {"provenance", provenance}};
}

void BoundReport::attach(const std::string& key, nlohmann::json payload) { attachments_[key] = std::move(payload); }

nlohmann::json BoundReport::to_json() const {
  nlohmann::json doc;
  doc["command"] = command_;
  doc["arguments"] = arguments_;
  doc["input_digest"] = digest_ ? nlohmann::json(*digest_) : nlohmann::json(nullptr);
  doc["values"] = values_;
  for (const auto& [key, payload] : attachments_.items()) doc[key] = payload;
  doc["version"] = NOISEBOUND_VERSION;
  return doc;
}

std::string BoundReport::dump() const { return to_json().dump(2) + "\n"; }

}  // namespace noisebound::cli
