#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace noisebound::cli {

std::string sha256_hex(std::string_view data);

// Machine-readable result of one CLI invocation. Every numeric entry carries
// a unit and the name of the inequality or procedure that produced it.
class BoundReport {
 public:
  BoundReport(std::string command, std::vector<std::string> arguments);

  // Digest of the canonical instance JSON the command consumed.
  void set_input(const std::string& instance_json);

  void add(const std::string& name, double value, const std::string& unit, const std::string& provenance);
  void add_text(const std::string& name, const std::string& value, const std::string& provenance);
  void add_flag(const std::string& name, bool value, const std::string& provenance);
  // Extra structured payload (e.g. per-case verification rows) under `key`.
  void attach(const std::string& key, nlohmann::json payload);

  nlohmann::json to_json() const;
  std::string dump() const;

 private:
  std::string command_;
  std::vector<std::string> arguments_;
  std::optional<std::string> digest_;
  nlohmann::json values_ = nlohmann::json::object();
  nlohmann::json attachments_ = nlohmann::json::object();
};

}  // namespace noisebound::cli
