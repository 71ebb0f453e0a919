#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bsglab/io.hpp"

namespace bsglab {

inline constexpr const char* kToolVersion = "1.0.0";

std::string Sha256Hex(const std::string& bytes);
std::string Sha256File(const std::string& path);

// Written next to every artifact. Everything except wall_seconds is a
// function of the command and its parameters.
struct RunManifest {
  std::string command;
  Json params = Json::object();
  uint64_t seed = 0;
  std::string version = kToolVersion;
  std::vector<std::pair<std::string, std::string>> inputs;   // path, sha256
  std::vector<std::pair<std::string, std::string>> outputs;  // path, sha256
  double wall_seconds = 0;

  void AddInput(const std::string& path);
  void AddOutput(const std::string& path);
  // Digest of the command, parameters, seed, version and inputs.
  std::string Key() const;
};

Json ToJson(const RunManifest& m);

}  // namespace bsglab
