#include "bsglab/manifest.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <memory>
#include <stdexcept>

#include "bsglab/error.hpp"

namespace bsglab {

std::string Sha256Hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
    throw std::runtime_error("sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string Sha256File(const std::string& path) { return Sha256Hex(ReadTextFile(path)); }

void RunManifest::AddInput(const std::string& path) {
  inputs.emplace_back(path, Sha256File(path));
}

void RunManifest::AddOutput(const std::string& path) {
  outputs.emplace_back(path, Sha256File(path));
}

std::string RunManifest::Key() const {
  Json j;
  j["command"] = command;
  j["params"] = params;
  j["seed"] = seed;
  j["version"] = version;
  Json in = Json::array();
  for (const auto& [p, h] : inputs) in.push_back(h);
  j["inputs"] = in;
  return Sha256Hex(j.dump());
}

Json ToJson(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  j["params"] = m.params;
  j["seed"] = m.seed;
  j["version"] = m.version;
  j["key"] = m.Key();
  auto files = [](const auto& list) {
    Json arr = Json::array();
    for (const auto& [p, h] : list) arr.push_back({{"path", p}, {"sha256", h}});
    return arr;
  };
  j["inputs"] = files(m.inputs);
  j["outputs"] = files(m.outputs);
  j["wall_seconds"] = m.wall_seconds;
  return j;
}

}  // namespace bsglab
