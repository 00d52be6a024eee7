// Copyright 2026 The fedl-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <stdexcept>

#include "commands.hpp"
#include "fedl_lab/io_util.hpp"
#include "fedl_lab_cli/cli.hpp"

namespace fedl_lab::cli {

namespace fs = std::filesystem;

std::string git_blob_hash(std::string_view bytes) {
  const std::string header = "blob " + std::to_string(bytes.size()) + '\0';
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  const bool ok = ctx != nullptr &&
                  EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr) == 1 &&
                  EVP_DigestUpdate(ctx, header.data(), header.size()) == 1 &&
                  EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) == 1 &&
                  EVP_DigestFinal_ex(ctx, md.data(), &len) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw std::runtime_error("SHA-1 digest failed");
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof(buf), "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

Manifest::Manifest(const Options& options)
    : options_(options), start_(std::chrono::steady_clock::now()) {}

void Manifest::add_input(const fs::path& path) {
  inputs_.push_back({{"path", path.generic_string()},
                     {"hash", git_blob_hash(read_file(path))}});
}

void Manifest::add_setting(const std::string& key, nlohmann::json value) {
  settings_[key] = std::move(value);
}

void Manifest::add_output(const fs::path& path) {
  outputs_.push_back(path.generic_string());
}

std::string Manifest::content_hash() const {
  // Input paths are left out so that a copied config hashes the same.
  nlohmann::json hashed = nlohmann::json::array();
  for (const auto& in : inputs_) hashed.push_back(in["hash"]);
  const nlohmann::json doc = {{"command", options_.command},
                              {"inputs", hashed},
                              {"settings", settings_}};
  return git_blob_hash(doc.dump());
}

fs::path Manifest::write() const {
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
          .count();
  nlohmann::json doc;
  doc["command"] = options_.command;
  doc["config"] = options_.config ? nlohmann::json(options_.config->generic_string())
                                  : nlohmann::json(nullptr);
  doc["seed"] = settings_.contains("seed") ? settings_["seed"] : nlohmann::json(nullptr);
  doc["content_hash"] = content_hash();
  doc["inputs"] = inputs_;
  doc["settings"] = settings_;
  doc["outputs"] = outputs_;
  doc["status"] = status_;
  doc["wall_time_s"] = wall;
  const fs::path path = options_.out / "manifest.json";
  write_file_atomic(path, doc.dump(2) + "\n");
  return path;
}

}  // namespace fedl_lab::cli
