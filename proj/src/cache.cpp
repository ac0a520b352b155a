// Copyright 2026 The jetcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jetcalc/cache.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <openssl/evp.h>
#include <unistd.h>

#include "jetcalc/error.hpp"

namespace jetcalc {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::io, "sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

fs::path BasisCache::default_directory() {
  if (const char* env = std::getenv("JETCALC_CACHE"); env != nullptr && *env != '\0') return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0')
    return fs::path(xdg) / "jetcalc";
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0')
    return fs::path(home) / ".cache" / "jetcalc";
  return fs::temp_directory_path() / "jetcalc";
}

fs::path BasisCache::path_for(const BasisKey& key) const {
  return dir_ / ("basis_k" + std::to_string(key.k) + "_r" + std::to_string(key.r) + "_m" +
                 std::to_string(key.m) + "_" + std::string(group_name(key.group)) + ".json");
}

std::optional<InvariantBasis> BasisCache::load(const BasisKey& key, std::ostream* warnings) const {
  const fs::path path = path_for(key);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  auto reject = [&](const std::string& why) -> std::optional<InvariantBasis> {
    if (warnings != nullptr)
      *warnings << "warning: cache entry " << path.string() << " rejected (" << why
                << "); recomputing\n";
    return std::nullopt;
  };
  std::ifstream in(path, std::ios::binary);
  if (!in) return reject("unreadable");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    const nlohmann::json entry = nlohmann::json::parse(buffer.str());
    const nlohmann::json& payload = entry.at("payload");
    if (sha256_hex(payload.dump()) != entry.at("sha256").get<std::string>())
      return reject("content hash mismatch");
    InvariantBasis basis = InvariantBasis::from_json(payload);
    if (basis.config.k != key.k || basis.config.r != key.r || basis.weight != key.m ||
        basis.group != key.group)
      return reject("key mismatch");
    return basis;
  } catch (const nlohmann::json::exception& e) {
    return reject(std::string("malformed: ") + e.what());
  } catch (const Error& e) {
    return reject(e.what());
  }
}

void BasisCache::store(const InvariantBasis& basis) const {
  const BasisKey key{basis.config.k, basis.config.r, basis.weight, basis.group};
  const fs::path path = path_for(key);
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error(ErrorKind::io, "cannot create cache directory " + dir_.string() + ": " + ec.message());

  const nlohmann::json payload = basis.to_json();
  const nlohmann::json entry = {{"payload", payload}, {"sha256", sha256_hex(payload.dump())}};

  std::random_device rd;
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::io, "cannot write cache file " + tmp.string());
    out << entry.dump() << '\n';
    out.flush();
    if (!out) throw Error(ErrorKind::io, "cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorKind::io, "cannot move cache file into place at " + path.string());
  }
}

CachedBasis cached_invariant_basis(const BasisCache& cache, const JetConfig& config, int m,
                                   std::size_t size_limit, std::ostream* warnings) {
  const BasisKey key{config.k, config.r, m, Group::unipotent};
  if (auto hit = cache.load(key, warnings)) return {std::move(*hit), true, {}};
  CachedBasis out;
  out.basis = invariant_basis(config, m, size_limit, &out.shape);
  cache.store(out.basis);
  return out;
}

}  // namespace jetcalc
