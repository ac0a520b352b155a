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

#ifndef JETCALC_CACHE_HPP
#define JETCALC_CACHE_HPP

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "jetcalc/dimension.hpp"

namespace jetcalc {

struct BasisKey {
  int k = 1;
  int r = 1;
  int m = 0;
  Group group = Group::unipotent;
};

/// Hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

/// On-disk store of invariant bases. Each entry is
///   {"payload": <InvariantBasis json>, "sha256": "<hex of payload.dump()>"}
/// written through a temporary file and a rename.
class BasisCache {
 public:
  explicit BasisCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

  /// $JETCALC_CACHE, else $XDG_CACHE_HOME/jetcalc, else ~/.cache/jetcalc.
  static std::filesystem::path default_directory();

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path path_for(const BasisKey& key) const;

  /// nullopt when absent. Entries failing the hash or key check are
  /// reported on `warnings` and treated as absent.
  std::optional<InvariantBasis> load(const BasisKey& key, std::ostream* warnings = nullptr) const;
  void store(const InvariantBasis& basis) const;

 private:
  std::filesystem::path dir_;
};

struct CachedBasis {
  InvariantBasis basis;
  bool from_cache = false;
  MatrixShape shape;  // zero when loaded
};

/// Loads the weight-m basis or computes and stores it.
CachedBasis cached_invariant_basis(const BasisCache& cache, const JetConfig& config, int m,
                                   std::size_t size_limit, std::ostream* warnings = nullptr);

}  // namespace jetcalc

#endif  // JETCALC_CACHE_HPP
