/*
   Copyright 2026 qpend developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QPEND_CACHE_HPP
#define QPEND_CACHE_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace qpend {

/// Identifies a cached computation. The digest folds in every parameter plus
/// the code-version tag, and the full parameter map is echoed inside the entry
/// and verified on read, so distinct parameters can never alias.
struct CacheKey {
    std::string command;
    std::map<std::string, std::string> params;

    std::string digest() const;
};

/// Append-only directory of JSON results, one file per key digest. Writes go
/// through a temp file and an atomic rename: concurrent writers of one key
/// leave exactly one valid entry, and readers never observe a torn file.
/// Per-sector payloads make interrupted runs resumable at sector granularity.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path directory);

    const std::filesystem::path& directory() const { return dir_; }

    void put(const CacheKey& key, const nlohmann::json& payload) const;

    /// Returns the payload, or nullopt on a miss. Unparseable entries and
    /// parameter-echo mismatches are treated as misses after a warning on
    /// stderr; the caller recomputes.
    std::optional<nlohmann::json> get(const CacheKey& key) const;

private:
    std::filesystem::path dir_;
    std::filesystem::path path_for(const CacheKey& key) const;
};

}  // namespace qpend

#endif
