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

#include "qpend/cache.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include "qpend/errors.hpp"
#include "qpend/version.hpp"

namespace qpend {

namespace {

constexpr int kSchemaVersion = 1;

std::string canonical(const CacheKey& key) {
    std::string s = "command=" + key.command + "\n";
    for (const auto& [k, v] : key.params)  // std::map iterates sorted
        s += k + "=" + v + "\n";
    s += "code_version=" + std::string(kVersion) + "\n";
    return s;
}

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

}  // namespace

std::string CacheKey::digest() const { return fnv1a_hex(canonical(*this)); }

ResultCache::ResultCache(std::filesystem::path directory) : dir_(std::move(directory)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec)
        throw CacheError("cache: cannot create directory " + dir_.string() + ": " + ec.message());
}

std::filesystem::path ResultCache::path_for(const CacheKey& key) const {
    return dir_ / (key.command + "-" + key.digest() + ".json");
}

void ResultCache::put(const CacheKey& key, const nlohmann::json& payload) const {
    nlohmann::json entry;
    entry["schema_version"] = kSchemaVersion;
    entry["code_version"] = kVersion;
    entry["command"] = key.command;
    entry["params"] = key.params;
    entry["payload"] = payload;

    // unique temp name per writer, then atomic rename
    static thread_local std::mt19937_64 rng{std::random_device{}()};
    std::filesystem::path target = path_for(key);
    std::filesystem::path tmp = target;
    tmp += ".tmp" + std::to_string(rng());
    {
        std::ofstream out(tmp);
        if (!out)
            throw CacheError("cache: cannot open temp file " + tmp.string());
        out << entry.dump(1) << "\n";
        if (!out.good())
            throw CacheError("cache: short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw CacheError("cache: rename failed for " + target.string() + ": " + ec.message());
    }
}

std::optional<nlohmann::json> ResultCache::get(const CacheKey& key) const {
    std::filesystem::path target = path_for(key);
    std::ifstream in(target);
    if (!in)
        return std::nullopt;
    nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
    auto reject = [&](const char* why) -> std::optional<nlohmann::json> {
        std::cerr << "qpend: cache entry " << target.string() << " ignored (" << why
                  << "); recomputing\n";
        return std::nullopt;
    };
    if (entry.is_discarded())
        return reject("unparseable");
    if (!entry.contains("payload") || !entry.contains("params") || !entry.contains("command"))
        return reject("incomplete");
    if (entry["code_version"] != kVersion || entry["schema_version"] != kSchemaVersion)
        return std::nullopt;  // stale version: silent miss
    if (entry["command"] != key.command)
        return reject("command echo mismatch");
    auto echoed = entry["params"].get<std::map<std::string, std::string>>();
    if (echoed != key.params)
        return reject("parameter echo mismatch");
    return entry["payload"];
}

}  // namespace qpend
