/*
 * Copyright 2026 The bn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Persistent cache of ResultRecords in a single JSON object keyed "g,d,r,f".
// Entries written by a different engine version are treated as misses.
// Writes go to a temporary sibling file which is then renamed over the
// target, so readers never observe a partial file.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <unistd.h>

#include "json.hpp"

#include "bn/errors.hpp"
#include "bn/record.hpp"
#include "bn/version.hpp"

namespace bn {

inline std::string cache_key(int g, int d, int r, int f) {
  return std::to_string(g) + "," + std::to_string(d) + "," + std::to_string(r) + "," + std::to_string(f);
}

class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

  std::optional<ResultRecord> lookup(int g, int d, int r, int f) {
    auto it = entries_.find(cache_key(g, d, r, f));
    if (it != entries_.end()) {
      try {
        ResultRecord rec = record_from_json(*it);
        if (rec.engine_version == kEngineVersion && rec.g == g && rec.d == d && rec.r == r && rec.f == f) {
          ++hits_;
          return rec;
        }
      } catch (const invalid_argument&) {
        // unreadable entry: recompute and overwrite
      }
    }
    ++misses_;
    return std::nullopt;
  }

  void store(const ResultRecord& rec) {
    entries_[cache_key(rec.g, rec.d, rec.r, rec.f)] = to_json(rec);
    dirty_ = true;
  }

  void save() {
    if (!dirty_) return;
    std::filesystem::path tmp = path_;
    tmp += ".tmp." + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw error("cannot write cache file " + tmp.string());
      out << entries_.dump(1) << '\n';
      if (!out) throw error("failed writing cache file " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      throw error("cannot replace cache file " + path_.string());
    }
    dirty_ = false;
  }

  unsigned hits() const { return hits_; }
  unsigned misses() const { return misses_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  void load() {
    std::ifstream in(path_);
    if (!in) {
      entries_ = nlohmann::ordered_json::object();
      return;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      entries_ = nlohmann::ordered_json::parse(buf.str());
    } catch (const nlohmann::json::exception&) {
      throw invalid_argument("cache file " + path_.string() + " is not valid JSON");
    }
    if (!entries_.is_object()) throw invalid_argument("cache file " + path_.string() + " is not a JSON object");
  }

  std::filesystem::path path_;
  nlohmann::ordered_json entries_;
  unsigned hits_ = 0;
  unsigned misses_ = 0;
  bool dirty_ = false;
};

}  // namespace bn
