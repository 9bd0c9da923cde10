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

// ResultRecord: the unit of output of `bn betti` / `bn ih` and the value type
// of the result cache, with its JSON, text and CSV renderings.

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bn/brillnoether.hpp"
#include "bn/errors.hpp"
#include "bn/exactmath.hpp"
#include "bn/version.hpp"

namespace bn {

struct ResultRecord {
  int g = 0;
  int d = 0;
  int r = 0;
  int f = 0;
  long rho = 0;
  Integer phi = 0;
  std::vector<Integer> betti;
  SmallnessVerdict smallness_verdict = SmallnessVerdict::vacuously_small;
  bool certified = true;
  std::string engine_version = kEngineVersion;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

inline ResultRecord make_record(const BNParameters& p, const Integer& phi, const BettiTable& table,
                                const SmallnessReport& smallness) {
  ResultRecord rec;
  rec.g = p.g;
  rec.d = p.d;
  rec.r = p.r;
  rec.f = p.f;
  rec.rho = p.rho;
  rec.phi = phi;
  rec.betti = table.entries();
  rec.smallness_verdict = smallness.verdict;
  rec.certified = smallness.certified();
  return rec;
}

namespace detail {

inline std::int64_t to_json_integer(const Integer& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t()))
    throw resource_limit("integer " + v.get_str() + " exceeds the 64-bit JSON integer range");
  return static_cast<std::int64_t>(v.get_si());
}

inline Integer from_json_integer(const nlohmann::ordered_json& j, const char* field) {
  if (!j.is_number_integer()) throw invalid_argument(std::string("record field '") + field + "' must be an integer");
  return Integer(j.get<long>());
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const ResultRecord& rec) {
  nlohmann::ordered_json j;
  j["g"] = rec.g;
  j["d"] = rec.d;
  j["r"] = rec.r;
  j["f"] = rec.f;
  j["rho"] = rec.rho;
  j["phi"] = detail::to_json_integer(rec.phi);
  auto betti = nlohmann::ordered_json::array();
  for (const auto& b : rec.betti) betti.push_back(detail::to_json_integer(b));
  j["betti"] = std::move(betti);
  j["smallness_verdict"] = std::string(to_string(rec.smallness_verdict));
  j["certified"] = rec.certified;
  j["engine_version"] = rec.engine_version;
  return j;
}

inline ResultRecord record_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw invalid_argument("record must be a JSON object");
  for (const char* field : {"g", "d", "r", "f", "rho", "phi", "betti", "smallness_verdict", "certified", "engine_version"})
    if (!j.contains(field)) throw invalid_argument(std::string("record is missing field '") + field + "'");
  ResultRecord rec;
  auto small_int = [&](const char* field) {
    if (!j[field].is_number_integer()) throw invalid_argument(std::string("record field '") + field + "' must be an integer");
    return j[field].get<long>();
  };
  rec.g = static_cast<int>(small_int("g"));
  rec.d = static_cast<int>(small_int("d"));
  rec.r = static_cast<int>(small_int("r"));
  rec.f = static_cast<int>(small_int("f"));
  rec.rho = small_int("rho");
  rec.phi = detail::from_json_integer(j["phi"], "phi");
  if (!j["betti"].is_array()) throw invalid_argument("record field 'betti' must be an array");
  for (const auto& b : j["betti"]) rec.betti.push_back(detail::from_json_integer(b, "betti"));
  if (!j["smallness_verdict"].is_string()) throw invalid_argument("record field 'smallness_verdict' must be a string");
  rec.smallness_verdict = verdict_from_string(j["smallness_verdict"].get<std::string>());
  if (!j["certified"].is_boolean()) throw invalid_argument("record field 'certified' must be a boolean");
  rec.certified = j["certified"].get<bool>();
  if (!j["engine_version"].is_string()) throw invalid_argument("record field 'engine_version' must be a string");
  rec.engine_version = j["engine_version"].get<std::string>();
  if (rec.rho >= 0 && rec.betti.size() != static_cast<std::size_t>(2 * rec.rho + 1))
    throw invalid_argument("record betti length does not match 2*rho+1");
  return rec;
}

inline std::string render_json(const ResultRecord& rec) { return to_json(rec).dump(); }

inline ResultRecord parse_record(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_argument(std::string("malformed record JSON: ") + e.what());
  }
  return record_from_json(j);
}

inline std::string render_csv(const ResultRecord& rec) {
  std::ostringstream os;
  os << "degree,betti\n";
  for (std::size_t i = 0; i < rec.betti.size(); ++i) os << i << ',' << rec.betti[i] << '\n';
  return os.str();
}

inline std::string render_text(const ResultRecord& rec, bool with_smallness) {
  std::size_t width = 6;
  for (const auto& b : rec.betti) width = std::max(width, b.get_str().size());
  std::ostringstream os;
  os << "g=" << rec.g << " d=" << rec.d << " r=" << rec.r << " f=" << rec.f << " rho=" << rec.rho
     << " phi=" << rec.phi << '\n';
  os << "degree  " << std::string(width - 5, ' ') << "betti\n";
  for (std::size_t i = 0; i < rec.betti.size(); ++i) {
    std::string deg = std::to_string(i);
    std::string val = rec.betti[i].get_str();
    os << std::string(6 - std::min<std::size_t>(6, deg.size()), ' ') << deg << "  "
       << std::string(width - val.size(), ' ') << val << '\n';
  }
  if (with_smallness)
    os << "smallness: " << to_string(rec.smallness_verdict) << (rec.certified ? " (certified)" : " (not certified)")
       << '\n';
  return os.str();
}

}  // namespace bn
