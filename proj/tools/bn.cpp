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

// bn: Betti numbers of Brill-Noether varieties G^r_d(C) and intersection
// cohomology of W^r_d(C) for a general curve.
//
// Exit codes: 0 success, 1 internal or verification failure, 2 invalid input.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bn/brillnoether.hpp"
#include "bn/cache.hpp"
#include "bn/errors.hpp"
#include "bn/record.hpp"
#include "bn/topology.hpp"
#include "bn/verify.hpp"
#include "bn/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInvalid = 2;

struct Options {
  int g = 0;
  int d = 0;
  int r = 0;
  std::optional<int> f;
  int k = 0;
  int n = 0;
  int gmax = 8;
  std::string format = "text";
  std::string cache_path;
  bool stats = false;
};

struct Session {
  std::optional<bn::ResultCache> cache;
  unsigned engine_calls = 0;
};

void add_triple(CLI::App* cmd, Options& o) {
  cmd->add_option("-g,--genus", o.g, "genus of the curve")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("-d,--degree", o.d, "degree of the linear series")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("-r,--rank", o.r, "dimension of the linear series")->required()->check(CLI::NonNegativeNumber);
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

void add_engine_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--f", o.f, "override the twisting degree f (>= 2g-d-1)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--cache", o.cache_path, "result cache file (default: $BN_CACHE)");
  cmd->add_flag("--stats", o.stats, "report cache hits and engine calls on stderr");
}

bn::ResultRecord compute_record(const Options& o, Session& session) {
  const bn::BNParameters p = bn::degeneracy_parameters(o.g, o.d, o.r, o.f);
  if (p.rho < 0) throw bn::empty_locus("rho < 0: W^r_d empty for general C");
  if (session.cache)
    if (auto hit = session.cache->lookup(p.g, p.d, p.r, p.f)) return *hit;
  ++session.engine_calls;
  const bn::Integer phi = bn::euler_characteristic_Grd(p);
  const bn::ResultRecord rec =
      bn::make_record(p, phi, bn::betti_G_from_phi(p, phi), bn::smallness_check(p));
  if (session.cache) {
    session.cache->store(rec);
    session.cache->save();
  }
  return rec;
}

void print_table(const std::vector<bn::Integer>& betti, const std::string& format) {
  if (format == "csv") {
    std::cout << "degree,betti\n";
    for (std::size_t i = 0; i < betti.size(); ++i) std::cout << i << ',' << betti[i] << '\n';
    return;
  }
  for (std::size_t i = 0; i < betti.size(); ++i) std::cout << i << '\t' << betti[i] << '\n';
}

int cmd_rho(const Options& o) {
  const long rho = bn::brill_noether_number(o.g, o.d, o.r);
  if (o.format == "json") {
    nlohmann::ordered_json j{{"g", o.g}, {"d", o.d}, {"r", o.r}, {"rho", rho}};
    std::cout << j.dump() << '\n';
  } else if (o.format == "csv") {
    std::cout << "g,d,r,rho\n" << o.g << ',' << o.d << ',' << o.r << ',' << rho << '\n';
  } else {
    std::cout << rho << '\n';
  }
  return kExitOk;
}

int cmd_record(const Options& o, Session& session, bool with_smallness) {
  const bn::ResultRecord rec = compute_record(o, session);
  if (o.format == "json") std::cout << bn::render_json(rec) << '\n';
  else if (o.format == "csv") std::cout << bn::render_csv(rec);
  else std::cout << bn::render_text(rec, with_smallness);
  return kExitOk;
}

int cmd_euler(const Options& o, Session& session) {
  const bn::ResultRecord rec = compute_record(o, session);
  if (o.format == "json") {
    nlohmann::ordered_json j{{"g", rec.g}, {"d", rec.d}, {"r", rec.r}, {"f", rec.f}, {"rho", rec.rho}};
    j["phi"] = bn::detail::to_json_integer(rec.phi);
    std::cout << j.dump() << '\n';
  } else if (o.format == "csv") {
    std::cout << "g,d,r,f,phi\n" << rec.g << ',' << rec.d << ',' << rec.r << ',' << rec.f << ',' << rec.phi << '\n';
  } else {
    std::cout << rec.phi << '\n';
  }
  return kExitOk;
}

int cmd_gbundle(const Options& o) {
  if (o.k > o.n) throw bn::invalid_argument("gbundle requires k <= n");
  const bn::Polynomial p = bn::poincare_grassmann_bundle(o.g, o.k, o.n);
  const bn::BettiTable table =
      bn::BettiTable::from_polynomial(p, static_cast<std::size_t>(o.g + o.k * (o.n - o.k)));
  if (o.format == "json") {
    nlohmann::ordered_json j{{"g", o.g}, {"k", o.k}, {"n", o.n}};
    auto betti = nlohmann::ordered_json::array();
    for (const auto& b : table.entries()) betti.push_back(bn::detail::to_json_integer(b));
    j["betti"] = std::move(betti);
    std::cout << j.dump() << '\n';
  } else {
    print_table(table.entries(), o.format);
  }
  return kExitOk;
}

int cmd_smallness(const Options& o) {
  const bn::BNParameters p = bn::degeneracy_parameters(o.g, o.d, o.r, o.f);
  const bn::SmallnessReport rep = bn::smallness_check(p);
  if (o.format == "json") {
    nlohmann::ordered_json j{{"g", p.g}, {"d", p.d}, {"r", p.r}, {"rho", p.rho}};
    auto strata = nlohmann::ordered_json::array();
    for (const auto& s : rep.strata)
      strata.push_back({{"l", s.l}, {"stratum_dim", s.stratum_dim}, {"fiber_dim", s.fiber_dim}, {"slack", s.slack}});
    j["strata"] = std::move(strata);
    j["verdict"] = std::string(bn::to_string(rep.verdict));
    j["certified"] = rep.certified();
    std::cout << j.dump() << '\n';
  } else if (o.format == "csv") {
    std::cout << "l,stratum_dim,fiber_dim,slack\n";
    for (const auto& s : rep.strata)
      std::cout << s.l << ',' << s.stratum_dim << ',' << s.fiber_dim << ',' << s.slack << '\n';
  } else {
    std::cout << "rho=" << p.rho << '\n';
    for (const auto& s : rep.strata)
      std::cout << "l=" << s.l << " stratum_dim=" << s.stratum_dim << " fiber_dim=" << s.fiber_dim
                << " slack=" << s.slack << '\n';
    std::cout << "verdict: " << bn::to_string(rep.verdict) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const auto results = bn::run_verification(o.gmax);
  unsigned failed_suites = 0;
  for (const auto& res : results) {
    std::cout << res.name << ": " << res.passed << " passed, " << res.failed << " failed\n";
    for (const auto& why : res.failures) std::cout << "  FAIL " << why << '\n';
    if (!res.ok()) ++failed_suites;
  }
  if (failed_suites == 0) {
    std::cout << "all suites passed\n";
    return kExitOk;
  }
  std::cout << failed_suites << " suite(s) failed\n";
  return kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of Brill-Noether varieties and loci", "bn"};
  app.require_subcommand(1);
  Options o;

  auto* rho = app.add_subcommand("rho", "Brill-Noether number rho(g,d,r)");
  add_triple(rho, o);
  add_format(rho, o);

  auto* betti = app.add_subcommand("betti", "Betti table of G^r_d(C)");
  add_triple(betti, o);
  add_format(betti, o);
  add_engine_flags(betti, o);

  auto* ih = app.add_subcommand("ih", "intersection cohomology of W^r_d(C)");
  add_triple(ih, o);
  add_format(ih, o);
  add_engine_flags(ih, o);

  auto* euler = app.add_subcommand("euler", "Euler characteristic of G^r_d(C)");
  add_triple(euler, o);
  add_format(euler, o);
  add_engine_flags(euler, o);

  auto* smallness = app.add_subcommand("smallness", "smallness of G^r_d(C) -> W^r_d(C)");
  add_triple(smallness, o);
  add_format(smallness, o);
  smallness->add_option("--f", o.f, "override the twisting degree f")->check(CLI::NonNegativeNumber);

  auto* gbundle = app.add_subcommand("gbundle", "Poincare polynomial of Gr(k, n) bundle over a g-torus");
  gbundle->add_option("-g,--genus", o.g)->required()->check(CLI::NonNegativeNumber);
  gbundle->add_option("-k", o.k)->required()->check(CLI::NonNegativeNumber);
  gbundle->add_option("-n", o.n)->required()->check(CLI::NonNegativeNumber);
  add_format(gbundle, o);

  auto* verify = app.add_subcommand("verify", "run the invariant sweeps");
  verify->add_option("--gmax", o.gmax, "largest genus")->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitInvalid;
  }

  Session session;
  try {
    std::string cache_path = o.cache_path;
    if (cache_path.empty())
      if (const char* env = std::getenv("BN_CACHE")) cache_path = env;
    const bool uses_engine = betti->parsed() || ih->parsed() || euler->parsed();
    if (uses_engine && !cache_path.empty()) session.cache.emplace(cache_path);

    int code = kExitOk;
    if (rho->parsed()) code = cmd_rho(o);
    else if (betti->parsed()) code = cmd_record(o, session, false);
    else if (ih->parsed()) code = cmd_record(o, session, true);
    else if (euler->parsed()) code = cmd_euler(o, session);
    else if (smallness->parsed()) code = cmd_smallness(o);
    else if (gbundle->parsed()) code = cmd_gbundle(o);
    else if (verify->parsed()) code = cmd_verify(o);

    if (o.stats)
      std::cerr << "cache_hits=" << (session.cache ? session.cache->hits() : 0)
                << " cache_misses=" << (session.cache ? session.cache->misses() : 0)
                << " engine_calls=" << session.engine_calls << '\n';
    return code;
  } catch (const bn::internal_consistency& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const bn::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const bn::unsupported_regime& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const bn::empty_locus& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const bn::resource_limit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
