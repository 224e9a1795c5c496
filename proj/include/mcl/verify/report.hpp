#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fnmatch.h>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "mcl/verify/fixtures.hpp"

namespace mcl {

struct FixtureResult {
  std::string id;
  std::string description;
  Origin origin;
  std::string expected;
  std::string computed;
  bool pass;
  double runtime_ms;
};

struct VerificationReport {
  std::vector<FixtureResult> results;  // fixture-id order
  FixtureSeed seed = kDefaultSeed;

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; }));
  }
  std::size_t failed() const { return results.size() - passed(); }
  bool all_pass() const { return failed() == 0; }
  const FixtureResult* find(std::string_view id) const {
    for (const auto& r : results)
      if (r.id == id) return &r;
    return nullptr;
  }
};

struct VerifyOptions {
  std::optional<std::string> filter;              // glob over fixture ids
  std::map<std::string, std::string> expected;    // overrides by id
  std::optional<FixtureSeed> seed;
  unsigned jobs = 1;
};

/// Replaces expected values and the seed with those of a fixture file.
inline void apply_fixture_file(VerifyOptions& opt, const FixtureFile& f) {
  opt.seed = f.seed;
  for (const auto& e : f.entries) opt.expected[e.id] = e.expected;
}

inline bool fixture_matches(std::string_view id, const std::optional<std::string>& filter) {
  if (!filter) return true;
  return fnmatch(filter->c_str(), std::string(id).c_str(), 0) == 0;
}

/// Runs the selected fixtures. Failures, including exceptions thrown by a
/// fixture, become report entries.
inline VerificationReport verify_all(const VerifyOptions& opt = {}) {
  VerificationReport rep;
  rep.seed = opt.seed.value_or(kDefaultSeed);
  std::vector<const Fixture*> sel;
  for (const auto& f : fixture_registry())
    if (fixture_matches(f.id, opt.filter)) sel.push_back(&f);
  rep.results.resize(sel.size());

  auto run = [&](std::size_t i) {
    const Fixture& f = *sel[i];
    auto it = opt.expected.find(f.id);
    std::string expected = it == opt.expected.end() ? f.expected : it->second;
    auto t0 = std::chrono::steady_clock::now();
    std::string computed;
    try {
      computed = f.compute(rep.seed ^ detail::fnv1a(f.id));
    } catch (const std::exception& e) {
      computed = std::string("error: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.results[i] = {f.id, f.description, f.origin, expected, computed, computed == expected, ms};
  };

  unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1 || sel.size() < 2) {
    for (std::size_t i = 0; i < sel.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, sel.size()); ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < sel.size();) run(i);
      });
    for (auto& th : pool) th.join();
  }
  return rep;
}

/// Runtimes are left out unless asked for, so that reports of two runs
/// compare byte for byte.
inline nlohmann::ordered_json report_to_json(const VerificationReport& rep, bool timings = false) {
  nlohmann::ordered_json j;
  j["seed"] = rep.seed;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rep.results) {
    nlohmann::ordered_json e{{"id", r.id},
                             {"origin", std::string(to_string(r.origin))},
                             {"expected", r.expected},
                             {"computed", r.computed},
                             {"pass", r.pass}};
    if (timings) e["runtime_ms"] = r.runtime_ms;
    arr.push_back(std::move(e));
  }
  j["fixtures"] = std::move(arr);
  j["summary"] = {{"total", rep.results.size()}, {"passed", rep.passed()}, {"failed", rep.failed()}};
  auto consts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : documented_constants()) consts[k] = v;
  j["documented_constants"] = std::move(consts);
  return j;
}

inline std::string report_to_text(const VerificationReport& rep, bool timings = false) {
  std::size_t w = 2;
  for (const auto& r : rep.results) w = std::max(w, r.id.size());
  std::string out;
  for (const auto& r : rep.results) {
    out += r.pass ? "PASS  " : "FAIL  ";
    out += r.id + std::string(w - r.id.size() + 2, ' ');
    out += r.computed;
    if (!r.pass) out += "   (expected " + r.expected + ")";
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "   [%.1f ms]", r.runtime_ms);
      out += buf;
    }
    out += "\n";
  }
  out += "\n" + std::to_string(rep.passed()) + "/" + std::to_string(rep.results.size()) + " fixtures pass";
  if (rep.failed()) out += ", " + std::to_string(rep.failed()) + " fail";
  out += "\n\nDocumented constants (not recomputed):\n";
  for (const auto& [k, v] : documented_constants()) out += "  " + k + " = " + v + "\n";
  return out;
}

}  // namespace mcl
