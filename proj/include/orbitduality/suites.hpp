#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "orbitduality/component_groups.hpp"

namespace orbitduality {

// Runs f(i) for i in [0, n) on up to `jobs` threads (0 = all processors).
// f must only write to its own slot of any shared output.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
  for (auto& th : pool) th.join();
}

struct SuiteOptions {
  int max_rank = 5;   // so(m) m <= 2r+1, sp(2n) and so(2n) n <= r
  unsigned jobs = 0;
};

struct SuiteResult {
  int id = 0;
  std::string name;
  long long checks = 0;
  long long failure_count = 0;
  std::vector<std::string> failures;  // first few messages only
  double seconds = 0;
  nlohmann::json detail = nlohmann::json::object();
  bool pass() const { return failure_count == 0; }

  void check(bool ok, const std::string& message);
};

// Ambient sizes covered at the given rank bound.
std::vector<std::pair<Kind, int>> sizes_in_range(int max_rank);
// Reduced LA data in range, optionally restricted to special / distinguished.
std::vector<MarkedPartition> data_in_range(int max_rank, bool special_only, bool distinguished_only);

SuiteResult suite_minimality(const SuiteOptions& o);          // 1
SuiteResult suite_gamma_consistency(const SuiteOptions& o);   // 2
SuiteResult suite_duality(const SuiteOptions& o);             // 3
SuiteResult suite_rigidity(const SuiteOptions& o);            // 4
SuiteResult suite_gamma_groups(const SuiteOptions& o);        // 5
SuiteResult suite_richardson(const SuiteOptions& o);          // 6
SuiteResult suite_point_values(const SuiteOptions& o);        // 7
SuiteResult suite_kernel(const SuiteOptions& o);              // 8

std::vector<std::function<SuiteResult(const SuiteOptions&)>> all_suites();
SuiteResult run_suite(int id, const SuiteOptions& o);

nlohmann::json to_json(const SuiteResult& r);

}  // namespace orbitduality
