/*
   Copyright 2026 The qtgenus Authors

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

#include "theorems/census.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <mutex>
#include <set>
#include <thread>

#include "cohomology/connected_sum.hpp"
#include "error.hpp"

namespace qtg {

SimplePolytope simplex_chain(int n, int k) {
  require(k >= 1, ErrorKind::argument, "need at least one summand");
  const SimplePolytope s = simplex(n);
  SimplePolytope p = s;
  for (int i = 1; i < k; ++i) p = connected_sum(p, p.vertices().back(), s, s.vertices().front());
  return p;
}

CensusReport finiteness_census(int n, int k, int entry_bound, int threads) {
  require(n >= 3, ErrorKind::argument, "census needs n >= 3");
  require(k >= 1, ErrorKind::argument, "census needs k >= 1");
  require(k < n, ErrorKind::hypothesis,
          "k = " + std::to_string(k) + " summands is not below n = " + std::to_string(n));
  const SimplePolytope p = simplex_chain(n, k);
  const auto matrices = enumerate_characteristic_matrices(p, entry_bound, threads);

  std::vector<std::optional<std::vector<long>>> found(matrices.size());
  auto work = [&](size_t i) {
    try {
      auto s = connected_sum_structure(QuasitoricManifold(p, matrices[i]));
      std::sort(s.beta.begin(), s.beta.end());
      found[i] = s.beta;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::shape) throw;
    }
  };
  if (threads <= 1) {
    for (size_t i = 0; i < matrices.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex mu;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        try {
          for (size_t i = next++; i < matrices.size(); i = next++) work(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!error) error = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  CensusReport out;
  out.n = n;
  out.k = k;
  out.entry_bound = entry_bound;
  out.enumerated = matrices.size();
  std::set<std::vector<long>> betas;
  for (const auto& f : found)
    if (f) {
      ++out.matched;
      betas.insert(*f);
    }
  out.betas.assign(betas.begin(), betas.end());
  for (const auto& b : out.betas)
    if (std::any_of(b.begin(), b.end(), [&](long x) { return x <= 0 || x > n + 1; })) out.violations.push_back(b);
  return out;
}

}  // namespace qtg
