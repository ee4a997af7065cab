// Copyright 2026 The qsnake Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qsnake/kasteleyn.hpp"
#include "qsnake/matching.hpp"
#include "qsnake/qrational.hpp"

namespace qsnake {

/// Coprime pairs 1 <= s < r <= max_r, ordered by r then s.
inline std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t max_r) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t r = 2; r <= max_r; ++r) {
    for (std::int64_t s = 1; s < r; ++s) {
      if (std::gcd(r, s) == 1) out.emplace_back(r, s);
    }
  }
  return out;
}

/// Applies f to every index in [0, n) on up to `jobs` threads. Results are
/// stored by index, so the output does not depend on scheduling.
template <typename F>
auto parallel_map(std::size_t n, unsigned jobs, F f) -> std::vector<decltype(f(std::size_t{}))> {
  std::vector<decltype(f(std::size_t{}))> out(n);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < n && !failed; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

struct PairResult {
  std::int64_t r = 0;
  std::int64_t s = 0;
  bool routes = false;     // four q-rational routes agree
  bool theorem = false;    // q^n M_q(G) == R(q)
  bool counts = false;     // M_1 == r and the denominator count == s
  bool kasteleyn = false;  // |det| == M_q(G) and every face is odd
  bool cases = false;      // case recurrence (vacuous when not applicable)
  DenominatorRelation relation = DenominatorRelation::kUnrelated;

  bool pass() const { return routes && theorem && counts && kasteleyn && cases; }

  std::string failures() const {
    std::string out;
    auto add = [&](bool ok, const char* name) {
      if (ok) return;
      if (!out.empty()) out += ',';
      out += name;
    };
    add(routes, "routes");
    add(theorem, "theorem");
    add(counts, "counts");
    add(kasteleyn, "kasteleyn");
    add(cases, "cases");
    return out;
  }
};

inline PairResult check_pair(std::int64_t r, std::int64_t s) {
  PairResult out;
  out.r = r;
  out.s = s;
  const ContinuedFraction cf = cf_expand(r, s);
  const RouteComparison routes = q_rational_all_routes(r, s);
  out.routes = routes.agree;

  const SnakeGraph g = make_snake(cf);
  const LaurentPoly stat = matching_stat_dp(g);
  out.theorem = stat.shifted(static_cast<int>(scalar_exponent(cf))) == routes.matrix.num;

  const DenominatorReport den = denominator_report(r, s);
  out.counts = eval_at_one(stat) == Integer(r) && den.count_ok;
  out.relation = den.relation;

  const KasteleynReport kast = verify_kasteleyn(r, s);
  out.kasteleyn = kast.det_matches && kast.faces_ok;

  const CaseRecurrence rec = case_recurrences_check(cf);
  out.cases = !rec.applicable || rec.holds;
  return out;
}

struct SweepSummary {
  std::int64_t max_r = 0;
  std::size_t pairs = 0;
  std::size_t passed = 0;
  std::size_t denominators_equal = 0;
  std::size_t denominators_shift = 0;
  std::size_t denominators_mirror = 0;
  std::size_t denominators_unrelated = 0;
  std::optional<PairResult> first_failure;

  bool pass() const { return passed == pairs; }
};

inline SweepSummary run_sweep(std::int64_t max_r, unsigned jobs) {
  const auto pairs = coprime_pairs(max_r);
  const auto results = parallel_map(pairs.size(), jobs,
                                    [&](std::size_t i) { return check_pair(pairs[i].first, pairs[i].second); });
  SweepSummary out;
  out.max_r = max_r;
  out.pairs = results.size();
  for (const PairResult& res : results) {
    if (res.pass()) {
      ++out.passed;
    } else if (!out.first_failure) {
      out.first_failure = res;
    }
    switch (res.relation) {
      case DenominatorRelation::kEqual: ++out.denominators_equal; break;
      case DenominatorRelation::kShift: ++out.denominators_shift; break;
      case DenominatorRelation::kMirror: ++out.denominators_mirror; break;
      case DenominatorRelation::kUnrelated: ++out.denominators_unrelated; break;
    }
  }
  return out;
}

}  // namespace qsnake
