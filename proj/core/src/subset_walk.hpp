#pragma once

// Extremal search over small vertex subsets, shared by the gadget, UNE and
// triangle checks.
//
// A State tracks one subset incrementally:
//   void add(uint32_t v); void remove(uint32_t v);
//   double score(std::size_t size);                 // value of the current subset
//   std::vector<uint32_t> detail(std::size_t size);  // extra witness data
// Sizes whose subset count fits the budget are enumerated exhaustively;
// larger sizes are sampled from a seeded stream. Results are independent of
// the worker count: ties go to the lexicographically smaller witness.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "expforge/parallel.hpp"
#include "expforge/rng.hpp"

namespace expforge::detail {

struct SizeResult {
  std::uint32_t size = 0;
  bool exhaustive = true;
  std::uint64_t evaluated = 0;
  bool found = false;
  double value = 0;
  std::vector<std::uint32_t> witness;
  std::vector<std::uint32_t> detail;
};

struct WalkOptions {
  std::uint32_t min_size = 1;
  std::uint32_t max_size = 0;
  std::uint64_t exhaustive_budget = 50'000'000;
  std::uint64_t samples = 2000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  bool maximize = false;
};

inline double binomial_estimate(std::uint32_t n, std::uint32_t s) {
  if (s > n) return 0;
  double c = 1;
  for (std::uint32_t i = 0; i < s; ++i) c = c * (n - i) / (i + 1);
  return c;
}

inline bool improves(const SizeResult& cur, double value, const std::vector<std::uint32_t>& witness, bool maximize) {
  if (!cur.found) return true;
  if (value != cur.value) return maximize ? value > cur.value : value < cur.value;
  return witness < cur.witness;
}

inline void absorb(SizeResult& into, const SizeResult& from, bool maximize) {
  into.evaluated += from.evaluated;
  if (from.found && improves(into, from.value, from.witness, maximize)) {
    into.found = true;
    into.value = from.value;
    into.witness = from.witness;
    into.detail = from.detail;
  }
}

template <class State>
std::vector<SizeResult> walk_subsets(const State& proto, std::uint32_t n, const WalkOptions& opt) {
  std::vector<SizeResult> out;
  const std::uint32_t top = std::min(opt.max_size, n);
  if (opt.min_size > top) return out;
  for (std::uint32_t s = opt.min_size; s <= top; ++s) {
    SizeResult r;
    r.size = s;
    r.exhaustive = binomial_estimate(n, s) <= static_cast<double>(opt.exhaustive_budget);
    out.push_back(r);
  }
  auto slot = [&](std::uint32_t s) -> std::size_t { return s - opt.min_size; };
  std::uint32_t deepest = 0;
  for (const auto& r : out) {
    if (r.exhaustive) deepest = r.size;
  }

  // Exhaustive part, one task per smallest element.
  if (deepest > 0) {
    std::vector<std::vector<SizeResult>> per_task(n);
    parallel_for(n, opt.workers, [&](std::size_t first) {
      State st = proto;
      auto& res = per_task[first];
      res = out;
      for (auto& r : res) r.evaluated = 0;
      std::vector<std::uint32_t> cur;
      cur.reserve(deepest);
      auto visit = [&] {
        const auto s = static_cast<std::uint32_t>(cur.size());
        if (s < opt.min_size) return;
        auto& r = res[slot(s)];
        if (!r.exhaustive) return;
        ++r.evaluated;
        const double v = st.score(s);
        if (improves(r, v, cur, opt.maximize)) {
          r.found = true;
          r.value = v;
          r.witness = cur;
          r.detail = st.detail(s);
        }
      };
      auto dfs = [&](auto&& self, std::uint32_t next) -> void {
        visit();
        if (cur.size() == deepest) return;
        for (std::uint32_t v = next; v < n; ++v) {
          cur.push_back(v);
          st.add(v);
          self(self, v + 1);
          st.remove(v);
          cur.pop_back();
        }
      };
      cur.push_back(static_cast<std::uint32_t>(first));
      st.add(static_cast<std::uint32_t>(first));
      dfs(dfs, static_cast<std::uint32_t>(first) + 1);
    });
    for (auto& r : out) {
      if (!r.exhaustive) continue;
      for (std::uint32_t first = 0; first < n; ++first) absorb(r, per_task[first][slot(r.size)], opt.maximize);
    }
  }

  // Sampled part: draw every subset first so the stream does not depend on
  // the worker count, then score in chunks.
  for (auto& r : out) {
    if (r.exhaustive || opt.samples == 0) continue;
    Rng rng(mix_seed(opt.seed, r.size));
    std::vector<std::vector<std::uint32_t>> draws(opt.samples);
    for (auto& d : draws) d = sample_subset(rng, n, r.size);
    const std::size_t chunks = std::min<std::size_t>(draws.size(), 64);
    std::vector<SizeResult> part(chunks);
    parallel_for(chunks, opt.workers, [&](std::size_t c) {
      State st = proto;
      auto& res = part[c];
      res.size = r.size;
      for (std::size_t i = c; i < draws.size(); i += chunks) {
        const auto& d = draws[i];
        for (auto v : d) st.add(v);
        ++res.evaluated;
        const double v = st.score(r.size);
        if (improves(res, v, d, opt.maximize)) {
          res.found = true;
          res.value = v;
          res.witness = d;
          res.detail = st.detail(r.size);
        }
        for (auto it = d.rbegin(); it != d.rend(); ++it) st.remove(*it);
      }
    });
    for (const auto& p : part) absorb(r, p, opt.maximize);
  }
  return out;
}

}  // namespace expforge::detail
