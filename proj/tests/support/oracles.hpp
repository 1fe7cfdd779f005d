#pragma once

// Independent reference implementations used only by tests. None of these
// call into the library code paths they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "regressive/pair_coloring.hpp"

namespace oracle {

/// floor(sqrt(n)) by bisection.
inline std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t lo = 0, hi = std::min<std::uint64_t>(n, 4'294'967'295ULL) + 1;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid * mid <= n) lo = mid; else hi = mid;
  }
  return lo;
}

/// f_i(n) by literal recursion on the definition, every level iterated, f_2
/// included (no closed forms). Only for small arguments.
inline std::uint64_t f(unsigned i, std::uint64_t n) {
  if (i == 1) return n + 1;
  std::uint64_t x = n;
  for (std::uint64_t j = 0, t = isqrt(n) / 2; j < t; ++j) x = f(i - 1, x);
  return x;
}

inline std::uint64_t ack(unsigned i, std::uint64_t n) {
  if (i == 1) return n + 1;
  std::uint64_t x = n;
  for (std::uint64_t j = 0; j < n; ++j) x = ack(i - 1, x);
  return x;
}

/// min(f_i(n), cap + 1) by the same literal recursion, stopping once the
/// running value passes cap (every level is nondecreasing along an orbit).
inline std::uint64_t f_capped(unsigned i, std::uint64_t n, std::uint64_t cap) {
  if (n > cap) return cap + 1;
  if (i == 1) return n + 1;
  std::uint64_t x = n;
  for (std::uint64_t j = 0, t = isqrt(n) / 2; j < t && x <= cap; ++j) x = f_capped(i - 1, x, cap);
  return std::min(x, cap + 1);
}

/// Orbit of base under f_i up to limit, followed by one entry > limit (the
/// next orbit point, or limit + 1 if that point is larger).
inline std::vector<std::uint64_t> orbit(unsigned i, std::uint64_t base, std::uint64_t limit) {
  std::vector<std::uint64_t> out{base};
  while (out.back() <= limit) out.push_back(f_capped(i, out.back(), limit));
  return out;
}

struct Classification {
  std::uint64_t level;
  std::uint64_t dist;
};

/// (I, d) of the pair m < n by counting orbit points directly for every
/// level 1..max_level.
inline Classification classify(std::uint64_t k, std::uint64_t m, std::uint64_t n, unsigned max_level) {
  const std::uint64_t base = 4 * k * k;
  Classification out{0, 0};
  for (unsigned i = 1; i <= max_level; ++i) {
    std::uint64_t count = 0;
    for (auto r : orbit(i, base, n))
      if (m < r && r <= n) ++count;
    if (count > 0) out = {i, count};
  }
  return out;
}

/// C(s + 1, 2) + n with s = m + n.
inline std::uint64_t pair(std::uint64_t m, std::uint64_t n) {
  const std::uint64_t s = m + n;
  return (s + 1) * s / 2 + n;
}

/// Random regressive coloring of the given domain (all elements >= 1).
inline regressive::PairColoring random_regressive(const std::vector<std::uint64_t>& domain, std::mt19937_64& rng,
                                                  std::uint64_t max_colors = ~std::uint64_t{0}) {
  return regressive::PairColoring(domain, [&](std::uint64_t m, std::uint64_t) {
    std::uniform_int_distribution<std::uint64_t> pick(0, std::min(m, max_colors) - 1);
    return pick(rng);
  });
}

inline std::vector<std::uint64_t> range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (auto v = lo; v < hi; ++v) out.push_back(v);
  return out;
}

/// Does the coloring of {1..N} contain a min-homogeneous k-subset? Checks every
/// k-subset directly.
inline bool has_min_homogeneous(const regressive::PairColoring& c, std::size_t k) {
  const std::size_t d = c.size();
  if (k > d) return false;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    bool homog = true;
    for (std::size_t a = 0; a + 2 < k && homog; ++a)
      for (std::size_t b = a + 2; b < k && homog; ++b) homog = c.at(s[a], s[a + 1]) == c.at(s[a], s[b]);
    if (homog) return true;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == d - k + i - 1) --i;
    if (i == 0) return false;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

/// Calls fn on every regressive coloring of {1..N} (color of {x, y} ranges over
/// 0..x-1). fn returns false to stop. Exponential; for N <= 6.
inline void for_each_regressive_coloring(std::uint64_t N,
                                         const std::function<bool(const regressive::PairColoring&)>& fn) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t x = 1; x <= N; ++x)
    for (std::uint64_t y = x + 1; y <= N; ++y) pairs.emplace_back(x, y);
  std::vector<std::uint64_t> digit(pairs.size(), 0);
  const auto domain = range(1, N + 1);
  for (;;) {
    regressive::PairColoring c(domain, [&](std::uint64_t x, std::uint64_t y) {
      auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(x, y));
      return digit[static_cast<std::size_t>(it - pairs.begin())];
    });
    if (!fn(c)) return;
    std::size_t i = 0;
    while (i < pairs.size() && ++digit[i] == pairs[i].first) digit[i++] = 0;
    if (i == pairs.size()) return;
  }
}

/// Avoider existence by full enumeration of regressive colorings.
inline bool avoider_exists(std::uint64_t N, std::size_t k) {
  bool found = false;
  for_each_regressive_coloring(N, [&](const regressive::PairColoring& c) {
    found = !has_min_homogeneous(c, k);
    return !found;
  });
  return found;
}

/// Minimal DPLL with unit propagation. Returns a model (slot 0 unused) or
/// nothing when unsatisfiable. For formulas with at most a few hundred
/// variables.
inline std::optional<std::vector<bool>> solve(std::uint64_t variables, const std::vector<std::vector<std::int64_t>>& clauses) {
  std::vector<int> value(variables + 1, -1);  // -1 unassigned, 0 false, 1 true
  std::function<bool()> search = [&]() -> bool {
    std::vector<std::uint64_t> trail;
    auto undo = [&] { for (auto v : trail) value[v] = -1; };
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& clause : clauses) {
        int open = 0;
        std::int64_t last = 0;
        bool sat = false;
        for (auto l : clause) {
          const int v = value[static_cast<std::size_t>(l < 0 ? -l : l)];
          if (v == -1) { ++open; last = l; }
          else if ((v == 1) == (l > 0)) { sat = true; break; }
        }
        if (sat) continue;
        if (open == 0) { undo(); return false; }
        if (open == 1) {
          const auto var = static_cast<std::uint64_t>(last < 0 ? -last : last);
          value[var] = last > 0 ? 1 : 0;
          trail.push_back(var);
          changed = true;
        }
      }
    }
    std::uint64_t pick = 0;
    for (std::uint64_t v = 1; v <= variables && pick == 0; ++v)
      if (value[v] == -1) pick = v;
    if (pick == 0) return true;
    for (int guess : {1, 0}) {
      value[pick] = guess;
      if (search()) return true;
    }
    value[pick] = -1;
    undo();
    return false;
  };
  if (!search()) return std::nullopt;
  std::vector<bool> model(variables + 1, false);
  for (std::uint64_t v = 1; v <= variables; ++v) model[v] = value[v] == 1;
  return model;
}

}  // namespace oracle
