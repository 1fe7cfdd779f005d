#pragma once

// The explicit regressive pair coloring for a fixed k > 2.
//
// Level-i ladders are the orbits of the base point 4k^2 under f_i. The
// semi-metric d_i(m, n) counts level-i rungs in (m, n]. A pair m < n is
// classified by I(m, n), the greatest level with d_i(m, n) > 0, and by
// d(m, n) = d_I(m, n); its color is the Cantor code Pr(I, d).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "regressive/hierarchy.hpp"
#include "regressive/pair_coloring.hpp"
#include "regressive/pairing.hpp"

namespace regressive {

class ConstructionParams {
 public:
  explicit ConstructionParams(std::uint64_t k) : k_(k) {
    if (k_ < 3) throw std::invalid_argument("ConstructionParams: k must be > 2");
    if (k_ > (std::uint64_t{1} << 30)) throw std::invalid_argument("ConstructionParams: k too large");
  }
  std::uint64_t k() const { return k_; }
  std::uint64_t base() const { return 4 * k_ * k_; }

 private:
  std::uint64_t k_;
};

/// Half-open [lo, hi).
struct Interval {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  static Interval make(std::uint64_t lo, std::uint64_t hi) {
    if (lo >= hi) throw std::invalid_argument("Interval: need lo < hi");
    return Interval{lo, hi};
  }
  std::uint64_t size() const { return hi - lo; }
  std::uint64_t pair_count() const { return size() * (size() - 1) / 2; }
  bool contains(std::uint64_t v) const { return lo <= v && v < hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Thrown when ladder generation runs out of budget before covering the range.
class budget_exceeded_error : public std::runtime_error {
 public:
  budget_exceeded_error(const std::string& what, Natural lower_bound)
      : std::runtime_error(what), lower_bound_(std::move(lower_bound)) {}
  const Natural& lower_bound() const { return lower_bound_; }

 private:
  Natural lower_bound_;
};

struct Ladder {
  unsigned level = 1;
  std::uint64_t base = 0;
  std::uint64_t cap = 0;
  /// f_level^(l)(base) for l = 0, 1, ... while <= cap.
  std::vector<std::uint64_t> rungs;
  /// False if the budget ran out; rungs beyond the last one are then unknown.
  bool complete = true;
  std::uint64_t steps_used = 0;

  /// Largest n for which dist(*this, m, n) is answerable.
  std::uint64_t reach() const { return complete ? cap : rungs.back(); }
};

inline Ladder build_ladder(HierarchyIndex i, const ConstructionParams& params, std::uint64_t cap,
                           EvalBudget budget = {}) {
  const std::uint64_t base = params.base();
  if (cap < base) throw std::invalid_argument("build_ladder: cap must be >= 4k^2");
  Ladder ladder{i.value(), base, cap, {base}, true, 0};
  if (i.value() == 1) {
    for (std::uint64_t v = base + 1; v <= cap; ++v) ladder.rungs.push_back(v);
    ladder.steps_used = cap - base;
    return ladder;
  }
  const Natural limit = Natural(cap) + 1;
  detail::Orbit orbit(budget.max_steps(), limit);
  Natural x = base;
  for (;;) {
    orbit.rearm(limit);
    orbit.apply_f(i.value(), x);
    if (orbit.reached()) break;
    if (orbit.exhausted()) {
      ladder.complete = false;
      break;
    }
    ladder.rungs.push_back(x.convert_to<std::uint64_t>());
  }
  ladder.steps_used = orbit.steps();
  return ladder;
}

/// Number of ladder rungs in (min(m,n), max(m,n)].
inline std::uint64_t dist(const Ladder& ladder, std::uint64_t m, std::uint64_t n) {
  if (m > n) std::swap(m, n);
  if (m < ladder.base || n > ladder.reach())
    throw std::out_of_range("dist: query outside the materialized ladder range");
  const auto& r = ladder.rungs;
  return static_cast<std::uint64_t>(std::upper_bound(r.begin(), r.end(), n) -
                                    std::upper_bound(r.begin(), r.end(), m));
}

struct ColorCode {
  std::uint64_t level = 0;  // I(m, n)
  std::uint64_t dist = 0;   // d(m, n)
  std::uint64_t encoded = 0;
  friend bool operator==(const ColorCode&, const ColorCode&) = default;
};

struct IntervalEvaluation {
  EvalResult upper;  // f_k(4k^2), or a lower bound on it
  std::optional<Interval> interval;
};

/// [4k^2, f_k(4k^2)) when f_k(4k^2) is evaluable within the budget.
inline IntervalEvaluation construction_interval(const ConstructionParams& params, EvalBudget budget = {}) {
  IntervalEvaluation out{f_eval(HierarchyIndex(static_cast<unsigned>(params.k())), params.base(), budget),
                         std::nullopt};
  if (out.upper.exact()) {
    if (auto hi = to_u64(out.upper.value)) out.interval = Interval::make(params.base(), *hi);
  }
  return out;
}

/// The coloring restricted to an interval [lo, hi) with lo >= 4k^2. Ladders for
/// levels 2, 3, ... are materialized up to hi - 1 until a level has no rung
/// besides the base; every higher level has zero distance on the interval.
/// Immutable after construction.
class Construction {
 public:
  Construction(ConstructionParams params, Interval interval, EvalBudget budget = {})
      : params_(params), interval_(interval) {
    if (interval.lo < params.base()) throw std::invalid_argument("Construction: interval must start at or above 4k^2");
    const std::uint64_t cap = interval.hi - 1;
    if (cap == params.base()) return;
    for (unsigned level = 2;; ++level) {
      Ladder ladder = build_ladder(HierarchyIndex(level), params, cap, budget);
      if (!ladder.complete)
        throw budget_exceeded_error("Construction: ladder for level " + std::to_string(level) + " ran out of budget",
                                    Natural(ladder.rungs.back()));
      if (ladder.rungs.size() == 1) break;
      ladders_.push_back(std::move(ladder));
    }
  }

  /// The full interval [4k^2, f_k(4k^2)); throws budget_exceeded_error when
  /// f_k(4k^2) is out of budget.
  static Construction full(ConstructionParams params, EvalBudget budget = {}) {
    auto eval = construction_interval(params, budget);
    if (!eval.interval)
      throw budget_exceeded_error("Construction: f_k(4k^2) is not evaluable within budget", eval.upper.value);
    return Construction(params, *eval.interval, budget);
  }

  const ConstructionParams& params() const { return params_; }
  const Interval& interval() const { return interval_; }

  /// Highest level that has a rung above the base inside the interval (>= 1).
  unsigned top_level() const { return static_cast<unsigned>(ladders_.size()) + 1; }

  /// Materialized ladder for 2 <= i <= top_level().
  const Ladder& ladder(unsigned i) const { return ladders_.at(i - 2); }

  std::uint64_t dist(HierarchyIndex i, std::uint64_t m, std::uint64_t n) const {
    if (m > n) std::swap(m, n);
    check_range(m, n);
    if (i.value() == 1) return n - m;
    if (i.value() > top_level()) return 0;
    return regressive::dist(ladder(i.value()), m, n);
  }

  ColorCode classify(std::uint64_t m, std::uint64_t n) const {
    if (m == n) throw std::invalid_argument("classify: a pair needs two distinct elements");
    if (m > n) std::swap(m, n);
    check_range(m, n);
    for (unsigned i = top_level(); i >= 2; --i) {
      if (auto d = regressive::dist(ladder(i), m, n); d > 0) return ColorCode{i, d, cantor_pair(i, d)};
    }
    return ColorCode{1, n - m, cantor_pair(1, n - m)};
  }

  Color color(std::uint64_t m, std::uint64_t n) const { return classify(m, n).encoded; }

  PairColoring to_pair_coloring() const {
    std::vector<std::uint64_t> domain;
    for (std::uint64_t v = interval_.lo; v < interval_.hi; ++v) domain.push_back(v);
    return PairColoring(std::move(domain), [this](std::uint64_t m, std::uint64_t n) { return color(m, n); });
  }

 private:
  void check_range(std::uint64_t m, std::uint64_t n) const {
    if (!interval_.contains(m) || !interval_.contains(n))
      throw std::out_of_range("Construction: pair outside the colored interval");
  }

  ConstructionParams params_;
  Interval interval_;
  std::vector<Ladder> ladders_;  // levels 2 .. top_level()
};

inline std::uint64_t ks_color(std::uint64_t m, std::uint64_t n, const Construction& c) { return c.color(m, n); }

struct PairViolation {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t value = 0;  // the offending quantity
  std::uint64_t bound = 0;  // what it had to stay below (regressive) or at most (bounds)
};

struct RegressiveReport {
  std::uint64_t pairs_checked = 0;
  std::uint64_t max_color = 0;
  /// c(m, n) >= m.
  std::vector<PairViolation> violations;
  /// c(m, n) > Pr(isqrt_half(m), isqrt_half(m)).
  std::vector<PairViolation> bound_violations;
};

inline RegressiveReport verify_regressive(const Construction& c) {
  RegressiveReport r;
  const auto [lo, hi] = c.interval();
  for (std::uint64_t m = lo; m < hi; ++m) {
    const std::uint64_t h = isqrt_half_u64(m);
    const std::uint64_t bound = cantor_pair(h, h);
    for (std::uint64_t n = m + 1; n < hi; ++n) {
      ++r.pairs_checked;
      const Color col = c.color(m, n);
      r.max_color = std::max(r.max_color, col);
      if (col >= m) r.violations.push_back({m, n, col, m});
      if (col > bound) r.bound_violations.push_back({m, n, col, bound});
    }
  }
  return r;
}

struct SqrtBoundReport {
  std::uint64_t pairs_checked = 0;
  std::uint64_t max_dist = 0;
  /// d(m, n) > isqrt_half(m).
  std::vector<PairViolation> violations;
};

inline SqrtBoundReport verify_sqrt_bound(const Construction& c) {
  SqrtBoundReport r;
  const auto [lo, hi] = c.interval();
  for (std::uint64_t m = lo; m < hi; ++m) {
    const std::uint64_t h = isqrt_half_u64(m);
    for (std::uint64_t n = m + 1; n < hi; ++n) {
      ++r.pairs_checked;
      const std::uint64_t d = c.classify(m, n).dist;
      r.max_dist = std::max(r.max_dist, d);
      if (d > h) r.violations.push_back({m, n, d, h});
    }
  }
  return r;
}

}  // namespace regressive
