#pragma once

// Budgeted exact evaluation of the fast-growing hierarchy
//
//   f_1(n)     = n + 1
//   f_{i+1}(n) = f_i^(floor(sqrt(n)/2))(n)
//
// and of the Ackermann approximations A_1(n) = n + 1, A_{i+1}(n) = A_i^(n)(n).
//
// Every function in both families satisfies g(x) >= x, so the running value of
// any partial evaluation is a lower bound on the final result. Evaluation can
// therefore stop early either because the budget ran out (the running value is
// reported as a certified lower bound) or because a threshold was reached.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "regressive/natural.hpp"

namespace regressive {

inline constexpr std::uint64_t default_step_budget = 10'000'000;

class EvalBudget {
 public:
  constexpr EvalBudget() = default;
  explicit EvalBudget(std::uint64_t max_steps) : max_steps_(max_steps) {
    if (max_steps_ == 0) throw std::invalid_argument("EvalBudget: max_steps must be >= 1");
  }
  constexpr std::uint64_t max_steps() const { return max_steps_; }

 private:
  std::uint64_t max_steps_ = default_step_budget;
};

class HierarchyIndex {
 public:
  explicit HierarchyIndex(unsigned i) : i_(i) {
    if (i_ == 0) throw std::invalid_argument("HierarchyIndex: index must be >= 1");
  }
  unsigned value() const { return i_; }
  friend bool operator==(HierarchyIndex, HierarchyIndex) = default;

 private:
  unsigned i_;
};

enum class EvalKind { Exact, BudgetExceeded };

struct EvalResult {
  EvalKind kind = EvalKind::Exact;
  /// Exact value, or the largest iterate reached before the budget ran out.
  Natural value;
  std::uint64_t steps_used = 0;

  bool exact() const { return kind == EvalKind::Exact; }
};

enum class Tri { Yes, No, Unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

namespace detail {

// Drives one evaluation. A step is one application of f_1, one application of
// the closed form f_2(x) = x + isqrt_half(x), one closed-form iterate of f_1,
// or one application of A_1. All mutators return false once evaluation must
// stop; the value passed by reference then holds the running lower bound.
class Orbit {
 public:
  Orbit(std::uint64_t max_steps, std::optional<Natural> stop_at)
      : max_steps_(max_steps), stop_at_(std::move(stop_at)) {}

  bool apply_f(unsigned i, Natural& x) {
    if (i == 1) return step(x, [](Natural& v) { ++v; });
    if (i == 2) return step(x, [](Natural& v) { v += isqrt_half(v); });
    Natural t = isqrt_half(x);
    return iterate_f(i - 1, t, x);
  }

  bool iterate_f(unsigned i, const Natural& count, Natural& x) {
    if (count == 0) return true;
    if (i == 1) return step(x, [&count](Natural& v) { v += count; });
    // f_i is the identity below 4 for i >= 2.
    if (x < 4) return true;
    // Every application below consumes at least one step, so a count beyond
    // 64 bits always exhausts the budget first.
    const auto n = to_u64(count).value_or(std::numeric_limits<std::uint64_t>::max());
    for (std::uint64_t j = 0; j < n; ++j) {
      if (!apply_f(i, x)) return false;
    }
    return true;
  }

  bool apply_ack(unsigned i, Natural& x) {
    if (i == 1) return step(x, [](Natural& v) { ++v; });
    const auto n = to_u64(x).value_or(std::numeric_limits<std::uint64_t>::max());
    for (std::uint64_t j = 0; j < n; ++j) {
      if (!apply_ack(i - 1, x)) return false;
    }
    return true;
  }

  /// Stops immediately if the start value already meets the threshold.
  bool start(const Natural& x) {
    if (stop_at_ && x >= *stop_at_) {
      reached_ = true;
      return false;
    }
    return true;
  }

  std::uint64_t steps() const { return steps_; }
  bool exhausted() const { return exhausted_; }
  bool reached() const { return reached_; }

  /// Clears the stop flags and installs a new threshold; steps accumulate.
  void rearm(std::optional<Natural> stop_at) {
    stop_at_ = std::move(stop_at);
    reached_ = false;
  }

 private:
  template <typename Op>
  bool step(Natural& x, Op op) {
    if (steps_ >= max_steps_) {
      exhausted_ = true;
      return false;
    }
    ++steps_;
    op(x);
    if (stop_at_ && x >= *stop_at_) {
      reached_ = true;
      return false;
    }
    return true;
  }

  std::uint64_t max_steps_;
  std::optional<Natural> stop_at_;
  std::uint64_t steps_ = 0;
  bool exhausted_ = false;
  bool reached_ = false;
};

inline EvalResult finish(const Orbit& orbit, Natural value) {
  return EvalResult{orbit.exhausted() ? EvalKind::BudgetExceeded : EvalKind::Exact, std::move(value),
                    orbit.steps()};
}

inline Tri verdict(const Orbit& orbit, const Natural& value, const Natural& threshold) {
  if (orbit.reached() || value >= threshold) return Tri::Yes;
  if (orbit.exhausted()) return Tri::Unknown;
  return Tri::No;
}

}  // namespace detail

/// l-fold iterate f_i^(l)(n).
inline EvalResult f_iter(HierarchyIndex i, const Natural& l, const Natural& n, EvalBudget budget = {}) {
  detail::Orbit orbit(budget.max_steps(), std::nullopt);
  Natural x = n;
  orbit.iterate_f(i.value(), l, x);
  return detail::finish(orbit, std::move(x));
}

inline EvalResult f_eval(HierarchyIndex i, const Natural& n, EvalBudget budget = {}) {
  detail::Orbit orbit(budget.max_steps(), std::nullopt);
  Natural x = n;
  orbit.apply_f(i.value(), x);
  return detail::finish(orbit, std::move(x));
}

inline EvalResult ack_eval(HierarchyIndex i, const Natural& n, EvalBudget budget = {}) {
  detail::Orbit orbit(budget.max_steps(), std::nullopt);
  Natural x = n;
  orbit.apply_ack(i.value(), x);
  return detail::finish(orbit, std::move(x));
}

/// Is f_i(n) >= threshold? Yes is certified as soon as any iterate reaches the
/// threshold; No requires the full evaluation to finish below it.
inline Tri exceeds_threshold(HierarchyIndex i, const Natural& n, const Natural& threshold,
                             EvalBudget budget = {}) {
  detail::Orbit orbit(budget.max_steps(), threshold);
  Natural x = n;
  if (orbit.start(x)) orbit.apply_f(i.value(), x);
  return detail::verdict(orbit, x, threshold);
}

/// Is f_i^(l)(n) >= threshold?
inline Tri iterate_exceeds_threshold(HierarchyIndex i, const Natural& l, const Natural& n,
                                     const Natural& threshold, EvalBudget budget = {}) {
  detail::Orbit orbit(budget.max_steps(), threshold);
  Natural x = n;
  if (orbit.start(x)) orbit.iterate_f(i.value(), l, x);
  return detail::verdict(orbit, x, threshold);
}

/// Is A_i(n) >= threshold?
inline Tri ack_exceeds_threshold(HierarchyIndex i, const Natural& n, const Natural& threshold,
                                 EvalBudget budget = {}) {
  detail::Orbit orbit(budget.max_steps(), threshold);
  Natural x = n;
  if (orbit.start(x)) orbit.apply_ack(i.value(), x);
  return detail::verdict(orbit, x, threshold);
}

struct MonotoneViolation {
  enum class Kind { NotInflationary, NotIncreasing };
  Kind kind;
  std::uint64_t n;  // the offending argument (for NotIncreasing: f(n) >= f(n+1))
};

struct MonotoneReport {
  std::uint64_t checked = 0;
  std::vector<MonotoneViolation> violations;
  std::vector<std::uint64_t> skipped;  // arguments whose evaluation ran out of budget
};

/// Sweeps [lo, hi) checking n < f_i(n) and f_i(n) < f_i(n+1). Each argument gets
/// its own budget. The increasing check is made for every n with n+1 < hi.
inline MonotoneReport verify_monotone(HierarchyIndex i, std::uint64_t lo, std::uint64_t hi,
                                      EvalBudget budget = {}) {
  if (lo >= hi) throw std::invalid_argument("verify_monotone: need lo < hi");
  MonotoneReport report;
  std::optional<Natural> previous;
  for (std::uint64_t n = lo; n < hi; ++n) {
    const EvalResult r = f_eval(i, n, budget);
    if (!r.exact()) {
      report.skipped.push_back(n);
      previous.reset();
      continue;
    }
    ++report.checked;
    if (!(r.value > n)) report.violations.push_back({MonotoneViolation::Kind::NotInflationary, n});
    if (previous && !(*previous < r.value))
      report.violations.push_back({MonotoneViolation::Kind::NotIncreasing, n - 1});
    previous = r.value;
  }
  return report;
}

/// One finite instance of a growth inequality lhs <= rhs, decided by evaluating
/// the left side exactly and comparing the right side against it with early exit.
struct GrowthInstance {
  std::string relation;
  unsigned i = 0;
  std::uint64_t n = 0;
  std::optional<Natural> lhs;  // empty when the left side itself was out of budget
  Tri holds = Tri::Unknown;
};

/// The feasible instances of the growth comparisons between f_i and A_i:
///   16 n^2 <= f_i(n)           for i in {7, 8, 9}, n in [16, 20]
///   f_i(n) <= f_{i+6}^(2)(n)   for i in {1, 2, 3}, n = 16
///   A_i(n) <= f_{i+6}^(2)(n)   for i in {1, 2, 3}, n = 16
///   A_i(n) <= f_{i+7}(n)       for i in {1, 2, 3}, n = 16 (below the i >= 7 range it is stated for)
inline std::vector<GrowthInstance> check_growth_instances(EvalBudget budget = {}) {
  std::vector<GrowthInstance> out;
  for (unsigned i = 7; i <= 9; ++i) {
    for (std::uint64_t n = 16; n <= 20; ++n) {
      Natural lhs = Natural(16) * n * n;
      Tri t = exceeds_threshold(HierarchyIndex(i), n, lhs, budget);
      out.push_back({"16n^2 <= f_i(n)", i, n, std::move(lhs), t});
    }
  }
  const std::uint64_t n = 16;
  auto against = [&](const char* relation, unsigned i, const EvalResult& left, auto&& rhs_exceeds) {
    GrowthInstance g{relation, i, n, std::nullopt, Tri::Unknown};
    if (left.exact()) {
      g.lhs = left.value;
      g.holds = rhs_exceeds(left.value);
    }
    out.push_back(std::move(g));
  };
  for (unsigned i = 1; i <= 3; ++i) {
    against("f_i(n) <= f_{i+6}^(2)(n)", i, f_eval(HierarchyIndex(i), n, budget), [&](const Natural& t) {
      return iterate_exceeds_threshold(HierarchyIndex(i + 6), 2, n, t, budget);
    });
  }
  for (unsigned i = 1; i <= 3; ++i) {
    against("A_i(n) <= f_{i+6}^(2)(n)", i, ack_eval(HierarchyIndex(i), n, budget), [&](const Natural& t) {
      return iterate_exceeds_threshold(HierarchyIndex(i + 6), 2, n, t, budget);
    });
  }
  for (unsigned i = 1; i <= 3; ++i) {
    against("A_i(n) <= f_{i+7}(n)", i, ack_eval(HierarchyIndex(i), n, budget), [&](const Natural& t) {
      return exceeds_threshold(HierarchyIndex(i + 7), n, t, budget);
    });
  }
  return out;
}

}  // namespace regressive
