#pragma once

// Exact decision of nu(k) > N: is there a regressive coloring of the pairs of
// {1..N} without a min-homogeneous k-subset?
//
// Only the partition of each row into color classes matters for
// min-homogeneity, so row x (pairs {x, y}, y > x) is enumerated as a
// restricted-growth string over y = x+1..N with at most min(x, N-x) blocks.
// Block ids are below x, so every such string is itself a regressive coloring.
//
// Rows are fixed from x = N-1 down to 1. A k-subset with minimum x is x plus a
// min-homogeneous (k-1)-subset of one block of row x, and the rows of all
// block members are already fixed. Each block B therefore has to satisfy
// H(B) <= k-2, where H is the largest min-homogeneous subset size; H is
// monotone, so the check runs after every single element placement.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "regressive/pair_coloring.hpp"

namespace regressive {

inline constexpr std::uint64_t default_node_limit = 100'000'000;
inline constexpr std::uint64_t max_nu_domain = 63;

enum class NuVerdict { AvoiderExists, Forced };

inline const char* to_string(NuVerdict v) { return v == NuVerdict::AvoiderExists ? "avoider-exists" : "forced"; }

class node_limit_exceeded : public std::runtime_error {
 public:
  explicit node_limit_exceeded(std::uint64_t nodes)
      : std::runtime_error("nu_decision: node limit exceeded after " + std::to_string(nodes) + " nodes"),
        nodes_(nodes) {}
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

struct NuCertificate {
  std::uint64_t N = 0;
  std::uint64_t k = 0;
  NuVerdict verdict = NuVerdict::Forced;
  /// AvoiderExists only: rows[x-1][j] is the block of pair {x, x+1+j}.
  std::vector<std::vector<std::uint8_t>> rows;
  std::uint64_t nodes_explored = 0;

  /// The avoiding coloring on {1..N}, with color(x, y) = block id.
  PairColoring coloring() const {
    std::vector<std::uint64_t> domain(N);
    for (std::uint64_t v = 0; v < N; ++v) domain[v] = v + 1;
    return PairColoring(std::move(domain),
                        [this](std::uint64_t x, std::uint64_t y) -> Color { return rows.at(x - 1).at(y - x - 1); });
  }
};

struct NuOptions {
  std::uint64_t node_limit = default_node_limit;
};

namespace detail {

class AvoiderSearch {
 public:
  AvoiderSearch(std::uint64_t n, std::uint64_t k, std::uint64_t node_limit)
      : n_(n), k_(k), node_limit_(node_limit), rows_(n + 1), masks_(n + 1), gen_(n + 1, 0), memo_(n + 1) {
    for (std::uint64_t x = 1; x <= n_; ++x) rows_[x].assign(n_ - x, 0);
  }

  bool run() { return n_ <= 1 ? true : place_row(n_ - 1); }

  std::uint64_t nodes() const { return nodes_; }

  std::vector<std::vector<std::uint8_t>> rows() const {
    return std::vector<std::vector<std::uint8_t>>(rows_.begin() + 1, rows_.end());
  }

 private:
  static std::uint64_t bit(std::uint64_t v) { return std::uint64_t{1} << v; }

  // Largest min-homogeneous subset of t, where t holds only elements whose
  // rows are fixed.
  unsigned largest(std::uint64_t t) {
    if (t == 0) return 0;
    if (std::has_single_bit(t)) return 1;
    const auto y = static_cast<std::uint64_t>(std::countr_zero(t));
    auto& slot = memo_[y][t];
    if (slot.first == gen_[y] + 1) return slot.second;
    const std::uint64_t rest = t & ~bit(y);
    unsigned best = largest(rest);
    for (std::uint64_t block : masks_[y]) {
      const std::uint64_t part = rest & block;
      if (static_cast<unsigned>(std::popcount(part)) + 1 > best) best = std::max(best, 1 + largest(part));
    }
    // memo_[y] may have rehashed during recursion
    memo_[y][t] = {gen_[y] + 1, static_cast<std::uint8_t>(best)};
    return best;
  }

  bool too_large(std::uint64_t block) {
    if (static_cast<std::uint64_t>(std::popcount(block)) + 2 <= k_) return false;
    return largest(block) + 2 > k_;
  }

  bool place_row(std::uint64_t x) {
    if (x == 0) return true;
    masks_[x].clear();
    const std::uint64_t max_blocks = std::min(x, n_ - x);
    return place(x, x + 1, max_blocks);
  }

  bool place(std::uint64_t x, std::uint64_t y, std::uint64_t max_blocks) {
    if (y > n_) {
      ++gen_[x];
      if (memo_[x].size() > (1u << 20)) memo_[x].clear();
      return place_row(x - 1);
    }
    auto& blocks = masks_[x];
    const std::uint64_t open = std::min<std::uint64_t>(blocks.size() + 1, max_blocks);
    for (std::uint64_t b = 0; b < open; ++b) {
      if (++nodes_ > node_limit_) throw node_limit_exceeded(nodes_ - 1);
      const bool fresh = b == blocks.size();
      if (fresh) blocks.push_back(0);
      blocks[b] |= bit(y);
      if (!too_large(blocks[b])) {
        rows_[x][y - x - 1] = static_cast<std::uint8_t>(b);
        if (place(x, y + 1, max_blocks)) return true;
      }
      blocks[b] &= ~bit(y);
      if (fresh) blocks.pop_back();
    }
    return false;
  }

  std::uint64_t n_;
  std::uint64_t k_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::uint8_t>> rows_;
  std::vector<std::vector<std::uint64_t>> masks_;  // masks_[x][b]: elements in block b of row x
  std::vector<std::uint32_t> gen_;                 // bumped whenever row x is re-committed
  std::vector<std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint8_t>>> memo_;
};

}  // namespace detail

/// Throws node_limit_exceeded when the search needs more than node_limit
/// placements, std::invalid_argument for N or k outside [1, 63].
inline NuCertificate nu_decision(std::uint64_t N, std::uint64_t k, NuOptions options = {}) {
  if (N < 1 || k < 1) throw std::invalid_argument("nu_decision: need N >= 1 and k >= 1");
  if (N > max_nu_domain) throw std::invalid_argument("nu_decision: N above " + std::to_string(max_nu_domain));
  NuCertificate cert{N, k, NuVerdict::Forced, {}, 0};
  if (k == 1) return cert;  // every singleton is min-homogeneous
  detail::AvoiderSearch search(N, k, options.node_limit);
  if (search.run()) {
    cert.verdict = NuVerdict::AvoiderExists;
    cert.rows = search.rows();
  }
  cert.nodes_explored = search.nodes();
  return cert;
}

struct NuValue {
  std::optional<std::uint64_t> value;  // empty: Unknown
  /// One certificate per N tried, ascending; the last is Forced when value is set.
  std::vector<NuCertificate> sweep;
  bool limit_hit = false;
};

/// Least N <= N_cap with a Forced verdict. Forced at N stays Forced at N+1
/// (a min-homogeneous set survives extending the domain), so the sweep stops at
/// the first Forced.
inline NuValue nu_value(std::uint64_t k, std::uint64_t N_cap, NuOptions options = {}) {
  if (k < 1) throw std::invalid_argument("nu_value: need k >= 1");
  NuValue out;
  for (std::uint64_t N = 1; N <= std::min(N_cap, max_nu_domain); ++N) {
    try {
      out.sweep.push_back(nu_decision(N, k, options));
    } catch (const node_limit_exceeded&) {
      out.limit_hit = true;
      return out;
    }
    if (out.sweep.back().verdict == NuVerdict::Forced) {
      out.value = N;
      return out;
    }
  }
  return out;
}

}  // namespace regressive
