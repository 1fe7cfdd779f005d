#pragma once

// Maximum min-homogeneous subsets of a pair coloring.
//
// A min-homogeneous set x_1 < ... < x_s is a chain where every later element
// lies in one color class of each earlier element's row. The branch-and-bound
// search grows such chains in increasing order, keeping the set of elements
// still compatible with every row chosen so far; the next element fixes the
// row color of the current last element. Both searches report the
// lexicographically least set among those of maximum size.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "regressive/pair_coloring.hpp"

namespace regressive {

struct SearchOutcome {
  std::size_t max_size = 0;
  MinHomogWitness witness;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t default_brute_force_limit = 1'000'000'000;

namespace detail {

inline bool index_set_min_homogeneous(const PairColoring& c, const std::vector<std::size_t>& idx) {
  for (std::size_t a = 0; a + 2 < idx.size(); ++a) {
    const Color row = c.at(idx[a], idx[a + 1]);
    for (std::size_t b = a + 2; b < idx.size(); ++b)
      if (c.at(idx[a], idx[b]) != row) return false;
  }
  return true;
}

inline MinHomogWitness witness_from_indices(const PairColoring& c, const std::vector<std::size_t>& idx) {
  std::vector<std::uint64_t> elems;
  for (auto i : idx) elems.push_back(c.domain()[i]);
  return make_witness(c, std::move(elems));
}

inline double binomial_upper(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
  return r;
}

}  // namespace detail

/// Exhaustive oracle: tries every subset of size cap, cap-1, ... in
/// lexicographic order and stops at the first size with a min-homogeneous
/// member. Throws std::length_error when the worst-case subset count exceeds
/// the limit.
inline SearchOutcome brute_force_max(const PairColoring& c, std::size_t cap,
                                     std::uint64_t limit = default_brute_force_limit) {
  const std::size_t d = c.size();
  cap = std::min(cap, d);
  double worst = 0;
  for (std::size_t s = 1; s <= cap; ++s) worst += detail::binomial_upper(d, s);
  if (worst > double(limit)) throw std::length_error("brute_force_max: subset enumeration exceeds the limit");

  SearchOutcome out;
  for (std::size_t s = cap; s >= 1; --s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ++out.nodes_explored;
      if (detail::index_set_min_homogeneous(c, idx)) {
        out.max_size = s;
        out.witness = detail::witness_from_indices(c, idx);
        return out;
      }
      // next combination in lexicographic order
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == d - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;  // empty domain
}

struct SearchOptions {
  unsigned threads = 1;
};

namespace detail {

class MinHomogSearch {
 public:
  explicit MinHomogSearch(const PairColoring& c) : c_(c), d_(c.size()), words_((c.size() + 63) / 64) {
    class_of_.resize(d_);
    class_mask_.resize(d_);
    for (std::size_t x = 0; x < d_; ++x) {
      std::unordered_map<Color, std::uint32_t> ids;
      class_of_[x].assign(d_, 0);
      for (std::size_t y = x + 1; y < d_; ++y) {
        auto [it, fresh] = ids.try_emplace(c.at(x, y), static_cast<std::uint32_t>(ids.size()));
        if (fresh) class_mask_[x].emplace_back(words_, 0);
        class_of_[x][y] = it->second;
        class_mask_[x][it->second][y / 64] |= std::uint64_t{1} << (y % 64);
      }
    }
  }

  SearchOutcome run(unsigned threads) {
    if (d_ == 0) return {};
    threads = std::max(1u, threads);
    std::atomic<std::size_t> next_root{0};
    std::vector<Worker> workers(threads, Worker{*this});
    auto body = [&](Worker& w) {
      for (std::size_t x; (x = next_root.fetch_add(1)) < d_;) w.root(x);
    };
    if (threads == 1) {
      body(workers[0]);
    } else {
      std::vector<std::thread> pool;
      for (auto& w : workers) pool.emplace_back(body, std::ref(w));
      for (auto& t : pool) t.join();
    }
    // merge: largest size, then lexicographically least
    SearchOutcome out;
    std::vector<std::size_t> best;
    for (auto& w : workers) {
      out.nodes_explored += w.nodes;
      if (w.best.size() > best.size() || (w.best.size() == best.size() && w.best < best)) best = w.best;
    }
    out.max_size = best.size();
    out.witness = witness_from_indices(c_, best);
    return out;
  }

 private:
  using Bits = std::vector<std::uint64_t>;

  // Word v of the set {z : z > y}.
  static std::uint64_t above_mask(std::size_t y, std::size_t v) {
    const std::size_t w = y / 64;
    if (v != w) return v < w ? 0 : ~std::uint64_t{0};
    return y % 64 == 63 ? 0 : ~std::uint64_t{0} << (y % 64 + 1);
  }

  struct Worker {
    MinHomogSearch& s;
    std::vector<std::size_t> chain{};
    std::vector<std::size_t> best{};
    std::vector<Bits> frames{};
    std::uint64_t nodes = 0;

    bool pruned(std::size_t bound) const {
      return bound <= best.size() || bound < s.global_best_.load(std::memory_order_relaxed);
    }

    void root(std::size_t x) {
      if (pruned(s.d_ - x)) return;
      if (frames.empty()) frames.assign(s.d_ + 1, Bits(s.words_, 0));
      Bits& p = frames[0];
      std::fill(p.begin(), p.end(), 0);
      for (std::size_t y = x + 1; y < s.d_; ++y) p[y / 64] |= std::uint64_t{1} << (y % 64);
      chain.assign(1, x);
      expand(0);
    }

    void expand(std::size_t depth) {
      ++nodes;
      if (chain.size() > best.size()) {
        best = chain;
        std::size_t g = s.global_best_.load(std::memory_order_relaxed);
        while (g < best.size() && !s.global_best_.compare_exchange_weak(g, best.size())) {
        }
      }
      const std::size_t x = chain.back();
      std::size_t widest = 0;
      for (const Bits& mask : s.class_mask_[x]) {
        std::size_t cnt = 0;
        for (std::size_t w = 0; w < s.words_; ++w) cnt += std::popcount(frames[depth][w] & mask[w]);
        widest = std::max(widest, cnt);
      }
      const std::size_t bound = chain.size() + widest;
      if (pruned(bound)) return;

      for (std::size_t w = 0; w < s.words_; ++w) {
        for (std::uint64_t bits = frames[depth][w]; bits; bits &= bits - 1) {
          if (pruned(bound)) return;
          const std::size_t y = w * 64 + std::countr_zero(bits);
          const Bits& mask = s.class_mask_[x][s.class_of_[x][y]];
          Bits& q = frames[depth + 1];
          const Bits& p = frames[depth];
          for (std::size_t v = 0; v < s.words_; ++v) {
            q[v] = p[v] & mask[v] & above_mask(y, v);
          }
          chain.push_back(y);
          expand(depth + 1);
          chain.pop_back();
        }
      }
    }
  };

  const PairColoring& c_;
  std::size_t d_;
  std::size_t words_;
  std::vector<std::vector<std::uint32_t>> class_of_;
  std::vector<std::vector<Bits>> class_mask_;
  std::atomic<std::size_t> global_best_{0};
};

}  // namespace detail

/// Branch-and-bound maximum min-homogeneous subset. Subtrees rooted at
/// different minimum elements are distributed over options.threads workers;
/// the reported size and witness do not depend on the thread count.
inline SearchOutcome max_min_homog(const PairColoring& c, SearchOptions options = {}) {
  detail::MinHomogSearch search(c);
  return search.run(options.threads);
}

}  // namespace regressive
