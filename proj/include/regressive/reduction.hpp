#pragma once

// Triple lift of a regressive pair coloring c: x < y < z is Red when
// c(x, y) = c(x, z) and Blue otherwise. A Red-homogeneous set has every row of
// c constant on it, so it is min-homogeneous. In a Blue-homogeneous set A the
// colors c(min A, y), y in A \ {min A}, are pairwise distinct and below min A,
// so |A| <= min A + 1.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "regressive/pair_coloring.hpp"

namespace regressive {

enum class TripleColor : std::uint8_t { Red, Blue };

class TripleColoring {
 public:
  explicit TripleColoring(const PairColoring& c) : domain_(c.domain().begin(), c.domain().end()) {
    const std::size_t d = domain_.size();
    colors_.assign(d * d * d, TripleColor::Red);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        for (std::size_t l = j + 1; l < d; ++l)
          colors_[slot(i, j, l)] = c.at(i, j) == c.at(i, l) ? TripleColor::Red : TripleColor::Blue;
  }

  std::span<const std::uint64_t> domain() const { return domain_; }
  std::size_t size() const { return domain_.size(); }

  /// Color of the triple at domain indices i < j < l.
  TripleColor at(std::size_t i, std::size_t j, std::size_t l) const { return colors_[slot(i, j, l)]; }

  /// Color of the triple x < y < z given by domain values.
  TripleColor color(std::uint64_t x, std::uint64_t y, std::uint64_t z) const {
    if (!(x < y && y < z)) throw std::invalid_argument("TripleColoring: need x < y < z");
    return at(index_of(x), index_of(y), index_of(z));
  }

  std::size_t index_of(std::uint64_t v) const {
    auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
    if (it == domain_.end() || *it != v) throw std::out_of_range("TripleColoring: element outside the domain");
    return static_cast<std::size_t>(it - domain_.begin());
  }

 private:
  std::size_t slot(std::size_t i, std::size_t j, std::size_t l) const {
    const std::size_t d = domain_.size();
    return (i * d + j) * d + l;
  }

  std::vector<std::uint64_t> domain_;
  std::vector<TripleColor> colors_;
};

inline TripleColoring lift_to_triples(const PairColoring& c) { return TripleColoring(c); }

/// Every triple of the set has the given color.
inline bool is_homogeneous(const TripleColoring& t, std::span<const std::uint64_t> set, TripleColor color) {
  std::vector<std::size_t> idx;
  for (auto v : set) idx.push_back(t.index_of(v));
  std::sort(idx.begin(), idx.end());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      for (std::size_t e = b + 1; e < idx.size(); ++e)
        if (t.at(idx[a], idx[b], idx[e]) != color) return false;
  return true;
}

/// Calls fn on every homogeneous set of the given color with size in
/// [min_size, max_size], in lexicographic order. Homogeneity is inherited by
/// subsets, so the enumeration extends only homogeneous sets.
inline void for_each_homogeneous(const TripleColoring& t, TripleColor color, std::size_t min_size,
                                 std::size_t max_size,
                                 const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
  std::vector<std::size_t> idx;
  std::vector<std::uint64_t> values;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (idx.size() >= min_size) fn(values);
    if (idx.size() == max_size) return;
    for (std::size_t v = from; v < t.size(); ++v) {
      bool ok = true;
      for (std::size_t a = 0; a < idx.size() && ok; ++a)
        for (std::size_t b = a + 1; b < idx.size() && ok; ++b) ok = t.at(idx[a], idx[b], v) == color;
      if (!ok) continue;
      idx.push_back(v);
      values.push_back(t.domain()[v]);
      extend(v + 1);
      idx.pop_back();
      values.pop_back();
    }
  };
  extend(0);
}

/// Returns A as a min-homogeneous witness after checking that every row of c
/// is constant on A. Throws std::invalid_argument otherwise (A was not
/// Red-homogeneous) or when |A| < 2.
inline MinHomogWitness extract_min_homog(std::span<const std::uint64_t> A, const PairColoring& c) {
  if (A.size() < 2) throw std::invalid_argument("extract_min_homog: need |A| >= 2");
  if (!is_min_homogeneous(c, A))
    throw std::invalid_argument("extract_min_homog: some row is not constant on A (set is not Red-homogeneous)");
  return make_witness(c, std::vector<std::uint64_t>(A.begin(), A.end()));
}

struct BlueBoundReport {
  std::uint64_t blue_sets = 0;  // Blue-homogeneous sets of size >= 3 examined
  std::size_t largest_blue = 0;
  /// Blue-homogeneous sets with |A| > min A + 1.
  std::vector<std::vector<std::uint64_t>> violations;
  /// Blue-homogeneous sets on which c(min A, .) repeats a color.
  std::vector<std::vector<std::uint64_t>> repeated_min_row;
};

/// Exhaustive scan of Blue-homogeneous sets up to max_size elements. Throws
/// std::invalid_argument for a coloring that is not regressive.
inline BlueBoundReport blue_bound_check(const PairColoring& c,
                                        std::size_t max_size = std::numeric_limits<std::size_t>::max()) {
  if (!c.regressive()) throw std::invalid_argument("blue_bound_check: coloring is not regressive");
  BlueBoundReport r;
  const TripleColoring t = lift_to_triples(c);
  for_each_homogeneous(t, TripleColor::Blue, 3, max_size, [&](const std::vector<std::uint64_t>& a) {
    ++r.blue_sets;
    r.largest_blue = std::max(r.largest_blue, a.size());
    if (a.size() > a.front() + 1) r.violations.push_back(a);
    std::vector<Color> seen;
    for (std::size_t i = 1; i < a.size(); ++i) seen.push_back(c.color(a.front(), a[i]));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) r.repeated_min_row.push_back(a);
  });
  return r;
}

}  // namespace regressive
