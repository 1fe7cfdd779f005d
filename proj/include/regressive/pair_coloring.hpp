#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace regressive {

using Color = std::uint64_t;

/// A coloring of the unordered pairs of a finite sorted domain. Pairs are
/// addressed either by domain value (min, max) or by domain index (i < j).
class PairColoring {
 public:
  PairColoring() = default;

  /// color_of(m, n) is called once per pair with m < n.
  PairColoring(std::vector<std::uint64_t> domain, const std::function<Color(std::uint64_t, std::uint64_t)>& color_of)
      : domain_(std::move(domain)) {
    if (!std::is_sorted(domain_.begin(), domain_.end()) ||
        std::adjacent_find(domain_.begin(), domain_.end()) != domain_.end())
      throw std::invalid_argument("PairColoring: domain must be strictly increasing");
    const std::size_t d = domain_.size();
    colors_.resize(d * (d > 0 ? d - 1 : 0) / 2);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) colors_[slot(i, j)] = color_of(domain_[i], domain_[j]);
  }

  std::span<const std::uint64_t> domain() const { return domain_; }
  std::size_t size() const { return domain_.size(); }

  /// Color of the pair at domain indices i < j.
  Color at(std::size_t i, std::size_t j) const { return colors_[slot(i, j)]; }

  /// Color of the unordered pair {m, n}; arguments may come in either order.
  Color color(std::uint64_t m, std::uint64_t n) const {
    if (m == n) throw std::invalid_argument("PairColoring: a pair needs two distinct elements");
    if (m > n) std::swap(m, n);
    return at(index_of(m), index_of(n));
  }

  std::size_t index_of(std::uint64_t v) const {
    auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
    if (it == domain_.end() || *it != v) throw std::out_of_range("PairColoring: element outside the domain");
    return static_cast<std::size_t>(it - domain_.begin());
  }

  bool contains(std::uint64_t v) const { return std::binary_search(domain_.begin(), domain_.end(), v); }

  /// c(m, n) < min(m, n) for every pair.
  bool regressive() const {
    for (std::size_t i = 0; i < domain_.size(); ++i)
      for (std::size_t j = i + 1; j < domain_.size(); ++j)
        if (at(i, j) >= domain_[i]) return false;
    return true;
  }

 private:
  std::size_t slot(std::size_t i, std::size_t j) const {
    // row-major upper triangle
    const std::size_t d = domain_.size();
    return i * (2 * d - i - 1) / 2 + (j - i - 1);
  }

  std::vector<std::uint64_t> domain_;
  std::vector<Color> colors_;
};

/// A min-homogeneous set together with the common color of each row.
struct MinHomogWitness {
  std::vector<std::uint64_t> elements;
  /// (x, color) for every element x except the maximum, in increasing x.
  std::vector<std::pair<std::uint64_t, Color>> row_colors;

  friend bool operator==(const MinHomogWitness&, const MinHomogWitness&) = default;
};

/// True iff, for every x in s, all pairs {x, y} with y in s and y > x share one
/// color. Order of s does not matter. Throws std::out_of_range for elements
/// outside the domain.
inline bool is_min_homogeneous(const PairColoring& c, std::span<const std::uint64_t> s) {
  std::vector<std::size_t> idx;
  idx.reserve(s.size());
  for (auto v : s) idx.push_back(c.index_of(v));
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (std::size_t a = 0; a + 2 < idx.size(); ++a) {
    const Color row = c.at(idx[a], idx[a + 1]);
    for (std::size_t b = a + 2; b < idx.size(); ++b)
      if (c.at(idx[a], idx[b]) != row) return false;
  }
  return true;
}

/// Builds the witness record for a set already known to be min-homogeneous.
inline MinHomogWitness make_witness(const PairColoring& c, std::vector<std::uint64_t> elements) {
  std::sort(elements.begin(), elements.end());
  MinHomogWitness w;
  for (std::size_t a = 0; a + 1 < elements.size(); ++a)
    w.row_colors.emplace_back(elements[a], c.color(elements[a], elements[a + 1]));
  w.elements = std::move(elements);
  return w;
}

/// Checks the witness invariant: every pair's color equals its minimum's row color.
inline bool is_valid_witness(const PairColoring& c, const MinHomogWitness& w) {
  if (!std::is_sorted(w.elements.begin(), w.elements.end())) return false;
  if (w.row_colors.size() != (w.elements.empty() ? 0 : w.elements.size() - 1)) return false;
  for (std::size_t a = 0; a + 1 < w.elements.size(); ++a) {
    if (w.row_colors[a].first != w.elements[a]) return false;
    for (std::size_t b = a + 1; b < w.elements.size(); ++b)
      if (c.color(w.elements[a], w.elements[b]) != w.row_colors[a].second) return false;
  }
  return true;
}

}  // namespace regressive
