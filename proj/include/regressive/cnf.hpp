#pragma once

// DIMACS CNF whose models are exactly the regressive colorings of the pairs of
// {1..N} with no min-homogeneous k-subset.
//
//   p(x, y, v)   pair {x, y} has color v, one variable per v < x (so every
//                model is regressive by construction)
//   e(x, y, z)   c(x, y) = c(x, z), for x < y < z
//
// Clauses: exactly-one color per pair; e(x, y, z) <-> OR_v (p(x,y,v) & p(x,z,v));
// and for every k-subset x_1 < ... < x_k the clause
//   OR_{a <= k-2, b > a+1} -e(x_a, x_{a+1}, x_b)
// forbidding every row from being constant on the subset.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "regressive/pair_coloring.hpp"

namespace regressive {

inline constexpr std::uint64_t default_clause_limit = 50'000'000;

using Literal = std::int64_t;
using Clause = std::vector<Literal>;

/// Plain DIMACS content: variable count, clauses, and comment lines (without
/// their "c " prefix).
struct DimacsFormula {
  std::uint64_t variables = 0;
  std::vector<Clause> clauses;
  std::vector<std::string> comments;

  void write(std::ostream& os) const {
    for (const auto& c : comments) os << "c " << c << '\n';
    os << "p cnf " << variables << ' ' << clauses.size() << '\n';
    for (const auto& clause : clauses) {
      for (Literal l : clause) os << l << ' ';
      os << "0\n";
    }
  }

  /// Index of the first clause the assignment falsifies. The assignment is
  /// indexed by variable; slot 0 is unused.
  std::optional<std::size_t> first_falsified(const std::vector<bool>& assignment) const {
    if (assignment.size() != variables + 1) throw std::invalid_argument("DimacsFormula: assignment size mismatch");
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      const bool sat = std::any_of(clauses[i].begin(), clauses[i].end(), [&](Literal l) {
        return l > 0 ? assignment[static_cast<std::size_t>(l)] : !assignment[static_cast<std::size_t>(-l)];
      });
      if (!sat) return i;
    }
    return std::nullopt;
  }

  bool satisfied_by(const std::vector<bool>& assignment) const { return !first_falsified(assignment).has_value(); }
};

class CnfDocument {
 public:
  CnfDocument() = default;
  CnfDocument(std::uint64_t N, std::uint64_t k) : N_(N), k_(k) {
    pair_base_.assign(N + 1, 0);
    std::uint64_t next = 1;
    for (std::uint64_t x = 1; x < N; ++x) {
      pair_base_[x] = next;
      next += (N - x) * x;
    }
    eq_base_.assign(N + 1, 0);
    for (std::uint64_t x = 1; x + 2 <= N; ++x) {
      eq_base_[x] = next;
      const std::uint64_t m = N - x;  // successors of x
      next += m * (m - 1) / 2;
    }
    formula_.variables = next - 1;
  }

  std::uint64_t N() const { return N_; }
  std::uint64_t k() const { return k_; }
  std::uint64_t variable_count() const { return formula_.variables; }
  const std::vector<Clause>& clauses() const { return formula_.clauses; }
  const std::vector<std::string>& comments() const { return formula_.comments; }
  const DimacsFormula& formula() const { return formula_; }

  /// Variable for "pair {x, y} has color v", 1 <= x < y <= N, v < x.
  std::uint64_t pair_var(std::uint64_t x, std::uint64_t y, std::uint64_t v) const {
    if (!(1 <= x && x < y && y <= N_ && v < x)) throw std::out_of_range("CnfDocument: no such pair-color variable");
    return pair_base_[x] + (y - x - 1) * x + v;
  }

  /// Variable for "c(x, y) = c(x, z)", 1 <= x < y < z <= N.
  std::uint64_t eq_var(std::uint64_t x, std::uint64_t y, std::uint64_t z) const {
    if (!(1 <= x && x < y && y < z && z <= N_)) throw std::out_of_range("CnfDocument: no such equality variable");
    // pairs (y, z) of successors of x, row-major
    const std::uint64_t m = N_ - x;
    const std::uint64_t i = y - x - 1, j = z - x - 1;
    return eq_base_[x] + i * (2 * m - i - 1) / 2 + (j - i - 1);
  }

  void add_clause(Clause c) { formula_.clauses.push_back(std::move(c)); }
  void add_comment(std::string line) { formula_.comments.push_back(std::move(line)); }

  void write_dimacs(std::ostream& os) const { formula_.write(os); }

  std::string to_dimacs() const {
    std::ostringstream os;
    write_dimacs(os);
    return os.str();
  }

  bool satisfied_by(const std::vector<bool>& assignment) const { return formula_.satisfied_by(assignment); }

  /// The unique assignment induced by a regressive coloring of {1..N}.
  std::vector<bool> encode(const PairColoring& c) const {
    std::vector<bool> a(formula_.variables + 1, false);
    for (std::uint64_t x = 1; x < N_; ++x)
      for (std::uint64_t y = x + 1; y <= N_; ++y) {
        const Color v = c.color(x, y);
        if (v >= x) throw std::invalid_argument("CnfDocument::encode: coloring is not regressive");
        a[pair_var(x, y, v)] = true;
      }
    for (std::uint64_t x = 1; x + 2 <= N_; ++x)
      for (std::uint64_t y = x + 1; y <= N_; ++y)
        for (std::uint64_t z = y + 1; z <= N_; ++z) a[eq_var(x, y, z)] = c.color(x, y) == c.color(x, z);
    return a;
  }

  /// Reads the coloring off the pair-color variables of a model. Throws if some
  /// pair does not have exactly one color.
  PairColoring decode(const std::vector<bool>& assignment) const {
    if (assignment.size() != formula_.variables + 1)
      throw std::invalid_argument("CnfDocument: assignment size mismatch");
    std::vector<std::uint64_t> domain(N_);
    for (std::uint64_t v = 0; v < N_; ++v) domain[v] = v + 1;
    return PairColoring(std::move(domain), [&](std::uint64_t x, std::uint64_t y) -> Color {
      std::optional<Color> found;
      for (std::uint64_t v = 0; v < x; ++v) {
        if (!assignment[pair_var(x, y, v)]) continue;
        if (found) throw std::invalid_argument("CnfDocument::decode: pair with two colors");
        found = v;
      }
      if (!found) throw std::invalid_argument("CnfDocument::decode: pair without a color");
      return *found;
    });
  }

 private:
  std::uint64_t N_ = 0;
  std::uint64_t k_ = 0;
  std::vector<std::uint64_t> pair_base_;
  std::vector<std::uint64_t> eq_base_;
  DimacsFormula formula_;
};

namespace detail {

inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace detail

/// Throws std::length_error when the clause count would exceed clause_limit.
inline CnfDocument export_cnf(std::uint64_t N, std::uint64_t k, std::uint64_t clause_limit = default_clause_limit) {
  if (N < 2 || k < 2) throw std::invalid_argument("export_cnf: need N >= 2 and k >= 2");
  {
    unsigned __int128 estimate = detail::binomial_saturating(N, k);
    for (std::uint64_t x = 1; x < N; ++x) {
      const std::uint64_t m = N - x;
      estimate += static_cast<unsigned __int128>(m) * (1 + x * (x - 1) / 2);
      estimate += static_cast<unsigned __int128>(m) * (m - 1) / 2 * (2 * x);
    }
    if (estimate > clause_limit) throw std::length_error("export_cnf: clause count exceeds the limit");
  }

  CnfDocument doc(N, k);
  doc.add_comment("regressive pair colorings of {1.." + std::to_string(N) + "} without a min-homogeneous " +
                  std::to_string(k) + "-subset");
  for (std::uint64_t x = 1; x < N; ++x)
    for (std::uint64_t y = x + 1; y <= N; ++y)
      for (std::uint64_t v = 0; v < x; ++v)
        doc.add_comment("var " + std::to_string(doc.pair_var(x, y, v)) + " pair " + std::to_string(x) + " " +
                        std::to_string(y) + " color " + std::to_string(v));
  for (std::uint64_t x = 1; x + 2 <= N; ++x)
    for (std::uint64_t y = x + 1; y <= N; ++y)
      for (std::uint64_t z = y + 1; z <= N; ++z)
        doc.add_comment("var " + std::to_string(doc.eq_var(x, y, z)) + " eq " + std::to_string(x) + " " +
                        std::to_string(y) + " " + std::to_string(z));

  auto lit = [](std::uint64_t v) { return static_cast<Literal>(v); };

  // exactly one color per pair
  for (std::uint64_t x = 1; x < N; ++x)
    for (std::uint64_t y = x + 1; y <= N; ++y) {
      Clause some;
      for (std::uint64_t v = 0; v < x; ++v) some.push_back(lit(doc.pair_var(x, y, v)));
      doc.add_clause(std::move(some));
      for (std::uint64_t v = 0; v < x; ++v)
        for (std::uint64_t w = v + 1; w < x; ++w) doc.add_clause({-lit(doc.pair_var(x, y, v)), -lit(doc.pair_var(x, y, w))});
    }

  // equality indicators
  for (std::uint64_t x = 1; x + 2 <= N; ++x)
    for (std::uint64_t y = x + 1; y <= N; ++y)
      for (std::uint64_t z = y + 1; z <= N; ++z) {
        const Literal e = lit(doc.eq_var(x, y, z));
        for (std::uint64_t v = 0; v < x; ++v) {
          const Literal a = lit(doc.pair_var(x, y, v)), b = lit(doc.pair_var(x, z, v));
          doc.add_clause({-a, -b, e});
          doc.add_clause({-e, -a, b});
        }
      }

  // no min-homogeneous k-subset
  std::vector<std::uint64_t> s(k);
  for (std::uint64_t i = 0; i < k; ++i) s[i] = i + 1;
  while (k <= N) {
    Clause c;
    for (std::uint64_t a = 0; a + 2 < k; ++a)
      for (std::uint64_t b = a + 2; b < k; ++b) c.push_back(-lit(doc.eq_var(s[a], s[a + 1], s[b])));
    doc.add_clause(std::move(c));
    std::uint64_t i = k;
    while (i > 0 && s[i - 1] == N - k + i) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::uint64_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return doc;
}

/// Parses DIMACS text, checking the header counts against the body.
inline DimacsFormula parse_dimacs(std::istream& in) {
  std::string line;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<std::string> comments;
  std::vector<Clause> clauses;
  Clause current;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == 'c') {
      comments.push_back(line.size() > 2 ? line.substr(2) : std::string{});
      continue;
    }
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      std::uint64_t vars = 0, count = 0;
      if (!(ls >> p >> fmt >> vars >> count) || fmt != "cnf") throw std::invalid_argument("parse_dimacs: bad header");
      header.emplace(vars, count);
      continue;
    }
    if (!header) throw std::invalid_argument("parse_dimacs: clause before header");
    Literal l;
    while (ls >> l) {
      if (l == 0) {
        clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (static_cast<std::uint64_t>(l < 0 ? -l : l) > header->first)
          throw std::invalid_argument("parse_dimacs: literal out of range");
        current.push_back(l);
      }
    }
  }
  if (!header) throw std::invalid_argument("parse_dimacs: missing header");
  if (!current.empty()) throw std::invalid_argument("parse_dimacs: unterminated clause");
  if (clauses.size() != header->second) throw std::invalid_argument("parse_dimacs: clause count mismatch");
  return DimacsFormula{header->first, std::move(clauses), std::move(comments)};
}

}  // namespace regressive
