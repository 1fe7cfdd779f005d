#pragma once

// Certificate and report builders behind the command-line tool. Each builder
// returns a Report: an ordered JSON document plus an exit status. Everything
// under the "run" key (wall time, node counts of the parallel search) may
// differ between runs; the rest is a function of the parameters and version.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "regressive/regressive.hpp"

namespace regressive::cli {

using Json = nlohmann::ordered_json;

enum ExitStatus : int { ok = 0, violation = 1, exhausted = 2, usage = 3 };

struct Report {
  Json doc;
  int status = ok;
};

inline const char* status_name(int status) {
  switch (status) {
    case ok: return "ok";
    case violation: return "violation";
    case exhausted: return "budget-exceeded";
    default: return "error";
  }
}

/// Violation dominates exhaustion.
inline int combine(int a, int b) {
  if (a == violation || b == violation) return violation;
  return std::max(a, b);
}

class Stopwatch {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Json header(const char* kind, Json parameters) {
  Json doc;
  doc["kind"] = kind;
  doc["version"] = version;
  doc["parameters"] = std::move(parameters);
  return doc;
}

inline void finish(Report& r, const Stopwatch& clock, Json run = Json::object()) {
  r.doc["status"] = status_name(r.status);
  run["timing_ms"] = clock.ms();
  r.doc["run"] = std::move(run);
}

inline Json to_json(const EvalResult& e) {
  return Json{{"kind", e.exact() ? "exact" : "budget-exceeded"}, {"value", to_string(e.value)}, {"steps", e.steps_used}};
}

inline Json to_json(const std::vector<PairViolation>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back({{"m", v.m}, {"n", v.n}, {"value", v.value}, {"bound", v.bound}});
  return out;
}

inline Json to_json(const MinHomogWitness& w) {
  Json rows = Json::array();
  for (const auto& [x, col] : w.row_colors) rows.push_back({x, col});
  return Json{{"elements", w.elements}, {"row_colors", rows}};
}

// ---------------------------------------------------------------- certify

struct CertifyOptions {
  std::uint64_t k = 3;
  std::uint64_t budget = default_step_budget;
  unsigned threads = 1;
  /// Certify [lo, hi) instead of the full interval.
  std::optional<std::uint64_t> lo, hi;
  std::uint64_t brute_force_limit = default_brute_force_limit;
};

inline Report certify(const CertifyOptions& o) {
  Stopwatch clock;
  Json params{{"k", o.k}, {"budget", o.budget}, {"brute_force_limit", o.brute_force_limit}};
  if (o.lo) params["lo"] = *o.lo;
  if (o.hi) params["hi"] = *o.hi;
  Report r{header("construction", std::move(params))};
  Json& res = r.doc["results"];
  Json run = Json::object();

  const ConstructionParams cp(o.k);
  const EvalBudget budget(o.budget);
  std::optional<Interval> interval;
  if (o.lo || o.hi) {
    interval = Interval::make(o.lo.value_or(cp.base()), o.hi.value_or(cp.base() + 1));
  } else {
    const IntervalEvaluation eval = construction_interval(cp, budget);
    res["interval_upper"] = to_json(eval.upper);
    interval = eval.interval;
  }
  if (!interval) {
    res["interval"] = nullptr;
    r.status = exhausted;
    finish(r, clock);
    return r;
  }
  res["interval"] = {interval->lo, interval->hi};

  std::optional<Construction> con;
  try {
    con.emplace(cp, *interval, budget);
  } catch (const budget_exceeded_error& e) {
    res["ladder_error"] = {{"message", e.what()}, {"lower_bound", to_string(e.lower_bound())}};
    r.status = exhausted;
    finish(r, clock);
    return r;
  }
  res["top_level"] = con->top_level();

  const RegressiveReport reg = verify_regressive(*con);
  const SqrtBoundReport sq = verify_sqrt_bound(*con);
  res["pairs"] = reg.pairs_checked;
  res["max_color"] = reg.max_color;
  res["max_dist"] = sq.max_dist;
  res["regressive_violations"] = to_json(reg.violations);
  res["color_bound_violations"] = to_json(reg.bound_violations);
  res["sqrt_bound_violations"] = to_json(sq.violations);
  if (!reg.violations.empty() || !reg.bound_violations.empty() || !sq.violations.empty()) r.status = violation;

  const PairColoring c = con->to_pair_coloring();
  const SearchOutcome best = max_min_homog(c, {o.threads});
  res["max_min_homog"] = {{"size", best.max_size}, {"witness", to_json(best.witness)}};
  if (best.max_size > o.k) r.status = violation;  // the coloring admits sets of size k, not k + 1
  run["search_nodes"] = best.nodes_explored;

  // Exhaustive scan from size k+1 down to the first min-homogeneous subset.
  Json bf{{"cap", std::min<std::uint64_t>(o.k + 1, c.size())}};
  try {
    const SearchOutcome slow = brute_force_max(c, static_cast<std::size_t>(o.k + 1), o.brute_force_limit);
    bf["size"] = slow.max_size;
    bf["subsets_examined"] = slow.nodes_explored;
    const bool agrees = slow.max_size == best.max_size && slow.witness == best.witness;
    bf["agrees"] = agrees;
    if (!agrees) r.status = violation;
  } catch (const std::length_error&) {
    bf["skipped"] = "enumeration exceeds brute_force_limit";
  }
  res["brute_force"] = std::move(bf);
  finish(r, clock, std::move(run));
  return r;
}

// ---------------------------------------------------------------- nu

inline Report nu(std::uint64_t k, std::uint64_t n_cap, std::uint64_t node_limit) {
  Stopwatch clock;
  Report r{header("nu", {{"k", k}, {"n_cap", n_cap}, {"node_limit", node_limit}})};
  const NuValue v = nu_value(k, n_cap, {node_limit});
  Json sweep = Json::array();
  for (const NuCertificate& cert : v.sweep) {
    Json e{{"N", cert.N}, {"verdict", to_string(cert.verdict)}, {"nodes", cert.nodes_explored}};
    if (cert.verdict == NuVerdict::AvoiderExists) {
      e["rows"] = cert.rows;
      // independent re-check of the payload
      const PairColoring c = cert.coloring();
      const bool sound = c.regressive() && (cert.N < 2 || max_min_homog(c).max_size < k);
      e["payload_sound"] = sound;
      if (!sound) r.status = violation;
    }
    sweep.push_back(std::move(e));
  }
  Json& res = r.doc["results"];
  res["value"] = v.value ? Json(*v.value) : Json(nullptr);
  if (v.value) res["bound"] = "nu(" + std::to_string(k) + ") = " + std::to_string(*v.value);
  else if (!v.sweep.empty()) res["bound"] = "nu(" + std::to_string(k) + ") > " + std::to_string(v.sweep.back().N);
  res["limit_hit"] = v.limit_hit;
  res["sweep"] = std::move(sweep);
  if (!v.value) r.status = combine(r.status, exhausted);
  finish(r, clock);
  return r;
}

// ---------------------------------------------------------------- cnf

inline Report cnf_summary(const CnfDocument& doc, const std::string& file) {
  Stopwatch clock;
  Report r{header("cnf", {{"N", doc.N()}, {"k", doc.k()}})};
  r.doc["results"] = {{"variables", doc.variable_count()}, {"clauses", doc.clauses().size()}, {"file", file}};
  finish(r, clock);
  return r;
}

// ---------------------------------------------------------------- hierarchy

inline Report hierarchy(unsigned i, std::uint64_t n, std::uint64_t budget) {
  Stopwatch clock;
  Report r{header("hierarchy", {{"i", i}, {"n", n}, {"budget", budget}})};
  Json rows = Json::array();
  for (unsigned j = 1; j <= i; ++j) {
    const EvalResult f = f_eval(HierarchyIndex(j), n, EvalBudget(budget));
    const EvalResult a = ack_eval(HierarchyIndex(j), n, EvalBudget(budget));
    if (j == i && !f.exact()) r.status = exhausted;  // the A_j column is informational
    rows.push_back({{"level", j}, {"f", to_json(f)}, {"A", to_json(a)}});
  }
  r.doc["results"] = {{"rows", rows}};
  finish(r, clock);
  return r;
}

// ---------------------------------------------------------------- ladder

inline Report ladder(std::uint64_t k, unsigned i, std::uint64_t cap, std::uint64_t budget) {
  Stopwatch clock;
  Report r{header("ladder", {{"k", k}, {"i", i}, {"cap", cap}, {"budget", budget}})};
  const Ladder l = build_ladder(HierarchyIndex(i), ConstructionParams(k), cap, EvalBudget(budget));
  r.doc["results"] = {{"rungs", l.rungs}, {"complete", l.complete}, {"steps", l.steps_used}};
  if (!l.complete) r.status = exhausted;
  finish(r, clock);
  return r;
}

// ---------------------------------------------------------------- claims

inline Report claims(std::uint64_t budget) {
  Stopwatch clock;
  Report r{header("claims", {{"budget", budget}})};
  Json& res = r.doc["results"];
  auto account = [&](Tri t) {
    if (t == Tri::No) r.status = violation;
    if (t == Tri::Unknown) r.status = combine(r.status, exhausted);
  };

  const Tri big = exceeds_threshold(HierarchyIndex(7), 16, 4096, EvalBudget(budget));
  account(big);
  res["threshold"] = {{"relation", "f_7(16) >= 4096"}, {"holds", to_string(big)}};

  Json growth = Json::array();
  for (const GrowthInstance& g : check_growth_instances(EvalBudget(budget))) {
    account(g.holds);
    growth.push_back({{"relation", g.relation},
                      {"i", g.i},
                      {"n", g.n},
                      {"lhs", g.lhs ? Json(to_string(*g.lhs)) : Json(nullptr)},
                      {"holds", to_string(g.holds)}});
  }
  res["growth"] = std::move(growth);

  Json mono = Json::array();
  for (unsigned i = 1; i <= 4; ++i) {
    const MonotoneReport m = verify_monotone(HierarchyIndex(i), 4, 200, EvalBudget(budget));
    if (!m.violations.empty()) r.status = violation;
    if (!m.skipped.empty()) r.status = combine(r.status, exhausted);
    mono.push_back({{"level", i}, {"range", {4, 200}}, {"checked", m.checked},
                    {"violations", m.violations.size()}, {"skipped", m.skipped.size()}});
  }
  res["monotone"] = std::move(mono);
  finish(r, clock);
  return r;
}

// ---------------------------------------------------------------- reduce

struct ReduceOptions {
  /// Lift the construction coloring for this k ...
  std::optional<std::uint64_t> k;
  /// ... or a random regressive coloring of {2..size+1}.
  std::uint64_t size = 10;
  std::uint64_t seed = 1;
  std::size_t max_set = 6;
  std::uint64_t budget = default_step_budget;
};

inline Report reduce(const ReduceOptions& o) {
  Stopwatch clock;
  Json params{{"max_set", o.max_set}};
  if (o.k) {
    params["k"] = *o.k;
    params["budget"] = o.budget;
  } else {
    params["size"] = o.size;
    params["seed"] = o.seed;
  }
  Report r{header("reduction", std::move(params))};
  Json& res = r.doc["results"];

  std::optional<PairColoring> c;
  if (o.k) {
    try {
      c = Construction::full(ConstructionParams(*o.k), EvalBudget(o.budget)).to_pair_coloring();
    } catch (const budget_exceeded_error& e) {
      res["error"] = {{"message", e.what()}, {"lower_bound", to_string(e.lower_bound())}};
      r.status = exhausted;
      finish(r, clock);
      return r;
    }
  } else {
    std::mt19937_64 rng(o.seed);
    std::vector<std::uint64_t> domain;
    for (std::uint64_t v = 2; v < o.size + 2; ++v) domain.push_back(v);
    c.emplace(domain, [&](std::uint64_t m, std::uint64_t) {
      return std::uniform_int_distribution<std::uint64_t>(0, m - 1)(rng);
    });
  }
  res["domain"] = {c->domain().front(), c->domain().back()};

  const TripleColoring t = lift_to_triples(*c);
  std::uint64_t red = 0, bad_red = 0;
  std::size_t largest_red = 0;
  for_each_homogeneous(t, TripleColor::Red, 3, o.max_set, [&](const std::vector<std::uint64_t>& a) {
    ++red;
    largest_red = std::max(largest_red, a.size());
    if (!is_valid_witness(*c, extract_min_homog(a, *c))) ++bad_red;
  });
  const BlueBoundReport blue = blue_bound_check(*c, o.max_set);
  res["red_sets"] = red;
  res["largest_red"] = largest_red;
  res["invalid_red_witnesses"] = bad_red;
  res["blue_sets"] = blue.blue_sets;
  res["largest_blue"] = blue.largest_blue;
  res["blue_bound_violations"] = blue.violations;
  res["repeated_min_row"] = blue.repeated_min_row;
  if (bad_red || !blue.violations.empty() || !blue.repeated_min_row.empty()) r.status = violation;
  finish(r, clock);
  return r;
}

// ---------------------------------------------------------------- output

/// Aligned columns, first row is the header.
inline std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << std::left << std::setw(static_cast<int>(i + 1 == row.size() ? 0 : width[i] + 2)) << row[i];
    }
    os << '\n';
  }
  return os.str();
}

inline std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

inline std::string eval_cell(const Json& e) {
  return (e["kind"] == "exact" ? "" : ">= ") + e["value"].get<std::string>();
}

/// Human-readable rendering. Kind-specific tables where a list dominates the
/// result, key/value lines otherwise.
inline std::string render_table(const Json& doc) {
  std::ostringstream os;
  os << doc["kind"].get<std::string>() << " (version " << doc["version"].get<std::string>() << ")\n";
  std::vector<std::vector<std::string>> kv{{"parameter", "value"}};
  for (const auto& [key, val] : doc["parameters"].items()) kv.push_back({key, scalar(val)});
  os << render_columns(kv) << '\n';

  const Json& res = doc["results"];
  const std::string kind = doc["kind"];
  if (kind == "hierarchy") {
    std::vector<std::vector<std::string>> rows{{"level", "f", "f steps", "A", "A steps"}};
    for (const auto& row : res["rows"])
      rows.push_back({scalar(row["level"]), eval_cell(row["f"]), scalar(row["f"]["steps"]), eval_cell(row["A"]),
                      scalar(row["A"]["steps"])});
    os << render_columns(rows);
  } else if (kind == "ladder") {
    std::string rungs;
    for (const auto& v : res["rungs"]) rungs += (rungs.empty() ? "" : " ") + scalar(v);
    os << "rungs: " << rungs << "\ncomplete: " << scalar(res["complete"]) << '\n';
  } else if (kind == "claims") {
    std::vector<std::vector<std::string>> rows{{"relation", "i", "n", "holds"}};
    rows.push_back({scalar(res["threshold"]["relation"]), "", "", scalar(res["threshold"]["holds"])});
    for (const auto& g : res["growth"])
      rows.push_back({scalar(g["relation"]), scalar(g["i"]), scalar(g["n"]), scalar(g["holds"])});
    for (const auto& m : res["monotone"])
      rows.push_back({"f_i strictly increasing and inflationary on [4,200)", scalar(m["level"]), "",
                      m["violations"] == 0 && m["skipped"] == 0 ? "yes" : "no"});
    os << render_columns(rows);
  } else if (kind == "nu") {
    std::vector<std::vector<std::string>> rows{{"N", "verdict", "nodes"}};
    for (const auto& e : res["sweep"]) rows.push_back({scalar(e["N"]), scalar(e["verdict"]), scalar(e["nodes"])});
    os << render_columns(rows) << '\n';
    if (res.contains("bound")) os << scalar(res["bound"]) << '\n';
    if (res["limit_hit"].get<bool>()) os << "node limit reached\n";
  } else {
    std::vector<std::vector<std::string>> rows{{"result", "value"}};
    for (const auto& [key, val] : res.items()) rows.push_back({key, scalar(val)});
    os << render_columns(rows);
  }
  os << "\nstatus: " << doc["status"].get<std::string>() << "  (" << doc["run"]["timing_ms"].get<std::int64_t>()
     << " ms)\n";
  return os.str();
}

/// File name for a report: kind followed by its parameters.
inline std::string file_stem(const Json& doc) {
  std::string name = doc["kind"];
  for (const auto& [key, val] : doc["parameters"].items()) name += "_" + key + scalar(val);
  return name;
}

}  // namespace regressive::cli
