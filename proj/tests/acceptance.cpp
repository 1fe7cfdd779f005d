// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "regressive/regressive.hpp"
#include "support/oracles.hpp"

using namespace regressive;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double max_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail.str("");
    o.detail << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.pass && max_seconds > 0 && secs >= max_seconds) {
    o.pass = false;
    o.detail << " [runtime limit " << max_seconds << " s exceeded]";
  }
  if (!o.pass) ++failures;
  std::printf("%s  %2d  %-44s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.str().c_str());
  std::fflush(stdout);
}

HierarchyIndex L(unsigned i) { return HierarchyIndex(i); }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_construction(Outcome& o, std::uint64_t k, std::uint64_t lo, std::uint64_t hi) {
  const ConstructionParams params(k);
  const IntervalEvaluation eval = construction_interval(params);
  o.require(eval.interval == Interval::make(lo, hi), "interval");
  o.require(oracle::f(static_cast<unsigned>(k), params.base()) == hi, "interval end against literal recursion");
  const Construction con(params, *eval.interval);
  const RegressiveReport reg = verify_regressive(con);
  const SqrtBoundReport sq = verify_sqrt_bound(con);
  const std::uint64_t pairs = (hi - lo) * (hi - lo - 1) / 2;
  o.require(reg.pairs_checked == pairs && sq.pairs_checked == pairs, "pair count");
  o.require(reg.violations.empty(), "c(m,n) < m");
  o.require(sq.violations.empty(), "d(m,n) <= isqrt_half(m)");
  // the regressive bound re-checked pair by pair against the orbit-counting oracle
  for (std::uint64_t m = lo; m < hi; ++m)
    for (std::uint64_t n = m + 1; n < hi; ++n) {
      const auto cl = oracle::classify(k, m, n, static_cast<unsigned>(k));
      o.require(con.color(m, n) == oracle::pair(cl.level, cl.dist), "color against oracle");
      o.require(oracle::pair(cl.level, cl.dist) < m, "oracle color regressive");
    }
  o.detail << "[" << lo << "," << hi << "), " << pairs << " pairs, 0 violations";
}

}  // namespace

int main() {
  std::printf("acceptance suite, library version %s\n", version);

  criterion(1, "construction certificate k=3", 1.0, [](Outcome& o) {
    check_construction(o, 3, 36, 45);
    const PairColoring c = Construction::full(ConstructionParams(3)).to_pair_coloring();
    // every four-element subset, enumerated directly
    std::uint64_t scanned = 0, homog = 0;
    const auto d = c.domain();
    for (std::size_t a = 0; a < d.size(); ++a)
      for (std::size_t b = a + 1; b < d.size(); ++b)
        for (std::size_t e = b + 1; e < d.size(); ++e)
          for (std::size_t f = e + 1; f < d.size(); ++f) {
            ++scanned;
            const std::vector<std::uint64_t> s{d[a], d[b], d[e], d[f]};
            homog += is_min_homogeneous(c, s);
          }
    o.require(scanned == 126, "126 four-element subsets");
    o.require(homog == 0, "no min-homogeneous four-element subset");
    o.require(!oracle::has_min_homogeneous(c, 4), "oracle agrees");
    o.detail << ", " << scanned << " 4-subsets, none min-homogeneous";
  });

  criterion(2, "construction certificate k=4", 60.0, [](Outcome& o) {
    check_construction(o, 4, 64, 140);
    const PairColoring c = Construction::full(ConstructionParams(4)).to_pair_coloring();
    const SearchOutcome slow = brute_force_max(c, 5);
    const SearchOutcome fast = max_min_homog(c);
    o.require(slow.nodes_explored >= binomial(76, 5), "every 5-subset examined");
    o.require(slow.max_size <= 4, "no min-homogeneous 5-subset (brute force)");
    o.require(fast.max_size == slow.max_size && fast.witness == slow.witness, "branch-and-bound agrees");
    o.detail << ", " << binomial(76, 5) << " 5-subsets none min-homogeneous, max " << fast.max_size;
  });

  criterion(3, "hierarchy identities", 0, [](Outcome& o) {
    for (std::uint64_t n = 0; n <= 1000; ++n)
      for (std::uint64_t l = 0; l <= 1000; ++l) {
        const EvalResult r = f_iter(L(1), l, n);
        o.require(r.exact() && r.value == n + l, "f_iter(1,l,n) = n+l");
      }
    for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
      const EvalResult r = f_eval(L(2), n);
      const std::uint64_t direct = oracle::f(2, n);  // isqrt(n)/2 successor steps
      o.require(r.exact() && r.value == direct && direct == n + isqrt_half_u64(n), "f_2(n) = n + isqrt_half(n)");
    }
    for (std::uint64_t n = 0; n <= 16; ++n) {
      o.require(ack_eval(L(2), n).value == 2 * n && oracle::ack(2, n) == 2 * n, "A_2(n) = 2n");
      const Natural a3 = ack_eval(L(3), n).value;
      o.require(a3 == (Natural(n) << n) && oracle::ack(3, n) == (n << n), "A_3(n) = n 2^n");
    }
    o.detail << "f_iter(1) on [0,1000]^2, f_2 on [0,1e6], A_2 and A_3 on [0,16]";
  });

  criterion(4, "growth instances", 0, [](Outcome& o) {
    o.require(exceeds_threshold(L(7), 16, 4096) == Tri::Yes, "f_7(16) >= 4096");
    int squared = 0, all = 0;
    for (const GrowthInstance& g : check_growth_instances()) {
      o.require(g.holds == Tri::Yes, g.relation + " at i=" + std::to_string(g.i));
      ++all;
      if (g.relation == "f_i(n) <= f_{i+6}^(2)(n)" || g.relation == "A_i(n) <= f_{i+6}^(2)(n)") ++squared;
    }
    o.require(squared == 6, "six comparisons against f_{i+6}^(2) (f_i and A_i, i = 1..3)");
    o.detail << "f_7(16) >= 4096; " << all << " instances hold, " << squared << " of them against f_{i+6}^(2) at n=16";
  });

  criterion(5, "pairing", 0, [](Outcome& o) {
    std::set<std::uint64_t> codes;
    for (std::uint64_t m = 0; m <= 100; ++m)
      for (std::uint64_t n = 0; n <= 100; ++n) {
        const std::uint64_t p = cantor_pair(m, n);
        o.require(p == oracle::pair(m, n), "value");
        o.require(cantor_unpair(p) == std::make_pair(m, n), "round trip");
        codes.insert(p);
      }
    o.require(codes.size() == 101 * 101, "injective");
    for (std::uint64_t l = 3; l <= 64; ++l)
      for (std::uint64_t m = 0; m <= l; ++m)
        for (std::uint64_t n = 0; n <= l; ++n) o.require(cantor_pair(m, n) < 4 * l * l, "Pr(m,n) < 4 l^2");
    o.detail << "round trip on [0,100]^2, bound for 2 < l <= 64";
  });

  criterion(6, "rung distance properties", 0, [](Outcome& o) {
    std::uint64_t triples = 0;
    for (std::uint64_t k : {3, 4}) {
      const Construction con = Construction::full(ConstructionParams(k));
      const auto [lo, hi] = con.interval();
      for (unsigned i = 1; i <= k; ++i)
        for (std::uint64_t m = lo; m < hi; ++m)
          for (std::uint64_t n = m; n < hi; ++n) {
            const std::uint64_t mn = con.dist(L(i), m, n);
            if (i == 1) o.require(mn == n - m, "d_1(m,n) = n - m");
            for (std::uint64_t p = n; p < hi; ++p) {
              ++triples;
              o.require(con.dist(L(i), m, p) == mn + con.dist(L(i), n, p), "additivity");
            }
          }
    }
    o.detail << triples << " (level, m <= n <= p) triples on the k=3,4 intervals";
  });

  criterion(7, "search oracle equivalence", 0, [](Outcome& o) {
    std::mt19937_64 rng(20240607);
    int colorings = 0;
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t size = 1 + trial % 12;
      std::set<std::uint64_t> dom;
      while (dom.size() < size) dom.insert(std::uniform_int_distribution<std::uint64_t>(1, 50)(rng));
      const PairColoring c =
          oracle::random_regressive({dom.begin(), dom.end()}, rng, 1 + static_cast<std::uint64_t>(trial % 4));
      const SearchOutcome fast = max_min_homog(c);
      const SearchOutcome slow = brute_force_max(c, size);
      o.require(fast.max_size == slow.max_size && fast.witness == slow.witness, "random coloring");
      ++colorings;
    }
    for (std::uint64_t k : {3, 4}) {
      const PairColoring c = Construction::full(ConstructionParams(k)).to_pair_coloring();
      const SearchOutcome fast = max_min_homog(c);
      const SearchOutcome slow = brute_force_max(c, static_cast<std::size_t>(k + 1));
      o.require(slow.max_size <= k, "construction has no (k+1)-set");
      o.require(fast.max_size == slow.max_size && fast.witness == slow.witness, "construction interval");
    }
    o.detail << colorings << " random colorings and both construction intervals agree";
  });

  criterion(8, "nu milestones", 600.0, [](Outcome& o) {
    const NuValue v1 = nu_value(1, 10), v2 = nu_value(2, 10), v3 = nu_value(3, 10);
    o.require(v1.value == 1u, "nu(1) = 1");
    o.require(v2.value == 2u, "nu(2) = 2");
    o.require(v3.value == 3u, "nu(3) = 3");
    std::uint64_t payloads = 0;
    auto sound = [&](const NuCertificate& cert) {
      if (cert.verdict != NuVerdict::AvoiderExists) return;
      ++payloads;
      const PairColoring c = cert.coloring();
      o.require(c.regressive() && !oracle::has_min_homogeneous(c, cert.k), "avoider payload");
    };
    for (const auto* v : {&v1, &v2, &v3})
      for (const auto& cert : v->sweep) sound(cert);
    for (std::uint64_t N = 1; N <= 6; ++N) {
      const NuCertificate cert = nu_decision(N, 3);
      o.require((cert.verdict == NuVerdict::AvoiderExists) == oracle::avoider_exists(N, 3), "full enumeration");
      sound(cert);
    }
    o.detail << "nu(1..3) = 1, 2, 3; N <= 6 cross-checked; " << payloads << " payloads re-checked";
  });

  criterion(9, "CNF round trip", 0, [](Outcome& o) {
    const std::uint64_t nu3 = *nu_value(3, 10).value;
    std::string verdicts;
    for (std::uint64_t N = 2; N <= nu3 + 1; ++N) {
      const CnfDocument doc = export_cnf(N, 3);
      std::istringstream text(doc.to_dimacs());
      const DimacsFormula parsed = parse_dimacs(text);
      o.require(parsed.clauses == doc.clauses() && parsed.variables == doc.variable_count(), "DIMACS parse");
      const NuCertificate cert = nu_decision(N, 3);
      if (cert.verdict == NuVerdict::AvoiderExists)
        o.require(parsed.satisfied_by(doc.encode(cert.coloring())), "injected avoider satisfies");
      const bool sat = oracle::solve(parsed.variables, parsed.clauses).has_value();
      o.require(sat == (N < nu3), "satisfiable exactly below nu(3)");
      o.require(sat == (cert.verdict == NuVerdict::AvoiderExists), "solver agrees with search");
      verdicts += " N=" + std::to_string(N) + (sat ? ":sat" : ":unsat");
    }
    o.detail << verdicts;
  });

  criterion(10, "reduction lemmas", 0, [](Outcome& o) {
    std::mt19937_64 rng(77);
    std::uint64_t red = 0, blue = 0;
    for (int trial = 0; trial < 120; ++trial) {
      const std::uint64_t size = 3 + trial % 10;
      const PairColoring c = oracle::random_regressive(oracle::range(2, 2 + size), rng,
                                                       1 + static_cast<std::uint64_t>(trial % 5));
      const TripleColoring t = lift_to_triples(c);
      for_each_homogeneous(t, TripleColor::Red, 2, size, [&](const std::vector<std::uint64_t>& a) {
        ++red;
        o.require(is_valid_witness(c, extract_min_homog(a, c)), "Red set gives a witness");
      });
      const BlueBoundReport r = blue_bound_check(c);
      blue += r.blue_sets;
      o.require(r.violations.empty(), "|A| <= min A + 1 for Blue A");
    }
    o.detail << "120 colorings, " << red << " Red sets, " << blue << " Blue sets, 0 violations";
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAILED" : "PASSED", failures);
  return failures ? 1 : 0;
}
