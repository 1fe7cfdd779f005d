// regressive: certificates, searches and tables for regressive pair colorings.
//
// Exit status: 0 all checks passed, 1 a verification failed, 2 a step budget
// or node limit ran out before a mandatory check finished, 3 bad usage.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "certificate.hpp"

namespace fs = std::filesystem;
using namespace regressive;
using namespace regressive::cli;

namespace {

unsigned default_threads() {
  if (const char* env = std::getenv("REGRESSIVE_THREADS")) {
    try {
      const unsigned long t = std::stoul(env);
      if (t >= 1) return static_cast<unsigned>(t);
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring REGRESSIVE_THREADS=" << env << '\n';
  }
  return 1;
}

/// A directory target gets a file named after the report; anything else is
/// taken as the file path.
fs::path resolve_out(const std::string& out, const std::string& stem, const std::string& ext) {
  fs::path p(out);
  if (fs::is_directory(p)) return p / (stem + ext);
  return p;
}

int emit(const Report& r, const std::string& format, const std::string& out) {
  const bool machine = format == "machine";
  const std::string text = machine ? r.doc.dump(2) + "\n" : render_table(r.doc);
  if (out.empty()) {
    std::cout << text;
  } else {
    const fs::path path = resolve_out(out, file_stem(r.doc), machine ? ".json" : ".txt");
    std::ofstream f(path);
    if (!(f << text)) {
      std::cerr << "cannot write " << path << '\n';
      return usage;
    }
    std::cerr << "wrote " << path.string() << '\n';
  }
  return r.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regressive pair colorings: construction certificates, exact small-case searches, CNF export."};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  std::string out;
  unsigned threads = default_threads();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "machine"}));
  app.add_option("--out", out, "Write to FILE, or into a directory under a name built from the parameters");
  app.add_option("--threads", threads, "Search threads (default from REGRESSIVE_THREADS, else 1)")
      ->check(CLI::Range(1u, 1024u));

  std::uint64_t budget = default_step_budget;

  CertifyOptions certify_opts;
  std::uint64_t lo = 0, hi = 0;
  auto* certify_cmd = app.add_subcommand("certify", "Build and verify the construction coloring for k");
  certify_cmd->add_option("--k", certify_opts.k, "Target subset size, k >= 3")->required()->check(CLI::Range(3, 1 << 20));
  certify_cmd->add_option("--budget", budget, "Step budget per hierarchy evaluation")->check(CLI::PositiveNumber);
  auto* lo_opt = certify_cmd->add_option("--lo", lo, "Certify the sub-interval starting here (>= 4k^2)");
  auto* hi_opt = certify_cmd->add_option("--hi", hi, "... and ending before here");
  lo_opt->needs(hi_opt);
  hi_opt->needs(lo_opt);
  certify_cmd->add_option("--brute-force-limit", certify_opts.brute_force_limit,
                          "Largest subset enumeration for the brute-force cross-check");

  std::uint64_t nu_k = 3, n_cap = 12, node_limit = default_node_limit;
  auto* nu_cmd = app.add_subcommand("nu", "Least N forcing a min-homogeneous k-subset, by exhaustive search");
  nu_cmd->add_option("--k", nu_k, "Subset size")->required()->check(CLI::Range(1, 63));
  nu_cmd->add_option("--n-cap", n_cap, "Largest N to try")->check(CLI::Range(1, 63));
  nu_cmd->add_option("--node-limit", node_limit, "Search node limit per N")->check(CLI::PositiveNumber);

  std::uint64_t cnf_n = 4, cnf_k = 3;
  auto* cnf_cmd = app.add_subcommand("cnf", "DIMACS CNF for avoiders on {1..N}; satisfiable iff nu(k) > N");
  cnf_cmd->add_option("--n", cnf_n, "Domain size N")->required()->check(CLI::Range(2, 1 << 20));
  cnf_cmd->add_option("--k", cnf_k, "Subset size")->required()->check(CLI::Range(2, 1 << 20));

  unsigned h_i = 3;
  std::uint64_t h_n = 36;
  auto* hierarchy_cmd = app.add_subcommand("hierarchy", "Table of f_j(n) and A_j(n) for j = 1..i");
  hierarchy_cmd->add_option("--i", h_i, "Highest level")->required()->check(CLI::Range(1, 64));
  hierarchy_cmd->add_option("--n", h_n, "Argument")->required();
  hierarchy_cmd->add_option("--budget", budget, "Step budget per evaluation")->check(CLI::PositiveNumber);

  std::uint64_t l_k = 3, l_cap = 0;
  unsigned l_i = 2;
  auto* ladder_cmd = app.add_subcommand("ladder", "Orbit of 4k^2 under f_i up to cap");
  ladder_cmd->add_option("--k", l_k, "k >= 3")->required()->check(CLI::Range(3, 1 << 20));
  ladder_cmd->add_option("--i", l_i, "Level")->required()->check(CLI::Range(1, 64));
  ladder_cmd->add_option("--cap", l_cap, "Largest rung value")->required();
  ladder_cmd->add_option("--budget", budget, "Step budget")->check(CLI::PositiveNumber);

  auto* claims_cmd = app.add_subcommand("claims", "Growth instances of the hierarchy, by early-exit comparison");
  claims_cmd->add_option("--budget", budget, "Step budget per evaluation")->check(CLI::PositiveNumber);

  ReduceOptions reduce_opts;
  std::uint64_t reduce_k = 0;
  auto* reduce_cmd = app.add_subcommand("reduce", "Check the Red/Blue triple lift of a regressive coloring");
  auto* reduce_k_opt = reduce_cmd->add_option("--k", reduce_k, "Lift the construction coloring for k")
                           ->check(CLI::Range(3, 1 << 20));
  reduce_cmd->add_option("--size", reduce_opts.size, "Random coloring of {2..size+1}")->check(CLI::Range(2, 40));
  reduce_cmd->add_option("--seed", reduce_opts.seed, "Seed of the random coloring");
  reduce_cmd->add_option("--max-set", reduce_opts.max_set, "Largest set examined")->check(CLI::Range(3, 64));
  reduce_cmd->add_option("--budget", budget, "Step budget (with --k)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : usage;
  }

  try {
    if (*certify_cmd) {
      certify_opts.budget = budget;
      certify_opts.threads = threads;
      if (*lo_opt) {
        certify_opts.lo = lo;
        certify_opts.hi = hi;
      }
      return emit(certify(certify_opts), format, out);
    }
    if (*nu_cmd) return emit(nu(nu_k, n_cap, node_limit), format, out);
    if (*cnf_cmd) {
      const CnfDocument doc = export_cnf(cnf_n, cnf_k);
      if (out.empty()) {
        doc.write_dimacs(std::cout);
        return ok;
      }
      const fs::path path =
          resolve_out(out, "cnf_N" + std::to_string(cnf_n) + "_k" + std::to_string(cnf_k), ".cnf");
      std::ofstream f(path);
      doc.write_dimacs(f);
      if (!f) {
        std::cerr << "cannot write " << path << '\n';
        return usage;
      }
      const Report r = cnf_summary(doc, path.string());
      std::cout << (format == "machine" ? r.doc.dump(2) + "\n" : render_table(r.doc));
      return ok;
    }
    if (*hierarchy_cmd) return emit(hierarchy(h_i, h_n, budget), format, out);
    if (*ladder_cmd) return emit(ladder(l_k, l_i, l_cap, budget), format, out);
    if (*claims_cmd) return emit(claims(budget), format, out);
    if (*reduce_cmd) {
      if (*reduce_k_opt) reduce_opts.k = reduce_k;
      reduce_opts.budget = budget;
      return emit(reduce(reduce_opts), format, out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exhausted;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}
