#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qchain/cli.hpp"

namespace {

bool given(const CLI::App* sub, const std::string& name) {
  const CLI::Option* opt = sub->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti-number distributions of uniform random chain complexes over F_q"};
  app.require_subcommand(1);

  std::int64_t q = 0;
  std::vector<std::int64_t> dims;
  std::int64_t m = 0;
  std::int64_t t = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> primes;
  std::int64_t budget = 1000000;
  bool require_oracle = false;
  std::string format = "csv";
  std::string output;
  std::vector<std::int64_t> tuples;
  std::vector<std::int64_t> subspaces;
  std::vector<std::int64_t> rank_matrices;
  std::vector<std::int64_t> cond_rank;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Report format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", output, "Write the report to this path instead of stdout");
  };
  const auto add_q = [&](CLI::App* sub) {
    sub->add_option("--q", q, "Field order; must be prime");
  };
  const auto add_dims = [&](CLI::App* sub) {
    sub->add_option("--dims", dims, "Comma-separated dimensions n_0,n_1,...")
        ->delimiter(',');
  };
  const auto add_m = [&](CLI::App* sub) { sub->add_option("--m", m, "Degree"); };

  CLI::App* c_dist = app.add_subcommand("dist", "Exact Betti-number distribution");
  CLI::App* c_rank = app.add_subcommand("rank-dist", "Exact boundary-rank distribution");
  CLI::App* c_moments = app.add_subcommand("moments", "Exact Betti-number moments");
  CLI::App* c_asym = app.add_subcommand("asymptotic", "Large-q limits: Betti number, rank, kernel dimensions");
  CLI::App* c_sample = app.add_subcommand("sample", "Monte Carlo Betti-number histogram");
  CLI::App* c_compare = app.add_subcommand("compare", "Exact vs sampled vs enumerated distributions");
  CLI::App* c_counts = app.add_subcommand("counts", "Counting quantities over F_q");
  CLI::App* c_sweep = app.add_subcommand("sweep-q", "Concentration probability across primes");

  for (CLI::App* sub : {c_dist, c_rank, c_moments}) {
    add_q(sub);
    add_dims(sub);
    add_m(sub);
    add_common(sub);
  }
  c_moments->add_option("--t", t, "Also report the t-th moment");

  add_dims(c_asym);
  add_m(c_asym);
  add_common(c_asym);

  for (CLI::App* sub : {c_sample, c_compare}) {
    add_q(sub);
    add_dims(sub);
    add_m(sub);
    sub->add_option("--trials", trials, "Number of Monte Carlo trials");
    sub->add_option("--seed", seed, "Root RNG seed");
    add_common(sub);
  }
  c_compare->add_option("--budget", budget, "State budget for the enumeration oracle");
  c_compare->add_flag("--require-oracle", require_oracle,
                      "Fail instead of skipping the oracle when over budget");

  add_q(c_counts);
  c_counts->add_option("--tuples", tuples, "n,k: ordered linearly independent k-tuples in F_q^n")
      ->delimiter(',');
  c_counts->add_option("--subspaces", subspaces, "n,k: k-dimensional subspaces of F_q^n")
      ->delimiter(',');
  c_counts->add_option("--rank-matrices", rank_matrices, "rows,cols,r: matrices of rank r")
      ->delimiter(',');
  c_counts->add_option("--cond-rank", cond_rank,
                       "k,r,n: P[rank = r] for a uniform k x n matrix")
      ->delimiter(',');
  add_common(c_counts);

  add_dims(c_sweep);
  add_m(c_sweep);
  c_sweep->add_option("--primes", primes, "Comma-separated primes to evaluate")->delimiter(',');
  add_common(c_sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  qchain::RunConfig cfg;
  if (sub == c_dist) cfg.command = qchain::Command::kDist;
  if (sub == c_rank) cfg.command = qchain::Command::kRankDist;
  if (sub == c_moments) cfg.command = qchain::Command::kMoments;
  if (sub == c_asym) cfg.command = qchain::Command::kAsymptotic;
  if (sub == c_sample) cfg.command = qchain::Command::kSample;
  if (sub == c_compare) cfg.command = qchain::Command::kCompare;
  if (sub == c_counts) cfg.command = qchain::Command::kCounts;
  if (sub == c_sweep) cfg.command = qchain::Command::kSweepQ;

  cfg.format = format == "json" ? qchain::OutputFormat::kJson : qchain::OutputFormat::kCsv;
  if (given(sub, "--q")) cfg.q = q;
  cfg.dims.assign(dims.begin(), dims.end());
  if (given(sub, "--m")) cfg.m = m;
  if (given(sub, "--t")) cfg.t = t;
  if (given(sub, "--trials")) cfg.trials = trials;
  cfg.seed = seed;
  cfg.primes = primes;
  cfg.budget = budget;
  cfg.require_oracle = require_oracle;
  if (!output.empty()) cfg.output = output;
  cfg.tuples = tuples;
  cfg.subspaces = subspaces;
  cfg.rank_matrices = rank_matrices;
  cfg.cond_rank = cond_rank;

  const qchain::RunResult res = qchain::run(cfg);
  if (!res.warning.empty()) std::cerr << res.warning << '\n';
  if (res.status != 0) {
    std::cerr << res.diagnostic << '\n';
    return res.status;
  }
  if (cfg.output) {
    std::ofstream out(*cfg.output, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output file: " << *cfg.output << '\n';
      return 1;
    }
    out << res.report;
  } else {
    std::cout << res.report;
  }
  return 0;
}
