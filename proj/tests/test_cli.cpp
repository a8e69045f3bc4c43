#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qchain/betti.hpp"
#include "qchain/cli.hpp"

using namespace qchain;

namespace {

RunConfig base(Command cmd) {
  RunConfig cfg;
  cfg.command = cmd;
  return cfg;
}

}  // namespace

TEST_CASE("dist emits the exact table") {
  RunConfig cfg = base(Command::kDist);
  cfg.q = 2;
  cfg.dims = {1, 1};
  cfg.m = 0;
  const RunResult res = run(cfg);
  REQUIRE(res.status == 0);
  CHECK(res.report ==
        "b,numerator,denominator,decimal\n"
        "0,1,2,0.5\n"
        "1,1,2,0.5\n");
}

TEST_CASE("rank-dist emits the exact table") {
  RunConfig cfg = base(Command::kRankDist);
  cfg.q = 2;
  cfg.dims = {1, 1};
  cfg.m = 1;
  const RunResult res = run(cfg);
  REQUIRE(res.status == 0);
  CHECK(res.report ==
        "rank,numerator,denominator,decimal\n"
        "0,1,2,0.5\n"
        "1,1,2,0.5\n");
}

TEST_CASE("moments table") {
  RunConfig cfg = base(Command::kMoments);
  cfg.q = 2;
  cfg.dims = {1, 1};
  cfg.m = 0;
  cfg.t = 2;
  const RunResult res = run(cfg);
  REQUIRE(res.status == 0);
  CHECK(res.report ==
        "quantity,numerator,denominator,decimal\n"
        "mean,1,2,0.5\n"
        "variance,1,4,0.25\n"
        "moment_2,1,2,0.5\n");
}

TEST_CASE("asymptotic table") {
  RunConfig cfg = base(Command::kAsymptotic);
  cfg.dims = {1, 3, 1};
  cfg.m = 1;
  const RunResult res = run(cfg);
  REQUIRE(res.status == 0);
  CHECK(res.report ==
        "quantity,value\n"
        "limiting_betti,1\n"
        "limiting_rank,1\n"
        "limiting_nullity_0,1\n"
        "limiting_nullity_1,2\n");
}

TEST_CASE("counts rows") {
  RunConfig cfg = base(Command::kCounts);
  cfg.q = 2;
  cfg.rank_matrices = {2, 2, 1};
  const RunResult res = run(cfg);
  REQUIRE(res.status == 0);
  CHECK(res.report ==
        "quantity,args,numerator,denominator,decimal\n"
        "rank_matrices,2 2 1,9,1,9\n");

  RunConfig all = base(Command::kCounts);
  all.q = 2;
  all.tuples = {2, 2};
  all.subspaces = {4, 2};
  all.cond_rank = {1, 1, 1};
  const RunResult res2 = run(all);
  REQUIRE(res2.status == 0);
  CHECK(res2.report ==
        "quantity,args,numerator,denominator,decimal\n"
        "independent_tuples,2 2,6,1,6\n"
        "subspaces,4 2,35,1,35\n"
        "cond_rank_prob,1 1 1,1,2,0.5\n");
}

TEST_CASE("counts usage errors") {
  RunConfig cfg = base(Command::kCounts);
  cfg.q = 2;
  SUBCASE("no quantity requested") {
    const RunResult res = run(cfg);
    CHECK(res.status == 1);
    CHECK(res.diagnostic.find("--tuples") != std::string::npos);
  }
  SUBCASE("wrong arity") {
    cfg.tuples = {4};
    const RunResult res = run(cfg);
    CHECK(res.status == 1);
    CHECK(res.diagnostic.find("--tuples") != std::string::npos);
  }
  SUBCASE("negative parameter") {
    cfg.cond_rank = {-1, 0, 2};
    const RunResult res = run(cfg);
    CHECK(res.status == 1);
    CHECK(res.diagnostic.find("--cond-rank") != std::string::npos);
  }
}

TEST_CASE("usage errors name the offending flag") {
  SUBCASE("composite q") {
    RunConfig cfg = base(Command::kDist);
    cfg.q = 4;
    cfg.dims = {1, 1};
    cfg.m = 0;
    const RunResult res = run(cfg);
    CHECK(res.status == 1);
    CHECK(res.report.empty());
    CHECK(res.diagnostic.find("--q") != std::string::npos);
  }
  SUBCASE("missing q") {
    RunConfig cfg = base(Command::kDist);
    cfg.dims = {1, 1};
    cfg.m = 0;
    const RunResult res = run(cfg);
    CHECK(res.status == 1);
    CHECK(res.diagnostic.find("--q is required") != std::string::npos);
  }
  SUBCASE("malformed dims") {
    RunConfig cfg = base(Command::kDist);
    cfg.q = 2;
    cfg.dims = {1, -2};
    cfg.m = 0;
    const RunResult res = run(cfg);
    CHECK(res.status == 1);
    CHECK(res.diagnostic.find("--dims") != std::string::npos);
  }
  SUBCASE("degree out of range") {
    RunConfig cfg = base(Command::kDist);
    cfg.q = 2;
    cfg.dims = {1, 1};
    cfg.m = 1;
    const RunResult res = run(cfg);
    CHECK(res.status == 1);
    CHECK(res.diagnostic.find("--m") != std::string::npos);
    CHECK(res.diagnostic.find("append a trailing 0") != std::string::npos);
  }
  SUBCASE("bad trials") {
    RunConfig cfg = base(Command::kSample);
    cfg.q = 2;
    cfg.dims = {1, 1};
    cfg.m = 0;
    cfg.trials = 0;
    const RunResult res = run(cfg);
    CHECK(res.status == 1);
    CHECK(res.diagnostic.find("--trials") != std::string::npos);
  }
  SUBCASE("negative moment order") {
    RunConfig cfg = base(Command::kMoments);
    cfg.q = 2;
    cfg.dims = {1, 1};
    cfg.m = 0;
    cfg.t = -2;
    const RunResult res = run(cfg);
    CHECK(res.status == 1);
    CHECK(res.diagnostic.find("--t") != std::string::npos);
  }
}

TEST_CASE("json round-trips the exact rationals") {
  RunConfig cfg = base(Command::kDist);
  cfg.q = 3;
  cfg.dims = {2, 2, 2};
  cfg.m = 1;
  cfg.format = OutputFormat::kJson;
  const RunResult res = run(cfg);
  REQUIRE(res.status == 0);

  const nlohmann::json j = nlohmann::json::parse(res.report);
  CHECK(j.at("command") == "dist");
  CHECK(j.at("params").at("q") == 3);
  CHECK(j.at("params").at("dims") == std::vector<int>({2, 2, 2}));

  const ChainSpec spec(PrimeField(3), {2, 2, 2});
  const DiscreteDist exact = betti_distribution(spec, 1);
  REQUIRE(j.at("rows").size() == exact.probs().size());
  for (const auto& row : j.at("rows")) {
    const Index b = row.at("b").get<Index>();
    const BigInt num(row.at("numerator").get<std::string>());
    const BigInt den(row.at("denominator").get<std::string>());
    CHECK(Rational(num, den) == exact.prob(b));
  }
}

TEST_CASE("sample reports are reproducible") {
  RunConfig cfg = base(Command::kSample);
  cfg.q = 3;
  cfg.dims = {2, 2, 2};
  cfg.m = 1;
  cfg.trials = 50;
  cfg.seed = 31337;
  const RunResult a = run(cfg);
  const RunResult b = run(cfg);
  REQUIRE(a.status == 0);
  CHECK(a.report == b.report);
  CHECK(a.report.find("seed") != std::string::npos);

  cfg.format = OutputFormat::kJson;
  const RunResult c = run(cfg);
  const RunResult d = run(cfg);
  REQUIRE(c.status == 0);
  CHECK(c.report == d.report);
  const nlohmann::json j = nlohmann::json::parse(c.report);
  CHECK(j.at("seed") == 31337);
  std::int64_t total = 0;
  for (const auto& row : j.at("rows")) total += row.at("count").get<std::int64_t>();
  CHECK(total == 50);
}

TEST_CASE("compare blends exact, empirical, and oracle views") {
  RunConfig cfg = base(Command::kCompare);
  cfg.q = 2;
  cfg.dims = {1, 2, 1};
  cfg.m = 1;
  cfg.trials = 400;
  cfg.seed = 5;
  cfg.format = OutputFormat::kJson;

  SUBCASE("oracle in budget agrees exactly") {
    const RunResult res = run(cfg);
    REQUIRE(res.status == 0);
    CHECK(res.warning.empty());
    const nlohmann::json j = nlohmann::json::parse(res.report);
    CHECK(j.at("tv").at("oracle").at("numerator") == "0");
    for (const auto& row : j.at("rows")) {
      CHECK(row.at("oracle_numerator") == row.at("exact_numerator"));
      CHECK(row.at("oracle_denominator") == row.at("exact_denominator"));
    }
  }

  SUBCASE("over budget is skipped with a warning by default") {
    cfg.budget = 2;
    const RunResult res = run(cfg);
    REQUIRE(res.status == 0);
    CHECK_FALSE(res.warning.empty());
    const nlohmann::json j = nlohmann::json::parse(res.report);
    CHECK(j.at("tv").at("oracle").is_null());
    for (const auto& row : j.at("rows")) CHECK(row.at("oracle_numerator").is_null());
  }

  SUBCASE("over budget fails when the oracle is required") {
    cfg.budget = 2;
    cfg.require_oracle = true;
    const RunResult res = run(cfg);
    CHECK(res.status == 2);
    CHECK(res.diagnostic.find("budget") != std::string::npos);
  }

  SUBCASE("csv carries the tv columns") {
    cfg.format = OutputFormat::kCsv;
    const RunResult res = run(cfg);
    REQUIRE(res.status == 0);
    CHECK(res.report.find("tv_empirical") != std::string::npos);
    CHECK(res.report.find("tv_oracle") != std::string::npos);
    CHECK(res.report.find("seed") != std::string::npos);
  }
}

TEST_CASE("sweep-q tracks monotonicity") {
  RunConfig cfg = base(Command::kSweepQ);
  cfg.dims = {2, 3, 2, 2};
  cfg.m = 1;
  cfg.format = OutputFormat::kJson;

  SUBCASE("ascending primes increase the probability") {
    cfg.primes = {2, 3, 5};
    const RunResult res = run(cfg);
    REQUIRE(res.status == 0);
    CHECK(res.warning.empty());
    const nlohmann::json j = nlohmann::json::parse(res.report);
    REQUIRE(j.at("rows").size() == 3);
    CHECK(j.at("rows")[0].at("increased").is_null());
    CHECK(j.at("rows")[1].at("increased") == true);
    CHECK(j.at("rows")[2].at("increased") == true);
  }

  SUBCASE("a decreasing pair is flagged") {
    cfg.primes = {5, 2};
    const RunResult res = run(cfg);
    REQUIRE(res.status == 0);
    CHECK(res.warning.find("did not increase") != std::string::npos);
    const nlohmann::json j = nlohmann::json::parse(res.report);
    CHECK(j.at("rows")[1].at("increased") == false);
  }

  SUBCASE("composite prime in the list") {
    cfg.primes = {2, 6};
    const RunResult res = run(cfg);
    CHECK(res.status == 1);
    CHECK(res.diagnostic.find("--primes") != std::string::npos);
  }

  SUBCASE("missing primes") {
    const RunResult res = run(cfg);
    CHECK(res.status == 1);
    CHECK(res.diagnostic.find("--primes") != std::string::npos);
  }
}
