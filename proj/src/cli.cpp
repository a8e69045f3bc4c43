#include "qchain/cli.hpp"

#include <array>
#include <charconv>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "qchain/asymptotics.hpp"
#include "qchain/betti.hpp"
#include "qchain/chain_spec.hpp"
#include "qchain/sampler.hpp"

namespace qchain {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_double(double d) {
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), d);
  return std::string(buf.data(), res.ptr);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string num_str(const Rational& r) { return numerator(r).str(); }
std::string den_str(const Rational& r) { return denominator(r).str(); }

/// Rethrows argument/range errors from the wrapped call as a UsageError
/// naming the offending flag. Budget errors pass through untouched.
template <typename Fn>
auto checked(const char* flag, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("argument ") + flag + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(std::string("argument ") + flag + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(std::string("argument ") + flag + ": " + e.what());
  }
}

template <typename T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("argument ") + flag + " is required");
  return *v;
}

PrimeField make_field(const RunConfig& cfg) {
  const std::int64_t q = require(cfg.q, "--q");
  return checked("--q", [&] { return PrimeField(q); });
}

ChainSpec make_spec(const RunConfig& cfg) {
  const PrimeField f = make_field(cfg);
  return checked("--dims", [&] { return ChainSpec(f, cfg.dims); });
}

void validate_dims(const std::vector<Index>& dims) {
  checked("--dims", [&] {
    if (dims.empty()) throw std::invalid_argument("dims must be non-empty");
    for (const Index n : dims) {
      if (n < 0) throw std::invalid_argument("dims entries must be non-negative");
    }
  });
}

struct TableReport {
  std::string command;
  ordered_json params = ordered_json::object();
  std::vector<std::string> columns;
  ordered_json rows = ordered_json::array();
  std::optional<std::uint64_t> seed;
  // Constant columns appended to every CSV row (TV distances, seed echo).
  std::vector<std::pair<std::string, std::string>> csv_tail;
  // Extra top-level JSON members.
  ordered_json extras = ordered_json::object();
};

std::string render_cell(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  if (v.is_number_float()) return fmt_double(v.get<double>());
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += ' ';
      out += render_cell(e);
    }
    return out;
  }
  return v.dump();
}

std::string render_csv(const TableReport& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out << ',';
    out << t.columns[i];
  }
  for (const auto& tail : t.csv_tail) out << ',' << tail.first;
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      if (i) out << ',';
      out << render_cell(row.contains(t.columns[i]) ? row.at(t.columns[i])
                                                    : ordered_json());
    }
    for (const auto& tail : t.csv_tail) out << ',' << tail.second;
    out << '\n';
  }
  return out.str();
}

std::string render_json(const TableReport& t) {
  ordered_json j;
  j["command"] = t.command;
  j["params"] = t.params;
  j["rows"] = t.rows;
  if (t.seed) j["seed"] = *t.seed;
  for (const auto& [k, v] : t.extras.items()) j[k] = v;
  return j.dump(2) + "\n";
}

void put_rational(ordered_json& row, const std::string& prefix, const Rational& r) {
  row[prefix + "numerator"] = num_str(r);
  row[prefix + "denominator"] = den_str(r);
  row[prefix + "decimal"] = to_double(r);
}

ordered_json rational_json(const Rational& r) {
  ordered_json j;
  put_rational(j, "", r);
  return j;
}

TableReport handle_dist(const RunConfig& cfg) {
  const ChainSpec spec = make_spec(cfg);
  const Index m = require(cfg.m, "--m");
  const DiscreteDist dist = checked("--m", [&] { return betti_distribution(spec, m); });
  TableReport t;
  t.command = command_name(cfg.command);
  t.params = {{"q", spec.field.order()}, {"dims", cfg.dims}, {"m", m}};
  t.columns = {"b", "numerator", "denominator", "decimal"};
  for (const auto& [b, p] : dist.probs()) {
    ordered_json row{{"b", b}};
    put_rational(row, "", p);
    t.rows.push_back(row);
  }
  return t;
}

TableReport handle_rank_dist(const RunConfig& cfg) {
  const ChainSpec spec = make_spec(cfg);
  const Index m = require(cfg.m, "--m");
  const DiscreteDist dist = checked("--m", [&] { return rank_distribution(spec, m); });
  TableReport t;
  t.command = command_name(cfg.command);
  t.params = {{"q", spec.field.order()}, {"dims", cfg.dims}, {"m", m}};
  t.columns = {"rank", "numerator", "denominator", "decimal"};
  for (const auto& [r, p] : dist.probs()) {
    ordered_json row{{"rank", r}};
    put_rational(row, "", p);
    t.rows.push_back(row);
  }
  return t;
}

TableReport handle_moments(const RunConfig& cfg) {
  const ChainSpec spec = make_spec(cfg);
  const Index m = require(cfg.m, "--m");
  const DiscreteDist dist = checked("--m", [&] { return betti_distribution(spec, m); });
  const Rational mean = dist.moment(1);
  const Rational variance = dist.moment(2) - mean * mean;
  TableReport t;
  t.command = command_name(cfg.command);
  t.params = {{"q", spec.field.order()}, {"dims", cfg.dims}, {"m", m}};
  if (cfg.t) t.params["t"] = *cfg.t;
  t.columns = {"quantity", "numerator", "denominator", "decimal"};
  const auto push = [&](const std::string& name, const Rational& r) {
    ordered_json row{{"quantity", name}};
    put_rational(row, "", r);
    t.rows.push_back(row);
  };
  push("mean", mean);
  push("variance", variance);
  if (cfg.t) {
    const Index order = *cfg.t;
    push("moment_" + std::to_string(order),
         checked("--t", [&] { return dist.moment(order); }));
  }
  return t;
}

TableReport handle_asymptotic(const RunConfig& cfg) {
  validate_dims(cfg.dims);
  const Index m = require(cfg.m, "--m");
  const LimitReport rep = checked("--m", [&] { return limit_report(cfg.dims, m); });
  TableReport t;
  t.command = command_name(cfg.command);
  t.params = {{"dims", cfg.dims}, {"m", m}};
  t.columns = {"quantity", "value"};
  t.rows.push_back({{"quantity", "limiting_betti"}, {"value", rep.betti}});
  t.rows.push_back({{"quantity", "limiting_rank"}, {"value", rep.rank}});
  for (std::size_t l = 0; l < rep.nullities.size(); ++l) {
    t.rows.push_back({{"quantity", "limiting_nullity_" + std::to_string(l)},
                      {"value", rep.nullities[l]}});
  }
  return t;
}

EmpiricalDist run_sampling(const RunConfig& cfg, const ChainSpec& spec, Index m,
                           std::int64_t trials) {
  try {
    return empirical_betti(spec, m, trials, cfg.seed);
  } catch (const std::out_of_range& e) {
    throw UsageError(std::string("argument --m: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("argument --trials: ") + e.what());
  }
}

TableReport handle_sample(const RunConfig& cfg) {
  const ChainSpec spec = make_spec(cfg);
  const Index m = require(cfg.m, "--m");
  const std::int64_t trials = cfg.trials.value_or(10000);
  const EmpiricalDist emp = run_sampling(cfg, spec, m, trials);
  TableReport t;
  t.command = command_name(cfg.command);
  t.params = {{"q", spec.field.order()}, {"dims", cfg.dims}, {"m", m}, {"trials", trials}};
  t.seed = cfg.seed;
  t.columns = {"b", "count", "frequency", "trials", "seed"};
  for (const auto& [b, c] : emp.counts) {
    t.rows.push_back({{"b", b},
                      {"count", c},
                      {"frequency", to_double(Rational(c, trials))},
                      {"trials", trials},
                      {"seed", cfg.seed}});
  }
  return t;
}

TableReport handle_compare(const RunConfig& cfg, std::string& warning) {
  const ChainSpec spec = make_spec(cfg);
  const Index m = require(cfg.m, "--m");
  const std::int64_t trials = cfg.trials.value_or(10000);
  const DiscreteDist exact = checked("--m", [&] { return betti_distribution(spec, m); });
  const EmpiricalDist emp = run_sampling(cfg, spec, m, trials);
  std::optional<DiscreteDist> oracle;
  if (cfg.require_oracle) {
    oracle = enumerate_betti_oracle(spec, m, BigInt(cfg.budget));
  } else {
    try {
      oracle = enumerate_betti_oracle(spec, m, BigInt(cfg.budget));
    } catch (const BudgetExceeded& e) {
      warning = std::string("compare: enumeration oracle skipped: ") + e.what();
    }
  }
  const Rational tv_emp = tv_distance(emp, exact);
  std::optional<Rational> tv_orc;
  if (oracle) tv_orc = tv_distance(*oracle, exact);

  TableReport t;
  t.command = command_name(cfg.command);
  t.params = {{"q", spec.field.order()},
              {"dims", cfg.dims},
              {"m", m},
              {"trials", trials},
              {"budget", cfg.budget}};
  t.seed = cfg.seed;
  t.columns = {"b",
               "exact_numerator",
               "exact_denominator",
               "exact_decimal",
               "empirical_count",
               "empirical_frequency",
               "oracle_numerator",
               "oracle_denominator",
               "oracle_decimal"};
  std::set<Index> support;
  for (const auto& [b, p] : exact.probs()) support.insert(b);
  for (const auto& [b, c] : emp.counts) support.insert(b);
  for (const Index b : support) {
    ordered_json row{{"b", b}};
    put_rational(row, "exact_", exact.prob(b));
    const auto it = emp.counts.find(b);
    const std::int64_t c = it == emp.counts.end() ? 0 : it->second;
    row["empirical_count"] = c;
    row["empirical_frequency"] = to_double(Rational(c, trials));
    if (oracle) {
      put_rational(row, "oracle_", oracle->prob(b));
    } else {
      row["oracle_numerator"] = nullptr;
      row["oracle_denominator"] = nullptr;
      row["oracle_decimal"] = nullptr;
    }
    t.rows.push_back(row);
  }
  t.csv_tail = {{"tv_empirical", fmt_double(to_double(tv_emp))},
                {"tv_oracle", tv_orc ? fmt_double(to_double(*tv_orc)) : ""},
                {"seed", std::to_string(cfg.seed)}};
  t.extras["tv"] = ordered_json::object();
  t.extras["tv"]["empirical"] = rational_json(tv_emp);
  t.extras["tv"]["oracle"] = tv_orc ? rational_json(*tv_orc) : ordered_json();
  return t;
}

TableReport handle_counts(const RunConfig& cfg) {
  const PrimeField field = make_field(cfg);
  TableReport t;
  t.command = command_name(cfg.command);
  t.params = {{"q", field.order()}};
  t.columns = {"quantity", "args", "numerator", "denominator", "decimal"};
  bool any = false;
  const auto expect = [](const std::vector<std::int64_t>& v, std::size_t n,
                         const char* flag) {
    if (v.size() != n) {
      throw UsageError(std::string("argument ") + flag + ": expected " +
                       std::to_string(n) + " comma-separated values");
    }
  };
  const auto push_count = [&](const std::string& name,
                              const std::vector<std::int64_t>& args, const BigInt& c) {
    ordered_json row{{"quantity", name}, {"args", args}};
    row["numerator"] = c.str();
    row["denominator"] = "1";
    row["decimal"] = c.convert_to<double>();
    t.rows.push_back(row);
  };
  if (!cfg.tuples.empty()) {
    expect(cfg.tuples, 2, "--tuples");
    const BigInt c = checked("--tuples", [&] {
      return count_independent_tuples(cfg.tuples[0], cfg.tuples[1], field);
    });
    push_count("independent_tuples", cfg.tuples, c);
    any = true;
  }
  if (!cfg.subspaces.empty()) {
    expect(cfg.subspaces, 2, "--subspaces");
    const BigInt c = checked("--subspaces", [&] {
      return q_binomial(cfg.subspaces[0], cfg.subspaces[1], field);
    });
    push_count("subspaces", cfg.subspaces, c);
    any = true;
  }
  if (!cfg.rank_matrices.empty()) {
    expect(cfg.rank_matrices, 3, "--rank-matrices");
    const BigInt c = checked("--rank-matrices", [&] {
      return count_rank_matrices(cfg.rank_matrices[0], cfg.rank_matrices[1],
                                 cfg.rank_matrices[2], field);
    });
    push_count("rank_matrices", cfg.rank_matrices, c);
    any = true;
  }
  if (!cfg.cond_rank.empty()) {
    expect(cfg.cond_rank, 3, "--cond-rank");
    const Rational p = checked("--cond-rank", [&] {
      return conditional_rank_prob(cfg.cond_rank[0], cfg.cond_rank[1],
                                   cfg.cond_rank[2], field);
    });
    ordered_json row{{"quantity", "cond_rank_prob"}, {"args", cfg.cond_rank}};
    put_rational(row, "", p);
    t.rows.push_back(row);
    any = true;
  }
  if (!any) {
    throw UsageError(
        "counts: nothing requested; pass --tuples, --subspaces, "
        "--rank-matrices, or --cond-rank");
  }
  return t;
}

TableReport handle_sweep_q(const RunConfig& cfg, std::string& warning) {
  validate_dims(cfg.dims);
  const Index m = require(cfg.m, "--m");
  if (cfg.primes.empty()) throw UsageError("argument --primes is required");
  const Index b_star = checked("--m", [&] {
    return limiting_betti(std::span<const Index>(cfg.dims), m);
  });
  TableReport t;
  t.command = command_name(cfg.command);
  t.params = {{"dims", cfg.dims}, {"m", m}, {"primes", cfg.primes}, {"betti_value", b_star}};
  t.columns = {"q", "numerator", "denominator", "decimal", "increased"};
  std::optional<Rational> prev;
  std::int64_t prev_q = 0;
  std::ostringstream warn;
  for (const std::int64_t p : cfg.primes) {
    const PrimeField field = checked("--primes", [&] { return PrimeField(p); });
    const ChainSpec spec(field, cfg.dims);
    const Rational prob = betti_distribution(spec, m).prob(b_star);
    ordered_json row{{"q", p}};
    put_rational(row, "", prob);
    if (prev) {
      const bool up = prob > *prev;
      row["increased"] = up;
      if (!up) {
        if (warn.tellp() > 0) warn << '\n';
        warn << "sweep-q: P[betti_" << m << " = " << b_star
             << "] did not increase from q=" << prev_q << " to q=" << p;
      }
    } else {
      row["increased"] = nullptr;
    }
    prev = prob;
    prev_q = p;
    t.rows.push_back(row);
  }
  warning = warn.str();
  return t;
}

TableReport dispatch(const RunConfig& cfg, std::string& warning) {
  switch (cfg.command) {
    case Command::kDist:
      return handle_dist(cfg);
    case Command::kRankDist:
      return handle_rank_dist(cfg);
    case Command::kMoments:
      return handle_moments(cfg);
    case Command::kAsymptotic:
      return handle_asymptotic(cfg);
    case Command::kSample:
      return handle_sample(cfg);
    case Command::kCompare:
      return handle_compare(cfg, warning);
    case Command::kCounts:
      return handle_counts(cfg);
    case Command::kSweepQ:
      return handle_sweep_q(cfg, warning);
  }
  throw std::logic_error("unknown command");
}

}  // namespace

std::string command_name(Command c) {
  switch (c) {
    case Command::kDist:
      return "dist";
    case Command::kRankDist:
      return "rank-dist";
    case Command::kMoments:
      return "moments";
    case Command::kAsymptotic:
      return "asymptotic";
    case Command::kSample:
      return "sample";
    case Command::kCompare:
      return "compare";
    case Command::kCounts:
      return "counts";
    case Command::kSweepQ:
      return "sweep-q";
  }
  return "unknown";
}

RunResult run(const RunConfig& cfg) {
  RunResult res;
  try {
    const TableReport t = dispatch(cfg, res.warning);
    res.report = cfg.format == OutputFormat::kCsv ? render_csv(t) : render_json(t);
    res.status = 0;
  } catch (const UsageError& e) {
    res.status = 1;
    res.diagnostic = e.what();
  } catch (const BudgetExceeded& e) {
    res.status = 2;
    res.diagnostic = e.what();
  } catch (const std::exception& e) {
    res.status = 1;
    res.diagnostic = std::string("internal error: ") + e.what();
  }
  return res;
}

}  // namespace qchain
