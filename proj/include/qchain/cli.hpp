#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qchain/counting.hpp"

namespace qchain {

enum class Command {
  kDist,        // exact Betti-number distribution
  kRankDist,    // exact boundary-rank distribution
  kMoments,     // mean, variance, optional t-th moment
  kAsymptotic,  // limiting values as q grows
  kSample,      // Monte Carlo histogram
  kCompare,     // exact vs empirical vs enumeration oracle
  kCounts,      // matrix/subspace counting quantities
  kSweepQ,      // concentration probability across primes
};

enum class OutputFormat { kCsv, kJson };

/// Parsed invocation. Which fields matter depends on the command; run()
/// rejects missing or malformed ones with a diagnostic naming the flag.
struct RunConfig {
  Command command = Command::kDist;
  OutputFormat format = OutputFormat::kCsv;
  std::optional<std::int64_t> q;
  std::vector<Index> dims;
  std::optional<Index> m;
  std::optional<Index> t;
  std::optional<std::int64_t> trials;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> primes;        // sweep-q
  std::int64_t budget = 1000000;           // compare: oracle state budget
  bool require_oracle = false;             // compare: fail instead of skipping
  std::optional<std::string> output;       // report path; stdout when absent
  std::vector<std::int64_t> tuples;        // counts: n, k
  std::vector<std::int64_t> subspaces;     // counts: n, k
  std::vector<std::int64_t> rank_matrices; // counts: rows, cols, r
  std::vector<std::int64_t> cond_rank;     // counts: k, r, n_next
};

/// Bad flags; run() maps it to exit status 1.
class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunResult {
  int status = 0;
  std::string report;      // serialized table, empty on error
  std::string warning;     // non-fatal stderr notes
  std::string diagnostic;  // one-line stderr error when status != 0
};

/// Executes the command. Status 0 on success, 1 on usage error, 2 when the
/// compare oracle was required but over budget. Never throws.
RunResult run(const RunConfig& config);

std::string command_name(Command c);

}  // namespace qchain
