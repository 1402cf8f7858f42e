#ifndef CPMU_CLI_HPP
#define CPMU_CLI_HPP

#include "cpmu/permutation.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cpmu::cli {

enum class ExitCode : int {
  Ok = 0,
  Mismatch = 1,
  ParseError = 2,
  SizeGuard = 3,
  NotContained = 4,
};

enum class Subcommand { Mu, Interval, Crosscheck, Screen, Bench };
enum class OutputFormat { Plain, Json, Dot };

struct RunConfig {
  Subcommand subcommand = Subcommand::Mu;
  std::optional<Permutation> sigma;
  std::optional<Permutation> tau;
  bool use_oracle = false;
  bool trace = false;
  OutputFormat format = OutputFormat::Plain;
  std::size_t max_n = 7;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  std::vector<std::size_t> sizes;
  std::size_t sigma_length = 3;
  bool long_tail = false;
  bool verify_uniqueness = false;
};

int run_mu(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int run_interval(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int run_crosscheck(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int run_screen(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int run_bench(const RunConfig &cfg, std::ostream &out, std::ostream &err);

/// Parses argv (argv[0] is the program name) and dispatches. Returns the
/// process exit status.
int run(const std::vector<std::string> &argv, std::ostream &out,
        std::ostream &err);

} // namespace cpmu::cli

#endif // CPMU_CLI_HPP
