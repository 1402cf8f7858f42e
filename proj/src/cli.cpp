#include "cpmu/cli.hpp"

#include "cpmu/bench.hpp"
#include "cpmu/crosscheck.hpp"
#include "cpmu/error.hpp"
#include "cpmu/export.hpp"
#include "cpmu/interval.hpp"
#include "cpmu/mobius.hpp"
#include "cpmu/screen.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <map>

namespace cpmu::cli {

namespace {

int code(ExitCode c) { return static_cast<int>(c); }

std::string join_chain(const std::vector<Permutation> &chain) {
  std::string out;
  for (const auto &p : chain) {
    if (!out.empty())
      out += " > ";
    out += p.str();
  }
  return out.empty() ? "(none)" : out;
}

template <typename T> std::string or_none(const std::optional<T> &v) {
  if (!v)
    return "none";
  if constexpr (std::is_same_v<T, Permutation>)
    return v->str();
  else
    return std::to_string(*v);
}

bool require_pair(const RunConfig &cfg, std::ostream &err) {
  if (cfg.sigma && cfg.tau)
    return true;
  err << "error: SIGMA and TAU are required\n";
  return false;
}

void print_summary(const CrosscheckSummary &s, std::ostream &out) {
  out << "pairs checked: " << s.pairs << "\n";
  out << "mu = -1: " << s.distribution[0] << "\n";
  out << "mu =  0: " << s.distribution[1] << "\n";
  out << "mu =  1: " << s.distribution[2] << "\n";
  out << s.mismatches << " mismatches\n";
  if (s.first_mismatch) {
    const auto &m = *s.first_mismatch;
    out << "counterexample: sigma=" << m.sigma << " tau=" << m.tau
        << " fast=" << m.fast << " oracle=" << m.oracle
        << " topdown=" << m.topdown << " (" << m.what << ")\n";
  }
}

} // namespace

int run_mu(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  if (!require_pair(cfg, err))
    return code(ExitCode::ParseError);
  const auto &sigma = *cfg.sigma;
  const auto &tau = *cfg.tau;

  const auto result =
      mobius_fast(sigma, tau, {.verify_uniqueness = cfg.verify_uniqueness,
                               .trace_carriers = cfg.trace});
  std::optional<int> oracle;
  if (cfg.use_oracle) {
    try {
      oracle = mobius_oracle(sigma, tau);
    } catch (const OracleTooLarge &e) {
      err << "error: " << e.what() << "\n";
      return code(ExitCode::SizeGuard);
    }
  }
  const bool match = !oracle || *oracle == result.value;

  if (cfg.format == OutputFormat::Json) {
    auto j = to_json(sigma, tau, result);
    if (oracle) {
      j["oracle"] = *oracle;
      j["match"] = match;
    }
    out << j.dump(2) << "\n";
  } else {
    out << result.value << "\n";
    if (cfg.trace) {
      out << "case: " << to_string(result.decided_by) << "\n";
      out << "carrier_chain: " << join_chain(result.carrier_chain) << "\n";
      out << "socle: " << or_none(result.socle()) << "\n";
    }
    if (oracle)
      out << "oracle: " << *oracle << (match ? " (match)" : " (MISMATCH)")
          << "\n";
  }
  return code(match ? ExitCode::Ok : ExitCode::Mismatch);
}

int run_interval(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  if (!require_pair(cfg, err))
    return code(ExitCode::ParseError);
  const OracleOptions guard;
  if (cfg.tau->size() > guard.max_length) {
    err << "error: interval export is limited to |tau| <= " << guard.max_length
        << "\n";
    return code(ExitCode::SizeGuard);
  }
  try {
    const auto h = hasse_edges(build_interval(*cfg.sigma, *cfg.tau));
    if (cfg.format == OutputFormat::Json)
      out << to_json(h).dump(2) << "\n";
    else
      out << to_dot(h);
  } catch (const NotContained &e) {
    err << "error: " << e.what() << "\n";
    return code(ExitCode::NotContained);
  }
  return code(ExitCode::Ok);
}

int run_crosscheck(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  if (cfg.max_n < 1 || cfg.max_n > OracleOptions{}.max_length) {
    err << "error: --max-n must be in 1.." << OracleOptions{}.max_length << "\n";
    return code(ExitCode::SizeGuard);
  }
  const CrosscheckOptions opts{.verify_uniqueness = cfg.verify_uniqueness,
                               .check_screen = true,
                               .check_interval_sum = true};
  CrosscheckSummary summary;
  if (cfg.samples) {
    out << "mode: random, max-n " << cfg.max_n << ", samples " << *cfg.samples
        << ", seed " << cfg.seed << "\n";
    summary = crosscheck_random(cfg.max_n, *cfg.samples, cfg.seed, opts);
  } else {
    out << "mode: exhaustive, max-n " << cfg.max_n << "\n";
    summary = crosscheck_exhaustive(cfg.max_n, opts);
  }
  print_summary(summary, out);
  return code(summary.mismatches == 0 ? ExitCode::Ok : ExitCode::Mismatch);
}

int run_screen(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  if (!require_pair(cfg, err))
    return code(ExitCode::ParseError);
  ScreenReport r;
  try {
    r = screen(*cfg.sigma, *cfg.tau);
  } catch (const NotContained &e) {
    err << "error: " << e.what() << "\n";
    return code(ExitCode::NotContained);
  }
  if (cfg.format == OutputFormat::Json) {
    out << to_json(r).dump(2) << "\n";
    return code(ExitCode::Ok);
  }
  out << "tails: " << r.tails.left << " " << r.tails.right << "\n";
  out << "tail_sum: " << or_none(r.tail_sum) << "\n";
  out << "excluded_value: " << or_none(r.excluded_value) << "\n";
  out << "forces_zero: " << (r.forces_zero ? "true" : "false") << "\n";
  out << "omega: " << or_none(r.omega) << "\n";
  out << "alpha: " << or_none(r.alpha) << "\n";
  out << "beta: " << or_none(r.beta) << "\n";
  return code(ExitCode::Ok);
}

int run_bench(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  BenchOptions opts;
  opts.sizes = cfg.sizes;
  opts.seed = cfg.seed;
  opts.sigma_length = cfg.sigma_length;
  opts.instance = cfg.long_tail ? BenchInstance::LongTail : BenchInstance::BothEnds;
  BenchReport report;
  try {
    report = run_benchmark(opts);
  } catch (const InvalidInput &e) {
    err << "error: " << e.what() << "\n";
    return code(ExitCode::ParseError);
  }
  out << std::left << std::setw(8) << "n" << std::setw(14) << "seconds"
      << std::setw(8) << "reps" << std::setw(16) << "case"
      << "mu\n";
  for (const auto &row : report.rows) {
    std::ostringstream secs;
    secs << std::scientific << std::setprecision(3) << row.seconds;
    out << std::left << std::setw(8) << row.n << std::setw(14) << secs.str()
        << std::setw(8) << row.repetitions << std::setw(16)
        << to_string(row.decided_by) << row.value << "\n";
  }
  if (report.slope)
    out << "log-log slope: " << std::fixed << std::setprecision(3)
        << *report.slope << "\n";
  return code(ExitCode::Ok);
}

int run(const std::vector<std::string> &argv, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Möbius function of consecutive-pattern intervals"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string sigma_text;
  std::string tau_text;
  std::string format_text = "plain";

  const std::map<std::string, OutputFormat> mu_formats{
      {"plain", OutputFormat::Plain}, {"json", OutputFormat::Json}};
  const std::map<std::string, OutputFormat> interval_formats{
      {"dot", OutputFormat::Dot}, {"json", OutputFormat::Json}};

  auto add_pair = [&](CLI::App *sub) {
    sub->add_option("SIGMA", sigma_text, "pattern, e.g. 231 or 2,3,1")->required();
    sub->add_option("TAU", tau_text, "permutation containing the pattern")
        ->required();
  };

  auto *mu = app.add_subcommand("mu", "compute mu(SIGMA, TAU)");
  add_pair(mu);
  mu->add_flag("--oracle", cfg.use_oracle, "also run the brute-force oracle");
  mu->add_flag("--trace", cfg.trace, "print the deciding case and carriers");
  mu->add_flag("--verify-uniqueness", cfg.verify_uniqueness,
               "scan every carrier length and fail on a second carrier");
  mu->add_option("--format", format_text, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));

  auto *interval = app.add_subcommand("interval", "export the Hasse diagram");
  add_pair(interval);
  interval->add_option("--format", format_text, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  auto *cross = app.add_subcommand("crosscheck", "compare fast and oracle");
  cross->add_option("--max-n", cfg.max_n, "largest |tau| checked");
  cross->add_option("--samples", cfg.samples,
                    "random pairs instead of the exhaustive sweep");
  cross->add_option("--seed", cfg.seed, "random seed");
  cross->add_flag("--verify-uniqueness", cfg.verify_uniqueness,
                  "scan every carrier length and fail on a second carrier");

  auto *scr = app.add_subcommand("screen", "necessary-condition diagnostics");
  add_pair(scr);
  scr->add_option("--format", format_text, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));

  auto *bench = app.add_subcommand("bench", "time the fast algorithm");
  bench->add_option("--sizes", cfg.sizes, "comma-separated |tau| values")
      ->required()
      ->delimiter(',');
  bench->add_option("--seed", cfg.seed, "random seed");
  bench->add_option("--sigma-len", cfg.sigma_length, "|sigma|")
      ->check(CLI::PositiveNumber);
  bench->add_flag("--long-tail", cfg.long_tail,
                  "time long-tail instances instead of the worst case");

  std::vector<const char *> raw;
  raw.reserve(argv.size());
  for (const auto &a : argv)
    raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return code(ExitCode::Ok);
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return code(ExitCode::ParseError);
  }

  try {
    if (!sigma_text.empty())
      cfg.sigma = Permutation::parse(sigma_text);
    if (!tau_text.empty())
      cfg.tau = Permutation::parse(tau_text);
  } catch (const InvalidInput &e) {
    err << "error: " << e.what() << "\n";
    return code(ExitCode::ParseError);
  }

  if (mu->parsed()) {
    cfg.subcommand = Subcommand::Mu;
    cfg.format = mu_formats.at(format_text);
    return run_mu(cfg, out, err);
  }
  if (interval->parsed()) {
    cfg.subcommand = Subcommand::Interval;
    cfg.format = format_text == "plain" ? OutputFormat::Dot
                                        : interval_formats.at(format_text);
    return run_interval(cfg, out, err);
  }
  if (cross->parsed()) {
    cfg.subcommand = Subcommand::Crosscheck;
    return run_crosscheck(cfg, out, err);
  }
  if (scr->parsed()) {
    cfg.subcommand = Subcommand::Screen;
    cfg.format = mu_formats.at(format_text);
    return run_screen(cfg, out, err);
  }
  cfg.subcommand = Subcommand::Bench;
  return run_bench(cfg, out, err);
}

} // namespace cpmu::cli
