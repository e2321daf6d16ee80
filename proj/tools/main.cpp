// prime_gauge: exact prime counts in short intervals and the conjectures
// stated about them.
//
// Exit codes: 0 all checks pass, 1 a conjecture check failed, 2 usage or
// domain error, 3 budget or overflow error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prime_gauge/errors.hpp"
#include "prime_gauge/parallel.hpp"
#include "prime_gauge/report.hpp"
#include "prime_gauge/scan.hpp"

namespace pg = prime_gauge;

namespace {

constexpr std::uint64_t kMinBudget = 10000;

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kResource = 3 };

struct Config {
  std::uint64_t budget = std::uint64_t{1} << 31;
  unsigned threads = pg::hardware_threads();
  std::string format = "csv";
  std::string out;
};

struct Args {
  std::uint64_t n = 0, k = 0, i = 0, from = 0, to = 0, scan_limit = 10000;
  int id = 0;
  bool decompose = false;
};

std::string describe(const pg::ScanRecord& r) {
  std::string s(pg::rule_name(r.rule));
  for (const auto& [name, value] : r.inputs) s += " " + name + "=" + std::to_string(value);
  if (const auto* u = std::get_if<std::uint64_t>(&r.actual)) {
    s += ": actual " + std::to_string(*u);
  } else if (const auto* d = std::get_if<double>(&r.actual)) {
    s += ": actual " + pg::format_real(*d);
  } else {
    s += ": actual unknown";
  }
  for (const auto& [name, value] : r.bounds) s += ", " + name + " " + pg::format_real(value);
  return s;
}

// Runs the chosen subcommand and returns its exit code.
int dispatch(CLI::App& app, const Config& cfg, const Args& a, std::ostream& out) {
  const pg::Format format = pg::parse_format(cfg.format);
  pg::SieveOptions sieve;
  sieve.budget = cfg.budget;
  sieve.threads = cfg.threads;

  if (app.got_subcommand("table")) {
    const pg::TableSpec spec = pg::published_table(a.id);
    const pg::RenderedTable t = pg::reproduce_table(spec, {sieve});
    pg::emit(t, format, out);
    for (const auto& c : t.checks) {
      if (c.match) continue;
      std::cerr << "note: row " << c.row << " " << c.column << ": printed " << c.published
                << ", computed " << c.ours << (c.disputed ? " (printed value disputed)" : "")
                << '\n';
    }
    for (const auto& v : t.violations) std::cerr << "violation: " << v << '\n';
    std::cerr << "table " << a.id << ": " << t.rows.size() << " rows, " << t.mismatches()
              << " mismatches, " << t.violations.size() << " violations\n";
    return t.violations.empty() ? kOk : kViolation;
  }

  pg::Rule rule{};
  pg::ScanGrid grid;
  if (app.got_subcommand("leg")) {
    rule = pg::Rule::kImprovedLegendre;
    grid.n = {a.n};
  } else if (app.got_subcommand("leg-scan")) {
    rule = pg::Rule::kImprovedLegendre;
    grid.n = pg::ScanGrid::range(a.from, a.to);
  } else if (app.got_subcommand("bounds")) {
    rule = pg::Rule::kLegBounds;
    grid.n = {a.n};
  } else if (app.got_subcommand("count")) {
    rule = pg::Rule::kConj3;
    grid.n = {a.n};
    grid.k = {a.k};
  } else if (app.got_subcommand("threshold")) {
    rule = pg::Rule::kThreshold;
    grid.k = {a.k};
    grid.scan_limit = a.scan_limit;
  } else if (app.got_subcommand("brocard")) {
    rule = a.decompose ? pg::Rule::kBrocardSplit : pg::Rule::kBrocard;
    grid.n = {a.i};
  } else if (app.got_subcommand("nth-bound")) {
    rule = pg::Rule::kNthBound;
    grid.n = {a.n};
  } else if (app.got_subcommand("ubcount")) {
    rule = pg::Rule::kConj4;
    grid.n = {a.n};
    grid.k = {a.k};
  } else if (app.got_subcommand("crossover")) {
    rule = pg::Rule::kCrossover;
    grid.k = {a.k};
  } else if (app.got_subcommand("rosser")) {
    rule = pg::Rule::kRosser;
    grid.n = {a.n};
  } else if (app.got_subcommand("nagura")) {
    rule = pg::Rule::kNagura;
    grid.n = {a.n};
  } else if (app.got_subcommand("pnt-ratio")) {
    rule = pg::Rule::kPntRatio;
    grid.n = {a.n};
  }

  const auto records = pg::run_scan(rule, grid, {sieve});
  pg::emit(records, format, out, rule);
  const std::size_t failures = pg::count_failures(records);
  for (const auto& r : records) {
    if (!r.pass) std::cerr << "violation: " << describe(r) << '\n';
  }
  std::cerr << pg::rule_name(rule) << ": " << records.size() << " records, " << failures
            << " violations\n";
  return failures == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact prime counts in short intervals and checks of conjectures about them."};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  Args a;
  if (const char* env = std::getenv("PRIME_GAUGE_BUDGET")) {
    try {
      std::size_t used = 0;
      cfg.budget = std::stoull(env, &used);
      if (used != std::string(env).size() || std::string(env).starts_with("-")) {
        throw std::invalid_argument("trailing characters");
      }
    } catch (const std::exception&) {
      std::cerr << "error: PRIME_GAUGE_BUDGET is not a positive integer: " << env << '\n';
      return kUsage;
    }
  }
  app.add_option("--budget", cfg.budget, "Largest integer any sieve may reach")
      ->check(CLI::Range(kMinBudget, std::numeric_limits<std::uint64_t>::max()))
      ->envname("PRIME_GAUGE_BUDGET");
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out, "Output file (default standard output)");

  auto need = [](CLI::App* sub, const char* name, auto& target, const char* help) {
    sub->add_option(name, target, help)->required();
  };
  need(app.add_subcommand("leg", "Primes strictly between n^2 and (n+1)^2"), "--n", a.n, "n");
  {
    auto* s = app.add_subcommand("leg-scan", "leg(n) for every n in [from, to]");
    need(s, "--from", a.from, "first n");
    need(s, "--to", a.to, "last n");
  }
  need(app.add_subcommand("bounds", "leg(n) against its upper and conjectured bounds"), "--n",
       a.n, "n >= 5");
  {
    auto* s = app.add_subcommand("count", "Primes strictly between n and kn");
    need(s, "--n", a.n, "n");
    need(s, "--k", a.k, "k >= 2");
  }
  {
    auto* s = app.add_subcommand("threshold", "Threshold formula against a scan of n");
    need(s, "--k", a.k, "k >= 2");
    s->add_option("--scan-limit", a.scan_limit, "Largest n scanned")->capture_default_str();
  }
  {
    auto* s = app.add_subcommand("brocard", "Primes between consecutive prime squares");
    need(s, "--i", a.i, "prime index i >= 1");
    s->add_flag("--decompose", a.decompose, "Split into the two end intervals");
  }
  need(app.add_subcommand("nth-bound", "Upper bound for the n-th prime"), "--n", a.n, "n >= 3");
  {
    auto* s = app.add_subcommand("ubcount", "Primes in [n, kn] against kn/9 + k^2");
    need(s, "--n", a.n, "n");
    need(s, "--k", a.k, "k >= 2");
  }
  need(app.add_subcommand("crossover", "Smallest useful n for the kn/9 + k^2 bound"), "--k", a.k,
       "k >= 2");
  need(app.add_subcommand("rosser", "n/ln n <= pi(n) <= 1.25 n/ln n"), "--n", a.n, "n > 17");
  need(app.add_subcommand("nagura", "A prime in [n, 6n/5]"), "--n", a.n, "n > 25");
  need(app.add_subcommand("pnt-ratio", "Primes in (n, 2n) over n/ln n"), "--n", a.n, "n >= 2");
  {
    auto* s = app.add_subcommand("table", "Reproduce a published table");
    s->add_option("--id", a.id, "Table number")->required()->check(CLI::Range(1, 5));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (cfg.out.empty()) return dispatch(app, cfg, a, std::cout);
    std::ofstream file(cfg.out);
    if (!file) {
      std::cerr << "error: cannot open " << cfg.out << " for writing\n";
      return kUsage;
    }
    return dispatch(app, cfg, a, file);
  } catch (const pg::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return kResource;
  } catch (const pg::OverflowError& e) {
    std::cerr << "overflow error: " << e.what() << '\n';
    return kResource;
  } catch (const pg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
