#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

using namespace cyint::app;

namespace {

struct Flags {
  std::optional<std::string> config, op, family, primes, kappa, suite, format, output;
  std::optional<std::size_t> n, N, M, R, k;
  std::optional<int> s;
  bool extended = false;
};

enum Opt : unsigned {
  kOperator = 1u << 0,
  kFamily = 1u << 1,
  kPrimes = 1u << 2,
  kN = 1u << 3,
  kM = 1u << 4,
  kR = 1u << 5,
  kS = 1u << 6,
  kKappa = 1u << 7,
  kK = 1u << 8,
  kSuite = 1u << 9,
  kExtended = 1u << 10,
};

void add_options(CLI::App* sub, Flags& f, unsigned which) {
  sub->add_option("--config", f.config, "JSON config file; flags override its values");
  sub->add_option("--format", f.format, "Output format: tsv (default) or json");
  sub->add_option("-o,--output", f.output, "Write the report to this file instead of stdout");
  if (which & kOperator)
    sub->add_option("--operator", f.op, "quintic, simplicial:n, hyperoctahedral:n, diagonal4, or a JSON file");
  if (which & kFamily) {
    sub->add_option("--family", f.family, "simplicial, hyperoctahedral, or a custom-family JSON file");
    sub->add_option("-n,--dim", f.n, "Dimension n of a builtin family");
  }
  if (which & kPrimes) sub->add_option("--primes,--check-primes", f.primes, "Comma-separated odd primes");
  if (which & kN) sub->add_option("-N,--precision", f.N, "p-adic precision N");
  if (which & kM) sub->add_option("-M,--truncation", f.M, "Series truncation: work modulo t^M");
  if (which & kR) sub->add_option("--terms", f.R, "Number R of instanton numbers");
  if (which & kS) sub->add_option("--power", f.s, "Normalization power s in a_r = kappa A_r / r^s (2 or 3)");
  if (which & kKappa) sub->add_option("--kappa", f.kappa, "Normalization constant kappa (exact rational)");
  if (which & kK) sub->add_option("-k,--level", f.k, "Highest Hasse-Witt level k (default n)");
  if (which & kSuite) sub->add_option("--suite", f.suite, "smoke, quintic or diagonal");
  if (which & kExtended) sub->add_flag("--extended", f.extended, "Enable the long-running dimension-4 tiers");
}

RunConfig from_flags(const Flags& f) {
  RunConfig c;
  c.op = f.op;
  c.family = f.family;
  c.n = f.n;
  if (f.primes) c.primes = parse_prime_list(*f.primes);
  c.N = f.N;
  c.M = f.M;
  c.R = f.R;
  c.k = f.k;
  c.s = f.s;
  c.kappa = f.kappa;
  c.suite = f.suite;
  if (f.format) c.format = parse_format(*f.format);
  c.output = f.output;
  if (f.extended) c.extended = true;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyint: p-adic integrality computations for Calabi-Yau families"};
  app.require_subcommand(1, 1);
  Flags f;
  const unsigned op_common = kOperator | kM;
  struct Sub {
    const char* name;
    const char* help;
    unsigned opts;
  };
  const Sub subs[] = {
      {"frobenius-basis", "Normalized Frobenius solution basis of an operator", op_common},
      {"mirror", "Mirror map, its inverse and the Yukawa coupling", op_common},
      {"instantons", "Instanton numbers with per-prime integrality verdicts", kOperator | kR | kS | kKappa | kPrimes | kN},
      {"check", "Mirror-map integrality and the Dieudonne-Dwork criterion", op_common | kPrimes},
      {"hasse-witt", "Hasse-Witt matrices, determinants and face blocks", kFamily | kPrimes | kM | kK},
      {"frobenius-structure", "Frobenius structure constants alpha_i", kFamily | kPrimes | kN | kM | kExtended},
      {"derive-pf", "Derive the Picard-Fuchs operator of a builtin family", kFamily | kM},
      {"verify", "Run a bundled verification suite", kSuite | kExtended},
  };
  for (const Sub& s : subs) add_options(app.add_subcommand(s.name, s.help), f, s.opts);

  RunConfig cfg;
  try {
    app.parse(argc, argv);
    if (f.config) cfg = load_config_file(*f.config);
    const std::string chosen = app.get_subcommands().front()->get_name();
    if (cfg.command && to_string(*cfg.command) != chosen)
      throw ConfigError("config command '" + std::string(to_string(*cfg.command)) + "' differs from '" + chosen + "'");
    cfg.overlay(from_flags(f));
    cfg.command = parse_command(chosen);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    std::cerr << "cyint: configuration error: " << e.what() << "\n";
    return 2;
  }

  RunOutcome out = run(cfg, &std::cerr);
  if (out.exit_code == 2) {
    std::cerr << "cyint: configuration error: " << out.error << "\n";
    return 2;
  }
  if (!out.error.empty()) std::cerr << "cyint: " << out.error << "\n";
  if (!out.text.empty()) {
    if (cfg.output) {
      std::ofstream file(*cfg.output, std::ios::binary);
      if (!file) {
        std::cerr << "cyint: configuration error: cannot write '" << *cfg.output << "'\n";
        return 2;
      }
      file << out.text;
    } else {
      std::cout << out.text;
    }
  }
  return out.exit_code;
}
