#include <bzeta/cli/commands.hpp>

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted.store(true); }

struct Flags {
  std::string s = "2";
  std::string method;
  std::string format = "text";
  std::string out;
  std::string constant;
  double tolerance = 0.0;
  std::size_t depth = 0;
  std::size_t truncation = 0;
  bool no_timing = false;
};

void add_series_options(CLI::App* sub, bzeta::cli::RunConfiguration& c, Flags& f) {
  sub->add_option("--weight", c.weight, "preset (trivial, alternating, mod4) or weight JSON file");
  sub->add_option("--s", f.s, "complex exponent, re[+imi]");
  sub->add_option("--n0", c.n0, "first schedule point");
  sub->add_option("--factor", c.factor, "schedule ratio");
  sub->add_option("--count", c.count, "number of schedule points");
  sub->add_option("--precision", c.precision_bits, "precision in bits");
  sub->add_option("--order", c.order, "extrapolation order");
  sub->add_option("--method", f.method, "polynomial or asymptotic");
  sub->add_option("--tolerance", f.tolerance, "exit 4 when the error estimate exceeds this");
  sub->add_option("--threads", c.threads, "worker threads for schedule points (0 = all cores)");
  sub->add_flag("--no-timing", f.no_timing, "report elapsed_ms as 0 for reproducible output");
}

void add_output_options(CLI::App* sub, Flags& f) {
  sub->add_option("--format", f.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", f.out, "write the full report to this path");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace bzeta::cli;

  CLI::App app{"Bailey pairs, Bailey-Zeta pairs and the two-step limit to L(s,chi)/sqrt(pi)"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  RunConfiguration c;
  Flags f;
  std::string config_path;
  bool print_config = false;
  app.add_option("--config", config_path, "run a RunConfiguration JSON file");
  app.add_flag("--print-config", print_config, "print the parsed configuration as JSON and exit");

  auto* verify = app.add_subcommand("pair-verify", "verify a pair definition file");
  auto* chain = app.add_subcommand("pair-chain", "apply chain steps, then verify");
  for (auto* sub : {verify, chain}) {
    sub->add_option("definition", c.definition, "pair definition file")->required();
    sub->add_option("--depth", f.depth, "largest n checked");
    sub->add_option("--order", f.truncation, "truncation order in q");
    add_output_options(sub, f);
  }
  chain->add_option("--rho1", c.rho1, "chain parameter rho1 (monomial)");
  chain->add_option("--rho2", c.rho2, "chain parameter rho2 (monomial)");
  chain->add_option("--steps", c.steps, "number of chain steps");

  auto* lvalue = app.add_subcommand("lvalue", "extrapolate A_n to L(s,chi)/sqrt(pi)");
  auto* table = app.add_subcommand("table", "stream A_n over the schedule");
  auto* constant = app.add_subcommand("constant", "named constants: catalan, gamma, zeta2, beta4");
  constant->add_option("name", f.constant, "catalan, gamma, zeta2 or beta4")
      ->required()
      ->check(CLI::IsMember({"catalan", "gamma", "zeta2", "beta4"}));
  for (auto* sub : {lvalue, table, constant}) {
    add_series_options(sub, c, f);
    add_output_options(sub, f);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw UsageError("cannot open configuration '" + config_path + "'");
      c = config_from_json(nlohmann::json::parse(in));
    } else {
      auto* chosen = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
      if (chosen == nullptr) {
        std::cerr << app.help();
        return kExitUsage;
      }
      c.command = parse_command(chosen->get_name());
      auto given = [chosen](const char* name) {
        const auto* opt = chosen->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
      };
      c.s = f.s;
      c.format = parse_format(f.format);
      if (!f.out.empty()) c.out = f.out;
      if (!f.method.empty()) c.method = bzeta::limits::parse_extrapolation_method(f.method);
      if (!f.constant.empty()) c.constant = parse_constant(f.constant);
      if (given("--tolerance")) c.tolerance = f.tolerance;
      if (given("--depth")) c.depth = f.depth;
      if (given("--order") &&
          (c.command == Command::pair_verify || c.command == Command::pair_chain)) {
        c.truncation = f.truncation;
      }
      c.timing = !f.no_timing;
    }
    if (print_config) {
      std::cout << to_json(c).dump(2) << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  struct sigaction action {};
  action.sa_handler = on_sigint;
  sigemptyset(&action.sa_mask);
  sigaction(SIGINT, &action, nullptr);

  const int status = run(c, std::cout, std::cerr, &g_interrupted);
  std::cout.flush();
  return g_interrupted.load() && status != kExitUsage ? kExitInterrupted : status;
}
