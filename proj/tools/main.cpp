// Command-line front end: `rphouse rp ...` for revealed-preference queries,
// `rphouse housing ...` for housing-market audits. One job per invocation,
// JSON on stdout, diagnostics on stderr.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rphouse/cli.hpp"

namespace {

using rphouse::cli::Command;
using rphouse::cli::InputKind;
using rphouse::cli::RunConfig;

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw CLI::ValidationError("expected a comma-separated list of reals, got '" + text + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError("empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_real_list(text)) {
    const int k = static_cast<int>(v);
    if (static_cast<double>(k) != v) {
      throw CLI::ValidationError("expected integers, got '" + text + "'");
    }
    out.push_back(k);
  }
  return out;
}

struct CommonOpts {
  std::string input;
  std::string kind;
  double tol = 1e-9;
  std::optional<double> eps;
  int verbosity = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_eps) {
  cmd->add_option("--input", opts.input, "Input file path")->required();
  cmd->add_option("--kind", opts.kind, "Input kind: demand-csv | r-json | cost-json")->required();
  cmd->add_option("--tol", opts.tol, "Sign-classification tolerance");
  if (with_eps) {
    cmd->add_option_function<double>(
        "--eps", [&opts](double v) { opts.eps = v; }, "Lower bound used for the A* weights");
  }
  cmd->add_flag("-v,--verbose", opts.verbosity, "Print diagnostics on stderr");
}

InputKind kind_from_string(const std::string& kind) {
  if (kind == "demand-csv") return InputKind::DemandCsv;
  if (kind == "r-json") return InputKind::RJson;
  if (kind == "cost-json") return InputKind::CostJson;
  throw CLI::ValidationError("--kind must be demand-csv, r-json or cost-json");
}

RunConfig to_config(Command command, const CommonOpts& opts) {
  RunConfig config;
  config.command = command;
  config.input_path = opts.input;
  config.kind = kind_from_string(opts.kind);
  config.tol = opts.tol;
  config.eps = opts.eps;
  config.verbosity = opts.verbosity;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Revealed-preference and housing-market toolkit"};
  app.require_subcommand(1);

  std::optional<RunConfig> to_run;

  // rp: consistency, certificates, indices of rationalizability
  CLI::App* rp = app.add_subcommand("rp", "Revealed-preference analysis of a matrix or dataset");
  rp->require_subcommand(1);

  CommonOpts check_opts;
  CLI::App* check = rp->add_subcommand("check", "Test cyclical consistency");
  add_common(check, check_opts, false);
  check->callback([&] { to_run = to_config(Command::RpCheck, check_opts); });

  CommonOpts certify_opts;
  CLI::App* certify = rp->add_subcommand("certify", "Find an Afriat certificate");
  add_common(certify, certify_opts, false);
  certify->callback([&] { to_run = to_config(Command::RpCertify, certify_opts); });

  CommonOpts indices_opts;
  CLI::App* indices = rp->add_subcommand("indices", "Compute the indices A*, A, B, G");
  add_common(indices, indices_opts, true);
  indices->callback([&] { to_run = to_config(Command::RpIndices, indices_opts); });

  CommonOpts afriat_opts;
  std::string afriat_b;
  CLI::App* afriat = rp->add_subcommand("afriat-index", "Afriat efficiency index");
  add_common(afriat, afriat_opts, false);
  afriat->add_option("--b", afriat_b, "Positive perturbation vector b1,...,bn");
  afriat->callback([&] {
    RunConfig config = to_config(Command::RpAfriatIndex, afriat_opts);
    if (!afriat_b.empty()) config.budgets = parse_real_list(afriat_b);
    to_run = config;
  });

  CommonOpts utility_opts;
  std::string utility_at;
  CLI::App* utility = rp->add_subcommand("utility-eval", "Evaluate the Afriat utility");
  add_common(utility, utility_opts, false);
  utility->add_option("--at", utility_at, "Bundle x1,...,xL to evaluate")->required();
  utility->callback([&] {
    RunConfig config = to_config(Command::RpUtilityEval, utility_opts);
    config.bundle = parse_real_list(utility_at);
    to_run = config;
  });

  // housing: Pareto audits, equilibrium prices, trading
  CLI::App* housing =
      app.add_subcommand("housing", "Housing-market audits of a cost matrix");
  housing->require_subcommand(1);

  CommonOpts pareto_opts;
  std::string pareto_sigma;
  CLI::App* pareto = housing->add_subcommand("pareto", "Pareto-efficiency audit");
  add_common(pareto, pareto_opts, false);
  pareto->add_option("--sigma", pareto_sigma, "Allocation as a 1-based permutation s1,...,sn");
  pareto->callback([&] {
    RunConfig config = to_config(Command::HousingPareto, pareto_opts);
    if (!pareto_sigma.empty()) config.sigma = parse_int_list(pareto_sigma);
    to_run = config;
  });

  CommonOpts prices_opts;
  CLI::App* prices = housing->add_subcommand("prices", "No-trade equilibrium prices");
  add_common(prices, prices_opts, false);
  prices->callback([&] { to_run = to_config(Command::HousingPrices, prices_opts); });

  CommonOpts ttc_opts;
  CLI::App* ttc = housing->add_subcommand("ttc", "Top-trading-cycles allocation");
  add_common(ttc, ttc_opts, false);
  ttc->callback([&] { to_run = to_config(Command::HousingTtc, ttc_opts); });

  CommonOpts gap_opts;
  std::string gap_lambda;
  CLI::App* gap = housing->add_subcommand("welfare-gap", "Weighted welfare gap");
  add_common(gap, gap_opts, false);
  gap->add_option("--lambda", gap_lambda, "Welfare weights l1,...,ln summing to 1");
  gap->callback([&] {
    RunConfig config = to_config(Command::HousingWelfareGap, gap_opts);
    if (!gap_lambda.empty()) config.weights = parse_real_list(gap_lambda);
    to_run = config;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << "error: " << e.what() << '\n';
    return rphouse::cli::kExitError;
  }

  if (!to_run) {
    std::cerr << "error: no command selected\n";
    return rphouse::cli::kExitError;
  }
  return rphouse::cli::dispatch(*to_run, std::cout, std::cerr);
}
