#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rphouse/model.hpp"

namespace rphouse::cli {

// Exit codes: 0 property holds / object found, 1 property fails / object
// absent, 2 input or convergence error.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitError = 2;

enum class InputKind { DemandCsv, RJson, CostJson };

enum class Command {
  RpCheck,
  RpCertify,
  RpIndices,
  RpAfriatIndex,
  RpUtilityEval,
  HousingPareto,
  HousingPrices,
  HousingTtc,
  HousingWelfareGap,
};

struct RunConfig {
  Command command = Command::RpCheck;
  std::string input_path;
  InputKind kind = InputKind::RJson;
  double tol = 1e-9;
  std::optional<double> eps;
  int verbosity = 0;

  std::optional<std::vector<double>> bundle;   // rp utility-eval --at
  std::optional<std::vector<double>> budgets;  // rp afriat-index --b
  std::optional<std::vector<int>> sigma;       // housing pareto --sigma (1-based)
  std::optional<std::vector<double>> weights;  // housing welfare-gap --lambda
};

// Thrown for malformed inputs; dispatch maps it to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// CSV with header `id,p1,...,pL,x1,...,xL`, one observation per row.
// Errors name the offending row and column.
DemandDataset parse_demand_csv(const std::string& text);

// {"n": N, "R": [[...], ...]}; diagonal entries within tau of zero are
// snapped to exact zero, larger ones are an error.
RMatrix parse_r_json(const std::string& text, SignTolerance tol = {});

// {"n": N, "c": [[...], ...]}.
CostMatrix parse_cost_json(const std::string& text);

std::variant<RMatrix, CostMatrix> parse_matrix_json(const std::string& text, InputKind kind,
                                                    SignTolerance tol = {});

// Serializers for the data formats (full double precision, round-trip safe).
std::string to_csv(const DemandDataset& ds);
std::string to_r_json(const RMatrix& r);
std::string to_cost_json(const CostMatrix& c);

// Runs one command: machine-readable JSON on `out` (12 significant digits,
// stable field order), diagnostics on `err`; returns the exit code.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace rphouse::cli
