#include "rphouse/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rphouse/assignment.hpp"
#include "rphouse/consistency.hpp"
#include "rphouse/housing.hpp"
#include "rphouse/indices.hpp"
#include "rphouse/lp.hpp"
#include "rphouse/rationalize.hpp"

namespace rphouse::cli {

namespace {

using nlohmann::ordered_json;

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      out.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return out;
}

double parse_number(const std::string& token, const std::string& where) {
  const std::string t = trim(token);
  double value = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || t.empty()) {
    throw InputError(where + ": cannot parse '" + token + "'");
  }
  if (!std::isfinite(value)) throw InputError(where + ": value must be finite");
  return value;
}

// --- JSON output ------------------------------------------------------------
// Numbers are printed with a fixed number of significant digits so output is
// stable across runs and platforms.

void write_double(std::ostream& os, double x, int digits) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  os << buf;
}

void write_json(std::ostream& os, const ordered_json& j, int digits) {
  switch (j.type()) {
    case nlohmann::detail::value_t::object: {
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        os << ordered_json(it.key()).dump() << ':';
        write_json(os, it.value(), digits);
      }
      os << '}';
      break;
    }
    case nlohmann::detail::value_t::array: {
      os << '[';
      for (size_t k = 0; k < j.size(); ++k) {
        if (k) os << ',';
        write_json(os, j[k], digits);
      }
      os << ']';
      break;
    }
    case nlohmann::detail::value_t::string:
      os << j.dump();
      break;
    case nlohmann::detail::value_t::boolean:
      os << (j.get<bool>() ? "true" : "false");
      break;
    case nlohmann::detail::value_t::number_integer:
      os << j.get<long long>();
      break;
    case nlohmann::detail::value_t::number_unsigned:
      os << j.get<unsigned long long>();
      break;
    case nlohmann::detail::value_t::number_float:
      write_double(os, j.get<double>(), digits);
      break;
    default:
      os << "null";
      break;
  }
}

ordered_json doubles_array(const std::vector<double>& xs) {
  ordered_json arr = ordered_json::array();
  for (double x : xs) arr.push_back(x);
  return arr;
}

ordered_json ints_array(const std::vector<int>& xs) {
  ordered_json arr = ordered_json::array();
  for (int x : xs) arr.push_back(x);
  return arr;
}

std::string format_full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// --- input loading ----------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Loaded {
  std::optional<DemandDataset> ds;
  std::optional<CostMatrix> cost;
  std::optional<RMatrix> r;
};

Loaded load_input(const RunConfig& config) {
  const std::string text = read_file(config.input_path);
  const SignTolerance tol{config.tol};
  Loaded loaded;
  switch (config.kind) {
    case InputKind::DemandCsv:
      loaded.ds = parse_demand_csv(text);
      loaded.r = r_from_demand(*loaded.ds);
      break;
    case InputKind::RJson:
      loaded.r = parse_r_json(text, tol);
      break;
    case InputKind::CostJson:
      loaded.cost = parse_cost_json(text);
      loaded.r = r_from_costs(*loaded.cost);
      break;
  }
  return loaded;
}

const CostMatrix& require_cost(const Loaded& loaded) {
  if (!loaded.cost) throw InputError("this command requires --kind cost-json");
  return *loaded.cost;
}

ordered_json cycle_json(const Cycle& cycle) { return ints_array(cycle.one_based()); }

// Re-scores the witnesses in a report so downstream tools need not trust the
// solver: each weighted index must match its own inner minimum and the
// bottleneck value must match its permutation.
bool report_verified(const RMatrix& r, const IndexReport& report) {
  const int n = r.size();
  auto inner_min = [&](const SimplexWeights& lambda) {
    std::vector<double> scaled(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) scaled[static_cast<size_t>(i) * n + j] = lambda[i] * r(i, j);
    }
    return min_cost_assignment(CostMatrix(n, std::move(scaled))).value;
  };
  const double tol = 1e-6;
  if (std::fabs(inner_min(report.lambda_a) - report.a) > tol) return false;
  if (inner_min(report.lambda_a_star) < report.a_star - tol) return false;
  for (int i = 0; i < n; ++i) {
    if (report.lambda_a_star[i] < report.epsilon - 1e-9) return false;
  }
  double row_max = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) row_max = std::max(row_max, r(i, report.sigma_b(i)));
  if (std::fabs(row_max - report.b) > 1e-9) return false;
  double g_score = 0.0;
  for (int i = 0; i < n; ++i) g_score += report.lambda_g[i] * r(i, report.sigma_g(i));
  if (g_score < report.g - tol) return false;
  return true;
}

// --- command handlers -------------------------------------------------------

struct Result {
  ordered_json doc;
  int code = kExitHolds;
};

Result run_rp_check(const RMatrix& r, SignTolerance tol) {
  ConsistencyVerdict verdict = check_cyclical_consistency(r, tol);
  ordered_json doc;
  if (verdict.consistent()) {
    doc["verdict"] = "consistent";
    return {doc, kExitHolds};
  }
  doc["verdict"] = "violation";
  doc["cycle"] = cycle_json(*verdict.violation);
  return {doc, kExitFails};
}

Result run_rp_certify(const RMatrix& r, SignTolerance tol) {
  CertificateSearch search = find_certificate(r, tol);
  ordered_json doc;
  if (!search.found()) {
    doc["found"] = false;
    doc["violation"] = ordered_json{{"cycle", cycle_json(*search.violation)}};
    return {doc, kExitFails};
  }
  doc["found"] = true;
  doc["certificate"] =
      ordered_json{{"v", doubles_array(search.certificate->v)},
                   {"lambda", doubles_array(search.certificate->lambda)}};
  doc["verified"] = verify_certificate(r, *search.certificate, tol);
  return {doc, kExitHolds};
}

Result run_rp_indices(const RMatrix& r, const RunConfig& config) {
  IndexReport report = full_report(r, config.eps, SignTolerance{config.tol});
  ordered_json witnesses;
  witnesses["lambda_a_star"] = doubles_array(report.lambda_a_star.values());
  witnesses["lambda_a"] = doubles_array(report.lambda_a.values());
  witnesses["sigma_b"] = ints_array(report.sigma_b.one_based());
  witnesses["lambda_g"] = doubles_array(report.lambda_g.values());
  witnesses["sigma_g"] = ints_array(report.sigma_g.one_based());
  ordered_json doc;
  doc["report"] = ordered_json{{"a_star", report.a_star}, {"a", report.a},
                               {"b", report.b},           {"g", report.g},
                               {"epsilon", report.epsilon}, {"witnesses", witnesses}};
  doc["verified"] = report_verified(r, report);
  return {doc, kExitHolds};
}

Result run_rp_afriat_index(const Loaded& loaded, const RunConfig& config) {
  const RMatrix& r = *loaded.r;
  std::vector<double> b;
  if (config.budgets) {
    b = *config.budgets;
  } else if (loaded.ds) {
    for (int i = 0; i < loaded.ds->n(); ++i) {
      const double e = loaded.ds->own_expenditure(i);
      if (!(e > 0.0)) {
        throw InputError("observation " + std::to_string(i + 1) +
                         " has zero expenditure; supply --b explicitly");
      }
      b.push_back(e);
    }
  } else {
    throw InputError("afriat-index on a raw matrix requires --b");
  }
  EfficiencyIndexResult result = afriat_efficiency_index(r, b, SignTolerance{config.tol});
  ordered_json doc;
  doc["e"] = result.e;
  if (result.breakpoint) {
    doc["breakpoint"] = ints_array({result.breakpoint->first + 1, result.breakpoint->second + 1});
  } else {
    doc["breakpoint"] = nullptr;
  }
  return {doc, kExitHolds};
}

Result run_rp_utility_eval(const Loaded& loaded, const RunConfig& config) {
  if (!loaded.ds) throw InputError("utility-eval requires --kind demand-csv");
  if (!config.bundle) throw InputError("utility-eval requires --at x1,...,xL");
  const SignTolerance tol{config.tol};
  CertificateSearch search = find_certificate(*loaded.r, tol);
  ordered_json doc;
  if (!search.found()) {
    doc["rationalizable"] = false;
    doc["violation"] = ordered_json{{"cycle", cycle_json(*search.violation)}};
    return {doc, kExitFails};
  }
  const double value = afriat_utility(*loaded.ds, *search.certificate, *config.bundle);
  doc["rationalizable"] = true;
  doc["value"] = value;
  return {doc, kExitHolds};
}

Result run_housing_pareto(const Loaded& loaded, const RunConfig& config) {
  const CostMatrix& c = require_cost(loaded);
  Allocation sigma = Allocation::identity(c.size());
  if (config.sigma) {
    std::vector<int> zero_based;
    for (int v : *config.sigma) zero_based.push_back(v - 1);
    sigma = Allocation(std::move(zero_based));
  }
  ParetoVerdict verdict = is_pareto(c, sigma, SignTolerance{config.tol});
  ordered_json doc;
  if (verdict.efficient()) {
    doc["verdict"] = "efficient";
    return {doc, kExitHolds};
  }
  doc["verdict"] = "blocked";
  doc["cycle"] = cycle_json(*verdict.blocking);
  return {doc, kExitFails};
}

Result run_housing_prices(const Loaded& loaded, const RunConfig& config) {
  const CostMatrix& c = require_cost(loaded);
  const SignTolerance tol{config.tol};
  auto prices = no_trade_prices(c, tol);
  ordered_json doc;
  if (!prices) {
    doc["found"] = false;
    return {doc, kExitFails};
  }
  doc["found"] = true;
  doc["prices"] = doubles_array(prices->pi);
  doc["verified"] = verify_no_trade(c, *prices, tol);
  return {doc, kExitHolds};
}

Result run_housing_ttc(const Loaded& loaded, const RunConfig& config) {
  const CostMatrix& c = require_cost(loaded);
  const SignTolerance tol{config.tol};
  Allocation sigma = top_trading_cycles(c, tol);
  ordered_json doc;
  doc["allocation"] = ints_array(sigma.one_based());
  doc["verified"] = is_pareto(c, sigma, tol).efficient();
  return {doc, kExitHolds};
}

Result run_housing_welfare_gap(const Loaded& loaded, const RunConfig& config) {
  const CostMatrix& c = require_cost(loaded);
  std::optional<SimplexWeights> weights;
  if (config.weights) weights = SimplexWeights(*config.weights);
  const SimplexWeights used = weights ? *weights : SimplexWeights::uniform(c.size());
  ordered_json doc;
  doc["gap"] = welfare_gap(c, used);
  doc["lambda"] = doubles_array(used.values());
  return {doc, kExitHolds};
}

}  // namespace

DemandDataset parse_demand_csv(const std::string& text) {
  std::vector<std::string> lines;
  for (const std::string& raw : split(text, '\n')) {
    if (!trim(raw).empty()) lines.push_back(raw);
  }
  if (lines.empty()) throw InputError("empty input");

  const std::vector<std::string> header = split(lines.front(), ',');
  if (header.size() < 3 || header.size() % 2 == 0) {
    throw InputError("header: expected columns id,p1,...,pL,x1,...,xL");
  }
  const int L = static_cast<int>(header.size()) / 2;
  if (trim(header[0]) != "id") throw InputError("header: first column must be 'id'");
  for (int l = 0; l < L; ++l) {
    const std::string p = "p" + std::to_string(l + 1);
    const std::string x = "x" + std::to_string(l + 1);
    if (trim(header[1 + l]) != p) {
      throw InputError("header: expected column '" + p + "', got '" + trim(header[1 + l]) + "'");
    }
    if (trim(header[1 + L + l]) != x) {
      throw InputError("header: expected column '" + x + "', got '" + trim(header[1 + L + l]) +
                       "'");
    }
  }
  if (lines.size() == 1) throw InputError("no observations");

  std::vector<std::vector<double>> prices;
  std::vector<std::vector<double>> bundles;
  for (size_t row = 1; row < lines.size(); ++row) {
    const std::string where = "row " + std::to_string(row);
    const std::vector<std::string> fields = split(lines[row], ',');
    if (fields.size() != header.size()) {
      throw InputError(where + ": expected " + std::to_string(header.size()) +
                       " columns, got " + std::to_string(fields.size()));
    }
    std::vector<double> p(L), x(L);
    for (int l = 0; l < L; ++l) {
      const std::string pcol = where + ", column p" + std::to_string(l + 1);
      p[l] = parse_number(fields[1 + l], pcol);
      if (!(p[l] > 0.0)) throw InputError(pcol + ": price must be positive");
      const std::string xcol = where + ", column x" + std::to_string(l + 1);
      x[l] = parse_number(fields[1 + L + l], xcol);
      if (x[l] < 0.0) throw InputError(xcol + ": quantity must be nonnegative");
    }
    prices.push_back(std::move(p));
    bundles.push_back(std::move(x));
  }
  return DemandDataset(std::move(prices), std::move(bundles));
}

namespace {

std::vector<double> parse_square_array(const nlohmann::json& j, const std::string& field, int n) {
  const auto& rows = j.at(field);
  if (!rows.is_array() || rows.size() != static_cast<size_t>(n)) {
    throw InputError("field '" + field + "' must be an array of " + std::to_string(n) + " rows");
  }
  std::vector<double> entries;
  entries.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != static_cast<size_t>(n)) {
      throw InputError("row " + std::to_string(i + 1) + " of '" + field + "' must have " +
                       std::to_string(n) + " entries");
    }
    for (int k = 0; k < n; ++k) {
      if (!row[k].is_number()) {
        throw InputError("entry (" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                         ") of '" + field + "' must be a finite number");
      }
      entries.push_back(row[k].get<double>());
    }
  }
  return entries;
}

nlohmann::json parse_json_object(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("matrix JSON: expected an object");
  if (!j.contains("n") || !j.at("n").is_number_integer() || j.at("n").get<long long>() < 1) {
    throw InputError("matrix JSON: field 'n' must be a positive integer");
  }
  return j;
}

}  // namespace

RMatrix parse_r_json(const std::string& text, SignTolerance tol) {
  const nlohmann::json j = parse_json_object(text);
  const int n = j.at("n").get<int>();
  if (!j.contains("R")) throw InputError("matrix JSON: missing field 'R'");
  std::vector<double> entries = parse_square_array(j, "R", n);
  for (int i = 0; i < n; ++i) {
    double& d = entries[static_cast<size_t>(i) * n + i];
    if (std::fabs(d) > tol.tau) {
      throw InputError("diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
                       ") must be zero within tolerance");
    }
    d = 0.0;
  }
  return RMatrix(n, std::move(entries));
}

CostMatrix parse_cost_json(const std::string& text) {
  const nlohmann::json j = parse_json_object(text);
  const int n = j.at("n").get<int>();
  if (!j.contains("c")) throw InputError("matrix JSON: missing field 'c'");
  return CostMatrix(n, parse_square_array(j, "c", n));
}

std::variant<RMatrix, CostMatrix> parse_matrix_json(const std::string& text, InputKind kind,
                                                    SignTolerance tol) {
  switch (kind) {
    case InputKind::RJson:
      return parse_r_json(text, tol);
    case InputKind::CostJson:
      return parse_cost_json(text);
    default:
      throw InputError("parse_matrix_json: kind must be r-json or cost-json");
  }
}

std::string to_csv(const DemandDataset& ds) {
  std::ostringstream out;
  out << "id";
  for (int l = 1; l <= ds.goods(); ++l) out << ",p" << l;
  for (int l = 1; l <= ds.goods(); ++l) out << ",x" << l;
  out << '\n';
  for (int i = 0; i < ds.n(); ++i) {
    out << (i + 1);
    for (double p : ds.price(i)) out << ',' << format_full(p);
    for (double x : ds.bundle(i)) out << ',' << format_full(x);
    out << '\n';
  }
  return out.str();
}

namespace {

std::string matrix_json_text(const char* field, int n, const std::vector<double>& entries) {
  std::ostringstream out;
  out << "{\"n\":" << n << ",\"" << field << "\":[";
  for (int i = 0; i < n; ++i) {
    if (i) out << ',';
    out << '[';
    for (int j = 0; j < n; ++j) {
      if (j) out << ',';
      out << format_full(entries[static_cast<size_t>(i) * n + j]);
    }
    out << ']';
  }
  out << "]}";
  return out.str();
}

}  // namespace

std::string to_r_json(const RMatrix& r) { return matrix_json_text("R", r.size(), r.entries()); }

std::string to_cost_json(const CostMatrix& c) {
  return matrix_json_text("c", c.size(), c.entries());
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.tol < 0.0 || !std::isfinite(config.tol)) {
      throw InputError("--tol must be a nonnegative real");
    }
    const Loaded loaded = load_input(config);
    if (config.verbosity > 0) {
      err << "input: " << config.input_path << " (n=" << loaded.r->size() << ")\n";
    }
    const SignTolerance tol{config.tol};
    Result result;
    switch (config.command) {
      case Command::RpCheck:
        result = run_rp_check(*loaded.r, tol);
        break;
      case Command::RpCertify:
        result = run_rp_certify(*loaded.r, tol);
        break;
      case Command::RpIndices:
        result = run_rp_indices(*loaded.r, config);
        break;
      case Command::RpAfriatIndex:
        result = run_rp_afriat_index(loaded, config);
        break;
      case Command::RpUtilityEval:
        result = run_rp_utility_eval(loaded, config);
        break;
      case Command::HousingPareto:
        result = run_housing_pareto(loaded, config);
        break;
      case Command::HousingPrices:
        result = run_housing_prices(loaded, config);
        break;
      case Command::HousingTtc:
        result = run_housing_ttc(loaded, config);
        break;
      case Command::HousingWelfareGap:
        result = run_housing_welfare_gap(loaded, config);
        break;
    }
    write_json(out, result.doc, 12);
    out << '\n';
    return result.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace rphouse::cli
