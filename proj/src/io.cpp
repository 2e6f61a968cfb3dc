#include "extendkit/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace extendkit {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string where(const std::string& name, std::size_t line) {
  return name + ":" + std::to_string(line) + ": ";
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_number(const std::string& field, const std::string& name, std::size_t line,
                    std::size_t column) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = first + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last || field.empty()) {
    throw InputError(where(name, line) + "column " + std::to_string(column + 1) +
                     ": not a number: '" + field + "'");
  }
  if (!std::isfinite(v)) {
    throw InputError(where(name, line) + "column " + std::to_string(column + 1) +
                     ": value is not finite");
  }
  return v;
}

bool blank(const std::string& line) { return trim(line).empty(); }

// Header columns must be x1..xd, optionally followed by `value`.
std::size_t check_header(const std::vector<std::string>& cols, bool with_value,
                         const std::string& name) {
  const std::size_t d = cols.size() - (with_value ? 1 : 0);
  if (cols.size() < (with_value ? 2u : 1u)) {
    throw InputError(where(name, 1) + "header needs x1..xd" + (with_value ? ",value" : ""));
  }
  for (std::size_t k = 0; k < d; ++k) {
    if (cols[k] != "x" + std::to_string(k + 1)) {
      throw InputError(where(name, 1) + "expected column 'x" + std::to_string(k + 1) +
                       "', found '" + cols[k] + "'");
    }
  }
  if (with_value && cols.back() != "value") {
    throw InputError(where(name, 1) + "last column must be 'value', found '" + cols.back() + "'");
  }
  return d;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

}  // namespace

Sample parse_sample_csv(std::istream& in, const std::string& name,
                        std::optional<MetricKind> metric) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!blank(line)) break;
  }
  if (blank(line)) throw InputError(name + ": empty set file");
  const std::size_t d = check_header(split(line), true, name);

  std::vector<Point> pts;
  std::vector<double> values;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    const auto fields = split(line);
    if (fields.size() != d + 1) {
      throw InputError(where(name, lineno) + "expected " + std::to_string(d + 1) +
                       " fields, found " + std::to_string(fields.size()));
    }
    std::vector<double> c(d);
    for (std::size_t k = 0; k < d; ++k) c[k] = parse_number(fields[k], name, lineno, k);
    values.push_back(parse_number(fields[d], name, lineno, d));
    pts.emplace_back(std::move(c));
  }
  if (pts.empty()) throw InputError(name + ": the set has no points");

  MetricKind kind = metric.value_or(d == 1 ? MetricKind::real_line : MetricKind::euclidean);
  MetricOracle oracle;
  switch (kind) {
    case MetricKind::euclidean: oracle = MetricOracle::euclidean(); break;
    case MetricKind::real_line: oracle = MetricOracle::real_line(); break;
    case MetricKind::distance_matrix:
      throw InputError("distance-matrix sets are read from JSON, not CSV");
  }
  Sample s;
  try {
    s.set = PointCloudSet::create(std::move(pts), oracle);
  } catch (const InputError& e) {
    throw InputError(name + ": " + e.what());
  }
  s.phi.emplace(s.set, std::move(values));
  return s;
}

Sample read_sample_csv(const std::string& path, std::optional<MetricKind> metric) {
  std::ifstream in = open(path);
  return parse_sample_csv(in, path, metric);
}

std::vector<Point> parse_queries_csv(std::istream& in, const std::string& name,
                                     std::size_t dimension) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!blank(line)) break;
  }
  std::vector<Point> out;
  if (blank(line)) return out;
  const std::size_t d = check_header(split(line), false, name);
  if (d != dimension) {
    throw InputError(where(name, lineno) + "queries have dimension " + std::to_string(d) +
                     " but the set has dimension " + std::to_string(dimension));
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    const auto fields = split(line);
    if (fields.size() != d) {
      throw InputError(where(name, lineno) + "expected " + std::to_string(d) + " fields, found " +
                       std::to_string(fields.size()));
    }
    std::vector<double> c(d);
    for (std::size_t k = 0; k < d; ++k) c[k] = parse_number(fields[k], name, lineno, k);
    out.emplace_back(std::move(c));
  }
  return out;
}

std::vector<Point> read_queries_csv(const std::string& path, std::size_t dimension) {
  std::ifstream in = open(path);
  return parse_queries_csv(in, path, dimension);
}

namespace {

MatrixSample matrix_sample(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("matrix") || !j.contains("values")) {
    throw InputError("matrix file needs keys n, matrix and values");
  }
  const auto n = j.at("n").get<std::size_t>();
  if (n == 0) throw InputError("matrix size n must be > 0");
  std::vector<double> flat;
  const auto& m = j.at("matrix");
  if (!m.is_array()) throw InputError("matrix must be an array");
  if (!m.empty() && m.front().is_array()) {
    if (m.size() != n) throw InputError("matrix must have n rows");
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != n) throw InputError("every matrix row needs n entries");
      for (const auto& v : row) flat.push_back(v.get<double>());
    }
  } else {
    if (m.size() != n * n) throw InputError("flat matrix must have n*n entries");
    for (const auto& v : m) flat.push_back(v.get<double>());
  }
  const auto& vals = j.at("values");
  if (!vals.is_array() || vals.size() != n) throw InputError("values must have n entries");

  MetricOracle metric = MetricOracle::distance_matrix(n, std::move(flat));
  std::vector<Point> pts;
  std::vector<double> phi;
  MatrixSample out;
  for (std::size_t i = 0; i < n; ++i) {
    const Point p = Point::scalar(static_cast<double>(i));
    if (vals[i].is_null()) {
      out.outside.push_back(p);
    } else {
      pts.push_back(p);
      phi.push_back(vals[i].get<double>());
    }
  }
  if (pts.empty()) throw InputError("every value is null; the set is empty");
  out.sample.set = PointCloudSet::create(std::move(pts), std::move(metric));
  out.sample.phi.emplace(out.sample.set, std::move(phi));
  return out;
}

}  // namespace

MatrixSample parse_matrix_json(const nlohmann::json& j) {
  try {
    return matrix_sample(j);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(e.what());
  }
}

MatrixSample read_matrix_json(const std::string& path) {
  std::ifstream in = open(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  try {
    return parse_matrix_json(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_values_csv(std::ostream& out, std::span<const Point> queries,
                      std::span<const double> values, std::size_t dimension) {
  std::size_t d = queries.empty() ? dimension : queries.front().dimension();
  if (d == 0) d = 1;
  for (std::size_t k = 0; k < d; ++k) out << 'x' << k + 1 << ',';
  out << "value\n";
  for (std::size_t i = 0; i < queries.size(); ++i) {
    for (double c : queries[i].coords()) out << format_double(c) << ',';
    out << format_double(values[i]) << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "," : "") << header[k];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << format_double(row[k]);
    out << '\n';
  }
}

nlohmann::json to_json(const ModulusTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) rows.push_back({{"delta", r.delta}, {"omega", r.omega}});
  return {{"pairs", t.pairs}, {"lipschitz_estimate", t.lipschitz_estimate}, {"rows", rows}};
}

nlohmann::json to_json(const ExtenderReport& r) {
  nlohmann::json vanishing = nlohmann::json::array();
  for (const auto& v : r.vanishing) {
    vanishing.push_back({{"s", v.s}, {"residual", v.residual}, {"monotone", v.monotone}});
  }
  return {
      {"extender", r.extender},
      {"tau", r.tau},
      {"grid", r.grid_n},
      {"verdict", r.passed() ? "pass" : "fail"},
      {"limits",
       {{"pass", r.axiom_limits},
        {"tolerance", r.limit_tolerance},
        {"diagonal_residual", r.diagonal_residual},
        {"diagonal_monotone", r.diagonal_monotone},
        {"vanishing", vanishing}}},
      {"monotone_and_range",
       {{"pass", r.axiom_monotone},
        {"grid_points", r.grid_points},
        {"monotonicity_violations", r.monotonicity_violations},
        {"range_violations", r.range_violations},
        {"clamped", r.clamped}}},
      {"continuity", {{"pass", r.axiom_continuity}, {"modulus", to_json(r.modulus)}}},
  };
}

}  // namespace extendkit
