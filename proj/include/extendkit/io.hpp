#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "extendkit/bounded_function.hpp"
#include "extendkit/extenders.hpp"

namespace extendkit {

// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

struct Sample {
  std::shared_ptr<const PointCloudSet> set;
  std::optional<BoundedFunction> phi;
};

// Set file: header x1,...,xd,value then one row per point. Without an
// explicit metric, d == 1 selects the real line and d > 1 Euclidean.
// Errors carry file:line.
Sample read_sample_csv(const std::string& path, std::optional<MetricKind> metric = {});
Sample parse_sample_csv(std::istream& in, const std::string& name,
                        std::optional<MetricKind> metric = {});

// Query file: header x1,...,xd. An empty file, or a header alone, holds no
// queries.
std::vector<Point> read_queries_csv(const std::string& path, std::size_t dimension);
std::vector<Point> parse_queries_csv(std::istream& in, const std::string& name,
                                     std::size_t dimension);

// {"n": N, "matrix": [[...], ...] or a flat row-major list, "values": [...]}
// where values[i] is null for points outside A. Points are 1-D row indices.
struct MatrixSample {
  Sample sample;
  std::vector<Point> outside;  // row indices whose value is null
};
MatrixSample read_matrix_json(const std::string& path);
MatrixSample parse_matrix_json(const nlohmann::json& j);

// x1,...,xd,value; one row per query in input order.
// `dimension` sizes the header when there are no queries (0 means 1).
void write_values_csv(std::ostream& out, std::span<const Point> queries,
                      std::span<const double> values, std::size_t dimension = 0);

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

nlohmann::json to_json(const ExtenderReport& r);
nlohmann::json to_json(const ModulusTable& t);

}  // namespace extendkit
