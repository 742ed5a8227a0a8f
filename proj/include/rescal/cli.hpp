#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rescal/geometry.hpp"
#include "rescal/malcev.hpp"
#include "rescal/quillen.hpp"

namespace rescal::cli {

using Json = nlohmann::json;

// Exit codes: 0 success, 2 schema error, 3 mathematical error.
struct Outcome {
  int exit_code = 0;
  Json report;
  std::string table;  // human-readable rendering
};

struct Options {
  int truncate = 12;
  int k = 1;
  int p_max = 4;
  int weight_max = 6;
  std::string mode = "all";  // koszul-test: series | quillen | ce | all
  std::string format = "json";
};

const std::vector<std::string>& command_names();

// Dispatch one problem. The payload is the command-specific JSON object.
Outcome run_problem(const std::string& command, const Json& payload, const Options& opt);

// Serialization helpers shared with the test-suite.
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json series_json(const PowerSeries& s);
PowerSeries series_from_json(const Json& j, int order);
Json dims_json(const GradedLieDims& d);
Json rank_table_json(const RankTable& t);
Json tensor_json(const TensorElement& e);
AlgebraPresentation algebra_from_json(const Json& j, int N);
WeightedLinkingGraph link_from_json(const Json& j);
ArrangementSpec arrangement_from_json(const Json& j);

// Canonical serialization used everywhere (sorted keys, 2-space indent).
std::string dump_report(const Json& j);

struct BundledExample {
  std::string name;
  std::string command;
  Options options;
  Json payload;
};
std::vector<BundledExample> bundled_examples();
Outcome run_bundled(const std::string& name);

}  // namespace rescal::cli
