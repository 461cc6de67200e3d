#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "projindex/theorems.hpp"

namespace projindex::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { kSuccess = 0, kInputError = 1, kCheckFailed = 2 };

/// A map with its points and optional symmetric-polynomial sources, as read
/// from a job document or assembled from flags.
struct Job {
  std::optional<HomogeneousMap> map;
  std::vector<ProjPoint> points;
  std::optional<std::string> phi;
  std::optional<std::string> psi;
};

/// Parses JSON text, reporting syntax errors as ParseError with line/column.
Json parse_json_text(const std::string& text);

/// {"n": .., "components": [..]}
HomogeneousMap map_from_json(const Json& j);
Json map_to_json(const HomogeneousMap& f);

/// Array of n+1 rational strings (integers are accepted, floats are not).
ProjPoint point_from_json(const Json& j);
Json point_to_json(const ProjPoint& p);

/// Either a bare map object or a job document {"map": .., "points": .., "phi": ..}.
Job job_from_json(const Json& j);

/// "1,0,0;1,1,-1" style point lists.
std::vector<ProjPoint> parse_inline_points(const std::string& text);

Json report_to_json(const VerificationReport& report);
Json census_to_json(const CensusResult& census);
Json example_to_json(const ExampleMap& example);

/// Entry point behind the projindex binary; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace projindex::cli
