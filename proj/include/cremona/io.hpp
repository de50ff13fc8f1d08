#pragma once

#include <json.hpp>

#include <string>

#include "cremona/cells.hpp"
#include "cremona/maps.hpp"
#include "cremona/reduce.hpp"

namespace cremona {

using Json = nlohmann::json;

// Configuration file:
//   { "points": [{"id": str, "parents": [str]}],
//     "curves": [{"degree": int, "mults": {str: int}}] }
// Point order in the file fixes the point id order.
Configuration config_from_json(const Json& j);
Json config_to_json(const Configuration& config);

// Class file: { "degree": "p/q", "mults": {pointId: "p/q"} }
PMClass class_from_json(const Json& j, const Configuration& config);
Json class_to_json(const PMClass& c, const Configuration& config);

// Matrix file:
//   { "d": int, "base": [id], "m": [int], "inv_base": [id],
//     "m_prime": [int], "A": [[int]], "pushforward": {id: id} }
CharMatrix matrix_from_json(const Json& j, const Configuration& config);
Json matrix_to_json(const CharMatrix& M, const Configuration& config);

Json membership_report_to_json(const MembershipReport& report, const Configuration& config);
Json validation_report_to_json(const ValidationReport& report);
Json trace_to_json(const ReductionTrace& trace, const Configuration& config);
Json germs_to_json(const std::vector<GermDescriptor>& germs, const Configuration& config);
Json samples_to_json(const std::vector<SampleReport>& samples, const Configuration& config);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace cremona
