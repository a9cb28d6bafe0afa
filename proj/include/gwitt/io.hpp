#pragma once

// JSON encoding of diagrams, classes, maps and verification reports.
// Keys keep insertion order so output is byte-stable.

#include <json.hpp>

#include "gwitt/diagram.hpp"
#include "gwitt/grassmann_witt.hpp"
#include "gwitt/picard.hpp"
#include "gwitt/witt_modules.hpp"

namespace gwitt::io {

using Json = nlohmann::ordered_json;

Json to_json(const FramedDiagram& diagram);
/// Throws std::invalid_argument on malformed input or an invalid diagram.
FramedDiagram diagram_from_json(const Json& j);

Json to_json(const PicClass& cls);
Json to_json(const PicClassMod2& cls);
PicClass pic_class_from_json(const Json& j);

Json to_json(const JumpTuples& tuples);
Json to_json(const GradedDegree& degree);
Json to_json(const BasisElement& element);
Json to_json(const BasisMap& map);

Json to_json(const ExactnessReport& report);
Json to_json(const DegreeTransportReport& report);
Json to_json(const DualityReport& report);
Json to_json(const InductionCertificate& cert);

Json table_json(int d, int e, bool trivial_base, const RankTable& table);

}  // namespace gwitt::io
