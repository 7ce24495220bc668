// report_io.hpp — JSON serialization for protocol reports (schemas live in
// docs/schema/).

#pragma once

#include <json.hpp>

#include "qcat/catengine.hpp"
#include "qcat/gencat.hpp"
#include "qcat/smallcat.hpp"
#include "qcat/teleporter.hpp"

namespace qcat {

nlohmann::json to_json(const DensityMatrix& rho);
nlohmann::json to_json(const ProtocolReport& rep);
nlohmann::json to_json(const SmallCatReport& rep);
nlohmann::json to_json(const WorkReport& rep);
nlohmann::json to_json(const McEstimate& est);

} // namespace qcat
