// JSON rendering of intersection data and full space reports.
#pragma once

#include <json.hpp>

#include "sarkisov/intersection.hpp"
#include "sarkisov/spaces.hpp"

namespace sarkisov {

nlohmann::json intersection_json(const IntersectionData& data);

// Validity, normal form, maximality with witness, automorphism info, orbit
// structure, and the intersection table where available.
nlohmann::json space_report_json(const MoriFibreSpace& s);

}  // namespace sarkisov
