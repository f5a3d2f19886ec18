#include "sarkisov/json_io.hpp"

#include "sarkisov/parse.hpp"

namespace sarkisov {

using nlohmann::json;

json intersection_json(const IntersectionData& d) {
  json j;
  if (d.rank_one) {
    j["rank_one"] = true;
    if (d.minus_k_degree_of_line)
      j["minus_k_degree_of_line"] = *d.minus_k_degree_of_line;
    return j;
  }
  j["rank_one"] = false;
  j["divisors"] = d.divisor_labels;
  j["curves"] = d.curve_labels;
  j["pairing"] = d.pairing;
  j["canonical"] = d.canonical;
  j["ne_generators"] = d.ne_generators;
  json kdeg = json::object();
  for (const auto& c : d.curve_labels) kdeg[c] = k_dot(d, c);
  j["k_degrees"] = kdeg;
  return j;
}

json space_report_json(const MoriFibreSpace& s) {
  json j;
  j["space"] = render_space(s);
  ValidationResult v = validate(s);
  j["valid"] = v.ok;
  if (!v.ok) {
    j["violations"] = v.violations;
    return j;
  }
  if (v.q_not_mori_fibration) j["mori_fibration"] = false;
  MoriFibreSpace n = normalize(s);
  j["normalized"] = render_space(n);

  if (s.family == Family::Q && v.q_not_mori_fibration) return j;

  MaximalityVerdict verdict = is_maximal(n);
  json m;
  switch (verdict.status) {
    case Maximality::Maximal: m["status"] = "Maximal"; break;
    case Maximality::NotMaximal: m["status"] = "NotMaximal"; break;
    case Maximality::UnknownFano: m["status"] = "UnknownFano"; break;
  }
  if (!verdict.provenance.empty()) m["provenance"] = verdict.provenance;
  if (verdict.witness) {
    m["witness"] = {{"target", render_space(verdict.witness->target)},
                    {"description", verdict.witness->description}};
  }
  j["maximality"] = m;

  AutInfo aut = aut_info(n);
  json a;
  if (aut.dimension) a["dimension"] = *aut.dimension;
  else a["dimension"] = nullptr;
  a["description"] = aut.description;
  j["aut"] = a;

  if (auto orbits = orbit_structure(n)) {
    json o;
    if (orbits->count) o["count"] = *orbits->count;
    else o["count"] = nullptr;
    o["labels"] = orbits->labels;
    j["orbits"] = o;
  }

  try {
    if (auto data = intersection_data(n)) j["intersection"] = intersection_json(*data);
  } catch (const space_error&) {
    // Q with square g: no table.
  }
  return j;
}

}  // namespace sarkisov
