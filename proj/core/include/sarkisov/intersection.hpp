// Intersection tables: named divisor and curve bases, pairing matrices,
// canonical classes, and cone-of-curves generators, per family, with exact
// integer output.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sarkisov/spaces.hpp"

namespace sarkisov {

struct IntersectionData {
  std::vector<std::string> divisor_labels;
  std::vector<std::string> curve_labels;
  // pairing[i][j] = curve_i . divisor_j
  std::vector<std::vector<long long>> pairing;
  // K in the divisor basis
  std::vector<long long> canonical;
  std::vector<std::string> ne_generators;
  // Rank-1 Fano record: no bases, only the anticanonical degree of the
  // generating line where standard.
  bool rank_one = false;
  std::optional<long long> minus_k_degree_of_line;

  int curve_index(const std::string& label) const;
  int divisor_index(const std::string& label) const;
};

// Tables for F, P, U, S, V, R, Q and the rank-1 records for P3 and Q3;
// nullopt (unavailable) for W, P(1,1,1,2), P(1,1,2,3).
// Throws space_error on invalid spaces and on Q with square g.
std::optional<IntersectionData> intersection_data(const MoriFibreSpace& s);

// Integer combinations of basis classes, by label.
using ClassCombo = std::vector<std::pair<std::string, long long>>;

long long pair_classes(const IntersectionData& data, const ClassCombo& curve,
                       const ClassCombo& divisor);
long long k_dot(const IntersectionData& data, const ClassCombo& curve);
long long k_dot(const IntersectionData& data, const std::string& curve_label);

}  // namespace sarkisov
