#include "sarkisov/intersection.hpp"

#include <stdexcept>

namespace sarkisov {

int IntersectionData::curve_index(const std::string& label) const {
  for (size_t i = 0; i < curve_labels.size(); ++i)
    if (curve_labels[i] == label) return static_cast<int>(i);
  throw space_error("unknown curve class: " + label);
}

int IntersectionData::divisor_index(const std::string& label) const {
  for (size_t i = 0; i < divisor_labels.size(); ++i)
    if (divisor_labels[i] == label) return static_cast<int>(i);
  throw space_error("unknown divisor class: " + label);
}

std::optional<IntersectionData> intersection_data(const MoriFibreSpace& s0) {
  MoriFibreSpace s = normalize(s0);
  IntersectionData d;
  switch (s.family) {
    case Family::R: {
      long long m = s.a, n = s.b;
      d.divisor_labels = {"H", "F"};
      d.curve_labels = {"l", "f"};
      d.pairing = {{-m, 1}, {1, 0}};
      d.canonical = {-3, -(2 * m - n + 2)};
      d.ne_generators = {"l", "f"};
      return d;
    }
    case Family::F: {
      long long a = s.a, b = s.b, c = s.c;
      d.divisor_labels = {"Hz0", "Hy0", "Hx0"};
      d.curve_labels = {"l1", "l2", "l3", "l4"};
      d.pairing = {{1, -a, c}, {0, 1, -b}, {0, 0, 1}, {1, -a, 0}};
      d.canonical = {-(a * (b + 1) + 2 - c), -(b + 2), -2};
      d.ne_generators = c <= 0 ? std::vector<std::string>{"l1", "l2", "l3"}
                               : std::vector<std::string>{"l4", "l2", "l3"};
      return d;
    }
    case Family::S: {
      long long b = s.b;
      d.divisor_labels = {"E", "H"};
      d.curve_labels = {"f", "s1", "s2"};
      d.pairing = {{2, 0}, {1 - b, 1}, {b + 3, 1}};
      d.canonical = {-1, -2};
      d.ne_generators = {"s1", "f"};
      return d;
    }
    case Family::U: {
      long long a = s.a, b = s.b, c = s.c;
      long long k = s.k();
      long long lambda = c > 2 ? c : 2;
      d.divisor_labels = {"Hx", "Hy", "Hz"};
      d.curve_labels = {"f", "s", "l00", "l10", "r"};
      d.pairing = {{1, 0, 0},
                   {-b, 1, 0},
                   {lambda, -a, 1},
                   {lambda - c, -a, 1},
                   {lambda - 1, -a, 1}};
      d.canonical = {-2, -(b + 2), -a * (b + 1 - k)};
      d.ne_generators = c > 2 ? std::vector<std::string>{"f", "s", "l10"}
                              : std::vector<std::string>{"f", "s", "r"};
      return d;
    }
    case Family::V: {
      long long b = s.b;
      d.divisor_labels = {"H'", "F'"};
      d.curve_labels = {"f'", "s'"};
      d.pairing = {{1, 0}, {-(b - 1), 1}};
      d.canonical = {-2, -(b + 1)};
      d.ne_generators = {"f'", "s'"};
      return d;
    }
    case Family::P: {
      long long b = s.b;
      d.divisor_labels = {"D", "H"};
      d.curve_labels = {"f", "l"};
      d.pairing = {{1, 0}, {-b, 1}};
      d.canonical = {-2, -(b + 3)};
      d.ne_generators = {"l", "f"};
      return d;
    }
    case Family::Q: {
      ValidationResult v = validate(s);
      if (v.q_not_mori_fibration)
        throw space_error("Q with square g has no rank-2 intersection table");
      long long n = s.g.degree() / 2;
      d.divisor_labels = {"H", "F"};
      d.curve_labels = {"f", "h"};
      d.pairing = {{1, 0}, {-n, 1}};
      d.canonical = {-2, -(n + 2)};
      d.ne_generators = {"h", "f"};
      return d;
    }
    case Family::P3:
      d.rank_one = true;
      d.minus_k_degree_of_line = 4;
      return d;
    case Family::Q3:
      d.rank_one = true;
      d.minus_k_degree_of_line = 3;
      return d;
    case Family::W:
    case Family::P1112:
    case Family::P1123:
      return std::nullopt;
  }
  return std::nullopt;
}

long long pair_classes(const IntersectionData& data, const ClassCombo& curve,
                       const ClassCombo& divisor) {
  long long total = 0;
  for (const auto& [cl, cc] : curve) {
    int ci = data.curve_index(cl);
    for (const auto& [dl, dc] : divisor) {
      int di = data.divisor_index(dl);
      total += cc * dc *
               data.pairing[static_cast<size_t>(ci)][static_cast<size_t>(di)];
    }
  }
  return total;
}

long long k_dot(const IntersectionData& data, const ClassCombo& curve) {
  long long total = 0;
  for (const auto& [cl, cc] : curve) {
    int ci = data.curve_index(cl);
    for (size_t di = 0; di < data.divisor_labels.size(); ++di)
      total += cc * data.canonical[di] * data.pairing[static_cast<size_t>(ci)][di];
  }
  return total;
}

long long k_dot(const IntersectionData& data, const std::string& curve_label) {
  return k_dot(data, ClassCombo{{curve_label, 1}});
}

}  // namespace sarkisov
