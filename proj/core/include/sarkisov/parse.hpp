// Text syntax for spaces: F[a,b,c], P[b], U[a,b,c], S[b], V[b], W[b],
// R[m,n], Q[<form>], P3, Q3, P1112, P1123.
#pragma once

#include <stdexcept>
#include <string>

#include "sarkisov/spaces.hpp"

namespace sarkisov {

class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Throws parse_error on bad syntax and space_error on validation failure.
MoriFibreSpace parse_space(const std::string& text);

// Renders the space as stored (without normalizing).
std::string render_space(const MoriFibreSpace& s);

}  // namespace sarkisov
