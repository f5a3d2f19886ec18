// Rational Mori fibre spaces of dimension 3 with large automorphism group:
// the parametrized families, their validity and normal forms, maximality
// decisions with reduction witnesses, and automorphism-group metadata.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sarkisov/binary_form.hpp"

namespace sarkisov {

class space_error : public std::runtime_error {
 public:
  explicit space_error(const std::string& what) : std::runtime_error(what) {}
};

enum class Family { F, P, U, S, V, W, R, Q, P3, Q3, P1112, P1123 };

const char* family_name(Family f);

// Tagged union over the families.
//   F[a,b,c] : decomposable P1-bundle over the Hirzebruch surface F_a
//   P[b]     : decomposable P1-bundle over P2
//   U[a,b,c] : Umemura P1-bundle over F_a, c = a*k + 2 with 0 <= k <= b
//   S[b]     : Schwarzenberger P1-bundle over P2
//   V[b]     : P1-bundle over P2 obtained from U[1,b,2]
//   W[b]     : singular P1-fibration over P(1,1,2)
//   R[m,n]   : P2-bundle P(O(-m)+O(-n)+O) over P1
//   Q[g]     : quadric fibration x0^2 - x1*x2 - g(u0,u1)*x3^2 = 0 over P1
//   P3, Q3, P1112, P1123 : P^3, the quadric threefold, P(1,1,1,2), P(1,1,2,3)
// (P1)^3 is represented as F[0,0,0], P2xP1 as R[0,0], the flag variety as S[1].
struct MoriFibreSpace {
  Family family = Family::P3;
  long long a = 0, b = 0, c = 0;  // F/U: (a,b,c); P/S/V/W: b; R: (a,b) = (m,n)
  BinaryForm g;                   // Q only

  static MoriFibreSpace F(long long a, long long b, long long c);
  static MoriFibreSpace P(long long b);
  static MoriFibreSpace U(long long a, long long b, long long c);
  static MoriFibreSpace S(long long b);
  static MoriFibreSpace V(long long b);
  static MoriFibreSpace W(long long b);
  static MoriFibreSpace R(long long m, long long n);
  static MoriFibreSpace Q(BinaryForm g);
  static MoriFibreSpace make(Family f);

  long long m() const { return a; }
  long long n() const { return b; }
  // U only: the step count k = (c-2)/a.
  long long k() const { return (c - 2) / a; }
};

struct ValidationResult {
  bool ok = false;
  std::vector<std::string> violations;
  // Q only: g is a square, so the fibration is not a Mori fibration.
  bool q_not_mori_fibration = false;
};

ValidationResult validate(const MoriFibreSpace& s);

// Canonical representative of the isomorphism class *as a Mori fibration*.
// F: b >= 0, c <= 0 when b = 0; for a = 0 additionally b >= |c| with the
//    b = |c| ties broken as (|b|,|b|) resp. (|b|,-|b|).
// R: the member of the 6-element coordinate-permutation orbit with m >= n >= 0.
// P: b >= 0.  Q: primitive integer coefficients, positive leading coefficient.
// Distinct fibrations on isomorphic total spaces are not merged.
MoriFibreSpace normalize(const MoriFibreSpace& s);

// Equality of Mori fibre spaces (variety plus fibration) via normal forms.
bool spaces_equal(const MoriFibreSpace& s1, const MoriFibreSpace& s2);

// Total order compatible with spaces_equal; used for deterministic output.
std::string space_key(const MoriFibreSpace& s);

struct NonMaximalityWitness {
  MoriFibreSpace target;
  std::string description;
};

enum class Maximality { Maximal, NotMaximal, UnknownFano };

struct MaximalityVerdict {
  Maximality status = Maximality::UnknownFano;
  // Family letter (a)-(j) for maximal members of the classification;
  // "Umemura [P1]" / "Umemura [P2]" for P3 / Q3.
  std::string provenance;
  std::optional<NonMaximalityWitness> witness;
};

MaximalityVerdict is_maximal(const MoriFibreSpace& s);

// Reduction data for non-maximal spaces.
enum class WitnessKind {
  None,     // the space is maximal
  Witness,  // explicit reduction with target
  OffList,  // outside the classified families; no reduction derived here
};
struct WitnessResult {
  WitnessKind kind = WitnessKind::None;
  std::optional<NonMaximalityWitness> witness;
};
WitnessResult non_maximality_witness(const MoriFibreSpace& s);

struct AutInfo {
  std::optional<long long> dimension;  // nullopt = unavailable
  std::string description;
};

AutInfo aut_info(const MoriFibreSpace& s);

struct OrbitSummary {
  // Number of orbits of the identity component of the automorphism group;
  // nullopt when the orbits form positive-dimensional families (Q[g]).
  std::optional<int> count;
  std::vector<std::string> labels;
};

std::optional<OrbitSummary> orbit_structure(const MoriFibreSpace& s);

}  // namespace sarkisov
