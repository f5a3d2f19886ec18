// Fans for the toric families: smoothness and terminality tests, star
// subdivisions and wall flips, invariant-curve anticanonical degrees, and
// lattice-point counts for section spaces on Hirzebruch surfaces.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sarkisov/spaces.hpp"

namespace sarkisov {

class toric_error : public std::runtime_error {
 public:
  explicit toric_error(const std::string& what) : std::runtime_error(what) {}
};

using Ray = std::array<long long, 3>;

// Simplicial fan in a rank-3 lattice. Rays are primitive; maximal cones are
// ray-index triples.
struct Fan {
  std::vector<Ray> rays;
  std::vector<std::array<int, 3>> cones;
  std::vector<std::string> labels;  // Cox coordinate names, parallel to rays

  int ray_index(const std::string& label) const;
};

// Fixed ray tables per family (documented contract):
//   R[m,n]  : x0=(1,0,0) x1=(0,1,0) x2=(-1,-1,0) y0=(0,0,1) y1=(m,n,-1);
//             cones {xi,xj,yk}.
//   F[a,b,c]: x0=(1,0,0) x1=(-1,0,0) y0=(0,1,0) y1=(b,-1,0) z0=(0,0,1)
//             z1=(-c,a,-1); cones {xi,yj,zk}.
//   P[b]    : y0=(0,0,1) y1=(0,0,-1) z0=(1,0,0) z1=(0,1,0) z2=(-1,-1,b);
//             cones {zi,zj,yk}.
//   W[b]    : y0=(1,0,0) y1=(-1,0,0) z0=(2b-1,-1,-2) z1=(0,1,0) z2=(0,0,1);
//             cones {yk,zi,zj}.
//   P(1,1,1,2), P(1,1,2,3), P3: standard weighted-projective fans.
// Throws toric_error for non-toric families (U, S, V, Q, Q3).
Fan fan_of(const MoriFibreSpace& s);

bool is_smooth(const Fan& fan);
// Box criterion: a simplicial cone with primitive rays v1,v2,v3 is terminal
// iff the only lattice point t1*v1+t2*v2+t3*v3 with ti in [0,1) and
// t1+t2+t3 <= 1 is the origin.
bool is_terminal(const Fan& fan);
std::vector<int> singular_cones(const Fan& fan);  // indices into fan.cones

// Insert a ray and re-triangulate its star.
Fan star_subdivide(const Fan& fan, const Ray& ray);

// Walls are 2-faces shared by exactly two maximal cones, identified by their
// ray-index pair (i < j).
using Wall = std::pair<int, int>;
std::vector<Wall> walls(const Fan& fan);

// Bistellar exchange across a wall: with circuit relation
// a3*v3 + a4*v4 + a1*v1 + a2*v2 = 0 (a3,a4 > 0, v1,v2 the wall rays), the two
// cones over the wall are replaced by the complementary triangulation.
// Requires a1,a2 < 0; otherwise the modification is not a flip.
Fan wall_flip(const Fan& fan, const Wall& wall);

// (-K)·C for the invariant curve of each wall, from the wall relation
// v3 + v4 + a1*v1 + a2*v2 = 0 over unimodular adjacent cones:
// (-K)·C = 2 + a1 + a2. Walls with a singular adjacent cone are skipped
// (nullopt marker).
std::map<Wall, std::optional<long long>> invariant_curve_K_degrees(const Fan& fan);

// Unimodular identification of fans: ray sets and cone sets match under a
// common GL3(Z) transform.
bool fans_isomorphic(const Fan& a, const Fan& b);

// Number of lattice points of the polytope of alpha*s_a + beta*f on the
// Hirzebruch surface F_a (s_a the (+a)-section): sum over i in [0,alpha] of
// max(0, beta + i*a + 1); zero when alpha < 0.
long long lattice_h0(long long a, long long alpha, long long beta);

// Plain-text fan format: one ray per line as three integers, a blank line,
// then one cone per line as ray indices.
std::string format_fan(const Fan& fan);
Fan parse_fan(const std::string& text);

}  // namespace sarkisov
