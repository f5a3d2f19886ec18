#include "sarkisov/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sarkisov {

namespace {

long long det3(const Ray& a, const Ray& b, const Ray& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Ray primitive(Ray v) {
  long long g = std::gcd(std::gcd(std::llabs(v[0]), std::llabs(v[1])),
                         std::llabs(v[2]));
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

std::array<int, 3> sorted_cone(std::array<int, 3> c) {
  std::sort(c.begin(), c.end());
  return c;
}

long long cone_index(const Fan& fan, const std::array<int, 3>& cone) {
  return std::llabs(det3(fan.rays[static_cast<size_t>(cone[0])],
                         fan.rays[static_cast<size_t>(cone[1])],
                         fan.rays[static_cast<size_t>(cone[2])]));
}

// Solve p = t1*v1 + t2*v2 + t3*v3 exactly by Cramer; returns the ti as
// fractions over the cone determinant.
struct Barycentric {
  long long num[3];
  long long den;  // > 0
};

std::optional<Barycentric> solve(const Ray& v1, const Ray& v2, const Ray& v3,
                                 const Ray& p) {
  long long d = det3(v1, v2, v3);
  if (d == 0) return std::nullopt;
  Barycentric b;
  b.num[0] = det3(p, v2, v3);
  b.num[1] = det3(v1, p, v3);
  b.num[2] = det3(v1, v2, p);
  b.den = d;
  if (b.den < 0) {
    b.den = -b.den;
    for (auto& n : b.num) n = -n;
  }
  return b;
}

bool cone_is_terminal(const Fan& fan, const std::array<int, 3>& cone) {
  const Ray& v1 = fan.rays[static_cast<size_t>(cone[0])];
  const Ray& v2 = fan.rays[static_cast<size_t>(cone[1])];
  const Ray& v3 = fan.rays[static_cast<size_t>(cone[2])];
  long long idx = std::llabs(det3(v1, v2, v3));
  if (idx == 0) throw toric_error("degenerate cone");
  if (idx == 1) return true;
  // Enumerate lattice points in the half-open parallelepiped via the
  // bounding box, solving barycentric coordinates exactly.
  long long lo[3], hi[3];
  for (int i = 0; i < 3; ++i) {
    lo[i] = std::min({0LL, v1[i], v2[i], v3[i], v1[i] + v2[i], v1[i] + v3[i],
                      v2[i] + v3[i], v1[i] + v2[i] + v3[i]});
    hi[i] = std::max({0LL, v1[i], v2[i], v3[i], v1[i] + v2[i], v1[i] + v3[i],
                      v2[i] + v3[i], v1[i] + v2[i] + v3[i]});
  }
  for (long long x = lo[0]; x <= hi[0]; ++x)
    for (long long y = lo[1]; y <= hi[1]; ++y)
      for (long long z = lo[2]; z <= hi[2]; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        auto bc = solve(v1, v2, v3, {x, y, z});
        if (!bc) continue;
        bool in_box = true;
        long long sum = 0;
        for (int i = 0; i < 3; ++i) {
          if (bc->num[i] < 0 || bc->num[i] >= bc->den) in_box = false;
          sum += bc->num[i];
        }
        if (in_box && sum <= bc->den) return false;
      }
  return true;
}

}  // namespace

int Fan::ray_index(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw toric_error("no ray labeled " + label);
}

Fan fan_of(const MoriFibreSpace& s0) {
  MoriFibreSpace s = normalize(s0);
  Fan f;
  auto add_all_triples_with = [&f](const std::vector<int>& group_a,
                                   const std::vector<int>& group_b) {
    // cones = {pairs from group_a} x {members of group_b}
    for (size_t i = 0; i < group_a.size(); ++i)
      for (size_t j = i + 1; j < group_a.size(); ++j)
        for (int k : group_b)
          f.cones.push_back(sorted_cone({group_a[i], group_a[j], k}));
  };
  switch (s.family) {
    case Family::R: {
      long long m = s.a, n = s.b;
      f.rays = {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {m, n, -1}};
      f.labels = {"x0", "x1", "x2", "y0", "y1"};
      add_all_triples_with({0, 1, 2}, {3, 4});
      return f;
    }
    case Family::F: {
      long long a = s.a, b = s.b, c = s.c;
      f.rays = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {b, -1, 0}, {0, 0, 1},
                {-c, a, -1}};
      f.labels = {"x0", "x1", "y0", "y1", "z0", "z1"};
      for (int i : {0, 1})
        for (int j : {2, 3})
          for (int k : {4, 5}) f.cones.push_back(sorted_cone({i, j, k}));
      return f;
    }
    case Family::P: {
      long long b = s.b;
      f.rays = {{0, 0, 1}, {0, 0, -1}, {1, 0, 0}, {0, 1, 0}, {-1, -1, b}};
      f.labels = {"y0", "y1", "z0", "z1", "z2"};
      add_all_triples_with({2, 3, 4}, {0, 1});
      return f;
    }
    case Family::W: {
      long long b = s.b;
      f.rays = {{1, 0, 0}, {-1, 0, 0}, {2 * b - 1, -1, -2}, {0, 1, 0},
                {0, 0, 1}};
      f.labels = {"y0", "y1", "z0", "z1", "z2"};
      add_all_triples_with({2, 3, 4}, {0, 1});
      return f;
    }
    case Family::P3: {
      f.rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
      f.labels = {"x0", "x1", "x2", "x3"};
      f.cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
      return f;
    }
    case Family::P1112: {
      f.rays = {{1, 0, 0}, {0, 1, 0}, {-1, -1, -2}, {0, 0, 1}};
      f.labels = {"x0", "x1", "x2", "x3"};
      f.cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
      return f;
    }
    case Family::P1123: {
      f.rays = {{-1, -2, -3}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
      f.labels = {"x0", "x1", "x2", "x3"};
      f.cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
      return f;
    }
    default:
      throw toric_error(std::string(family_name(s.family)) +
                        " is not a toric family");
  }
}

bool is_smooth(const Fan& fan) {
  for (const auto& c : fan.cones)
    if (cone_index(fan, c) != 1) return false;
  return true;
}

std::vector<int> singular_cones(const Fan& fan) {
  std::vector<int> out;
  for (size_t i = 0; i < fan.cones.size(); ++i)
    if (cone_index(fan, fan.cones[i]) != 1) out.push_back(static_cast<int>(i));
  return out;
}

bool is_terminal(const Fan& fan) {
  for (const auto& c : fan.cones)
    if (!cone_is_terminal(fan, c)) return false;
  return true;
}

Fan star_subdivide(const Fan& fan, const Ray& ray) {
  if (ray == Ray{0, 0, 0}) throw toric_error("cannot subdivide at the zero ray");
  Ray r = primitive(ray);
  for (const auto& existing : fan.rays)
    if (existing == r) return fan;  // subdividing at an existing ray: no-op
  Fan out;
  out.rays = fan.rays;
  out.labels = fan.labels;
  out.rays.push_back(r);
  out.labels.push_back("e" + std::to_string(out.rays.size() - 1));
  int ri = static_cast<int>(out.rays.size()) - 1;
  bool in_support = false;
  for (const auto& cone : fan.cones) {
    const Ray& v1 = fan.rays[static_cast<size_t>(cone[0])];
    const Ray& v2 = fan.rays[static_cast<size_t>(cone[1])];
    const Ray& v3 = fan.rays[static_cast<size_t>(cone[2])];
    auto bc = solve(v1, v2, v3, r);
    bool inside = bc && bc->num[0] >= 0 && bc->num[1] >= 0 && bc->num[2] >= 0;
    if (!inside) {
      out.cones.push_back(cone);
      continue;
    }
    in_support = true;
    // Replace by joins of r with the facets not containing r.
    for (int drop = 0; drop < 3; ++drop) {
      if (bc->num[drop] == 0) continue;  // r lies on the opposite facet
      std::array<int, 3> nc = cone;
      nc[static_cast<size_t>(drop)] = ri;
      out.cones.push_back(sorted_cone(nc));
    }
  }
  if (!in_support) throw toric_error("ray outside the fan support");
  return out;
}

std::vector<Wall> walls(const Fan& fan) {
  std::map<Wall, int> count;
  for (const auto& c : fan.cones) {
    count[{c[0], c[1]}]++;
    count[{c[0], c[2]}]++;
    count[{c[1], c[2]}]++;
  }
  std::vector<Wall> out;
  for (const auto& [w, n] : count)
    if (n == 2) out.push_back(w);
  return out;
}

namespace {

// The two maximal cones adjacent to a wall, and their opposite rays.
struct WallStar {
  std::array<int, 2> cone_ids;
  std::array<int, 2> opposite;  // ray indices v3, v4
};

WallStar wall_star(const Fan& fan, const Wall& wall) {
  WallStar ws;
  int found = 0;
  for (size_t ci = 0; ci < fan.cones.size(); ++ci) {
    const auto& c = fan.cones[ci];
    bool has_i = false, has_j = false;
    int other = -1;
    for (int r : c) {
      if (r == wall.first) has_i = true;
      else if (r == wall.second) has_j = true;
      else other = r;
    }
    if (has_i && has_j) {
      if (found == 2) throw toric_error("wall shared by more than two cones");
      ws.cone_ids[static_cast<size_t>(found)] = static_cast<int>(ci);
      ws.opposite[static_cast<size_t>(found)] = other;
      ++found;
    }
  }
  if (found != 2) throw toric_error("not a wall (shared by != 2 cones)");
  return ws;
}

// Primitive integer relation a3*v3 + a4*v4 + a1*v1 + a2*v2 = 0 with a3 > 0.
struct Circuit {
  long long a1, a2, a3, a4;
};

Circuit wall_circuit(const Fan& fan, const Wall& wall, const WallStar& ws) {
  const Ray& v1 = fan.rays[static_cast<size_t>(wall.first)];
  const Ray& v2 = fan.rays[static_cast<size_t>(wall.second)];
  const Ray& v3 = fan.rays[static_cast<size_t>(ws.opposite[0])];
  const Ray& v4 = fan.rays[static_cast<size_t>(ws.opposite[1])];
  // Solve v4 = x*v1 + y*v2 + z*v3 over Q, then clear denominators.
  auto bc = solve(v1, v2, v3, v4);
  if (!bc) throw toric_error("degenerate wall star");
  // v4*den - num0*v1 - num1*v2 - num2*v3 = 0
  long long a4 = bc->den, a1 = -bc->num[0], a2 = -bc->num[1], a3 = -bc->num[2];
  long long g = std::gcd(std::gcd(std::llabs(a1), std::llabs(a2)),
                         std::gcd(std::llabs(a3), std::llabs(a4)));
  if (g > 1) {
    a1 /= g;
    a2 /= g;
    a3 /= g;
    a4 /= g;
  }
  if (a3 < 0) {
    a1 = -a1;
    a2 = -a2;
    a3 = -a3;
    a4 = -a4;
  }
  return {a1, a2, a3, a4};
}

}  // namespace

Fan wall_flip(const Fan& fan, const Wall& wall) {
  WallStar ws = wall_star(fan, wall);
  Circuit c = wall_circuit(fan, wall, ws);
  if (c.a3 <= 0 || c.a4 <= 0)
    throw toric_error("wall not flippable: opposite rays not on opposite sides");
  if (c.a1 >= 0 || c.a2 >= 0)
    throw toric_error("wall not flippable: circuit does not separate the wall");
  Fan out;
  out.rays = fan.rays;
  out.labels = fan.labels;
  for (size_t ci = 0; ci < fan.cones.size(); ++ci)
    if (static_cast<int>(ci) != ws.cone_ids[0] && static_cast<int>(ci) != ws.cone_ids[1])
      out.cones.push_back(fan.cones[ci]);
  out.cones.push_back(sorted_cone({ws.opposite[0], ws.opposite[1], wall.first}));
  out.cones.push_back(sorted_cone({ws.opposite[0], ws.opposite[1], wall.second}));
  return out;
}

std::map<Wall, std::optional<long long>> invariant_curve_K_degrees(const Fan& fan) {
  std::map<Wall, std::optional<long long>> out;
  for (const Wall& w : walls(fan)) {
    WallStar ws = wall_star(fan, w);
    bool smooth = cone_index(fan, fan.cones[static_cast<size_t>(ws.cone_ids[0])]) == 1 &&
                  cone_index(fan, fan.cones[static_cast<size_t>(ws.cone_ids[1])]) == 1;
    if (!smooth) {
      out[w] = std::nullopt;
      continue;
    }
    Circuit c = wall_circuit(fan, w, ws);
    // Unimodular adjacent cones make the relation v3 + v4 + a1 v1 + a2 v2 = 0.
    if (c.a3 != 1 || c.a4 != 1)
      throw toric_error("unexpected circuit on a smooth wall");
    out[w] = 2 + c.a1 + c.a2;
  }
  return out;
}

bool fans_isomorphic(const Fan& a, const Fan& b) {
  if (a.rays.size() != b.rays.size() || a.cones.size() != b.cones.size())
    return false;
  const size_t n = a.rays.size();
  std::set<std::array<int, 3>> bcones(b.cones.begin(), b.cones.end());
  // Pick an independent triple in a.
  std::array<int, 3> base{};
  bool found = false;
  for (size_t i = 0; i < n && !found; ++i)
    for (size_t j = i + 1; j < n && !found; ++j)
      for (size_t k = j + 1; k < n && !found; ++k)
        if (det3(a.rays[i], a.rays[j], a.rays[k]) != 0) {
          base = {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
          found = true;
        }
  if (!found) return false;
  const Ray& p = a.rays[static_cast<size_t>(base[0])];
  const Ray& q = a.rays[static_cast<size_t>(base[1])];
  const Ray& r = a.rays[static_cast<size_t>(base[2])];
  // Try mapping the triple to each ordered triple of b's rays, build the
  // unique linear map, and test integrality plus ray/cone matching.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        if (i == j || i == k || j == k) continue;
        // M * p = b[i], M * q = b[j], M * r = b[k]; M = B * A^{-1}.
        long long dA = det3(p, q, r);
        // Adjugate of A = [p q r] (columns).
        long long A[3][3] = {{p[0], q[0], r[0]},
                             {p[1], q[1], r[1]},
                             {p[2], q[2], r[2]}};
        long long adj[3][3];
        adj[0][0] = A[1][1] * A[2][2] - A[1][2] * A[2][1];
        adj[0][1] = -(A[0][1] * A[2][2] - A[0][2] * A[2][1]);
        adj[0][2] = A[0][1] * A[1][2] - A[0][2] * A[1][1];
        adj[1][0] = -(A[1][0] * A[2][2] - A[1][2] * A[2][0]);
        adj[1][1] = A[0][0] * A[2][2] - A[0][2] * A[2][0];
        adj[1][2] = -(A[0][0] * A[1][2] - A[0][2] * A[1][0]);
        adj[2][0] = A[1][0] * A[2][1] - A[1][1] * A[2][0];
        adj[2][1] = -(A[0][0] * A[2][1] - A[0][1] * A[2][0]);
        adj[2][2] = A[0][0] * A[1][1] - A[0][1] * A[1][0];
        long long B[3][3] = {{b.rays[i][0], b.rays[j][0], b.rays[k][0]},
                             {b.rays[i][1], b.rays[j][1], b.rays[k][1]},
                             {b.rays[i][2], b.rays[j][2], b.rays[k][2]}};
        long long M[3][3];
        bool integral = true;
        for (int row = 0; row < 3 && integral; ++row)
          for (int col = 0; col < 3 && integral; ++col) {
            long long num = 0;
            for (int t = 0; t < 3; ++t) num += B[row][t] * adj[t][col];
            if (num % dA != 0) integral = false;
            else M[row][col] = num / dA;
          }
        if (!integral) continue;
        long long dM = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                       M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                       M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
        if (dM != 1 && dM != -1) continue;
        // Image of every ray of a must be a ray of b; record the bijection.
        std::vector<int> img(n, -1);
        bool ok = true;
        for (size_t s = 0; s < n && ok; ++s) {
          Ray m{};
          for (int row = 0; row < 3; ++row)
            m[static_cast<size_t>(row)] = M[row][0] * a.rays[s][0] +
                                          M[row][1] * a.rays[s][1] +
                                          M[row][2] * a.rays[s][2];
          ok = false;
          for (size_t t = 0; t < n; ++t)
            if (b.rays[t] == m) {
              img[s] = static_cast<int>(t);
              ok = true;
              break;
            }
        }
        if (!ok) continue;
        bool cones_match = true;
        for (const auto& c : a.cones) {
          std::array<int, 3> ic = sorted_cone(
              {img[static_cast<size_t>(c[0])], img[static_cast<size_t>(c[1])],
               img[static_cast<size_t>(c[2])]});
          if (!bcones.count(ic)) {
            cones_match = false;
            break;
          }
        }
        if (cones_match) return true;
      }
  return false;
}

long long lattice_h0(long long a, long long alpha, long long beta) {
  if (alpha < 0) return 0;
  long long total = 0;
  for (long long i = 0; i <= alpha; ++i)
    total += std::max(0LL, beta + i * a + 1);
  return total;
}

std::string format_fan(const Fan& fan) {
  std::ostringstream os;
  for (const auto& r : fan.rays) os << r[0] << " " << r[1] << " " << r[2] << "\n";
  os << "\n";
  for (const auto& c : fan.cones) os << c[0] << " " << c[1] << " " << c[2] << "\n";
  return os.str();
}

Fan parse_fan(const std::string& text) {
  Fan f;
  std::istringstream is(text);
  std::string line;
  bool in_cones = false;
  while (std::getline(is, line)) {
    if (line.empty()) {
      if (!f.rays.empty()) in_cones = true;
      continue;
    }
    std::istringstream ls(line);
    if (!in_cones) {
      Ray r{};
      if (!(ls >> r[0] >> r[1] >> r[2])) throw toric_error("bad ray line");
      f.rays.push_back(r);
      f.labels.push_back("e" + std::to_string(f.rays.size() - 1));
    } else {
      std::array<int, 3> c{};
      if (!(ls >> c[0] >> c[1] >> c[2])) throw toric_error("bad cone line");
      for (int r : c)
        if (r < 0 || r >= static_cast<int>(f.rays.size()))
          throw toric_error("cone ray index out of range");
      f.cones.push_back(sorted_cone(c));
    }
  }
  return f;
}

}  // namespace sarkisov
