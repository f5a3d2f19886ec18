#include "sarkisov/spaces.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "sarkisov/toric.hpp"

namespace sarkisov {

const char* family_name(Family f) {
  switch (f) {
    case Family::F: return "F";
    case Family::P: return "P";
    case Family::U: return "U";
    case Family::S: return "S";
    case Family::V: return "V";
    case Family::W: return "W";
    case Family::R: return "R";
    case Family::Q: return "Q";
    case Family::P3: return "P3";
    case Family::Q3: return "Q3";
    case Family::P1112: return "P1112";
    case Family::P1123: return "P1123";
  }
  return "?";
}

MoriFibreSpace MoriFibreSpace::F(long long a, long long b, long long c) {
  MoriFibreSpace s;
  s.family = Family::F;
  s.a = a;
  s.b = b;
  s.c = c;
  return s;
}
MoriFibreSpace MoriFibreSpace::P(long long b) {
  MoriFibreSpace s;
  s.family = Family::P;
  s.b = b;
  return s;
}
MoriFibreSpace MoriFibreSpace::U(long long a, long long b, long long c) {
  MoriFibreSpace s;
  s.family = Family::U;
  s.a = a;
  s.b = b;
  s.c = c;
  return s;
}
MoriFibreSpace MoriFibreSpace::S(long long b) {
  MoriFibreSpace s;
  s.family = Family::S;
  s.b = b;
  return s;
}
MoriFibreSpace MoriFibreSpace::V(long long b) {
  MoriFibreSpace s;
  s.family = Family::V;
  s.b = b;
  return s;
}
MoriFibreSpace MoriFibreSpace::W(long long b) {
  MoriFibreSpace s;
  s.family = Family::W;
  s.b = b;
  return s;
}
MoriFibreSpace MoriFibreSpace::R(long long m, long long n) {
  MoriFibreSpace s;
  s.family = Family::R;
  s.a = m;
  s.b = n;
  return s;
}
MoriFibreSpace MoriFibreSpace::Q(BinaryForm g) {
  MoriFibreSpace s;
  s.family = Family::Q;
  s.g = std::move(g);
  return s;
}
MoriFibreSpace MoriFibreSpace::make(Family f) {
  MoriFibreSpace s;
  s.family = f;
  return s;
}

ValidationResult validate(const MoriFibreSpace& s) {
  ValidationResult r;
  auto violate = [&r](const std::string& msg) { r.violations.push_back(msg); };
  switch (s.family) {
    case Family::F:
      if (s.a < 0) violate("a<0 unsupported for F");
      break;
    case Family::P:
      break;
    case Family::U: {
      if (s.a < 1) violate("U requires a >= 1");
      if (s.b < 1) violate("U requires b >= 1");
      if (s.c < 2) violate("U requires c >= 2");
      if (s.a >= 1 && (s.c - 2) % s.a != 0) {
        std::ostringstream os;
        os << s.a << " does not divide " << s.c << "-2";
        violate(os.str());
      } else if (s.a >= 1 && s.b >= 1 && s.c >= 2) {
        long long k = (s.c - 2) / s.a;
        if (k < 0 || k > s.b) {
          std::ostringstream os;
          os << "k=(c-2)/a=" << k << " outside [0," << s.b << "]";
          violate(os.str());
        }
      }
      break;
    }
    case Family::S:
      if (s.b < 1) violate("S requires b >= 1");
      break;
    case Family::V:
      if (s.b < 1) violate("V requires b >= 1");
      break;
    case Family::W:
      if (s.b < 2) violate("W requires b >= 2");
      break;
    case Family::R:
      break;
    case Family::Q: {
      if (s.g.is_zero()) {
        violate("Q requires a nonzero form");
      } else if (s.g.degree() < 2 || s.g.degree() % 2 != 0) {
        violate("Q requires g of even degree >= 2");
      } else if (is_square(s.g)) {
        r.q_not_mori_fibration = true;  // flagged, not a hard failure
      }
      break;
    }
    default:
      break;
  }
  r.ok = r.violations.empty();
  return r;
}

namespace {

void require_valid(const MoriFibreSpace& s) {
  ValidationResult v = validate(s);
  if (!v.ok) {
    std::string msg = "invalid space:";
    for (const auto& m : v.violations) msg += " " + m;
    throw space_error(msg);
  }
}

std::pair<long long, long long> normalize_f0_pair(long long b, long long c) {
  // Orbit of (b,c) under swap and simultaneous negation; the representative
  // has b >= |c|, ties resolved as (|b|,|b|) and (|b|,-|b|).
  std::array<std::pair<long long, long long>, 4> orbit = {
      std::make_pair(b, c), std::make_pair(c, b),
      std::make_pair(-b, -c), std::make_pair(-c, -b)};
  std::pair<long long, long long> best;
  bool found = false;
  for (auto [bb, cc] : orbit) {
    if (bb >= std::llabs(cc)) {
      if (!found || std::make_pair(bb, cc) > best) {
        best = {bb, cc};
        found = true;
      }
    }
  }
  return best;
}

}  // namespace

MoriFibreSpace normalize(const MoriFibreSpace& s) {
  require_valid(s);
  MoriFibreSpace r = s;
  switch (s.family) {
    case Family::F: {
      if (r.b < 0) {
        r.b = -r.b;
        r.c = -r.c;
      }
      if (r.b == 0 && r.c > 0) r.c = -r.c;
      if (r.a == 0) {
        auto [b, c] = normalize_f0_pair(r.b, r.c);
        r.b = b;
        r.c = c;
      }
      break;
    }
    case Family::P:
      r.b = std::llabs(r.b);
      break;
    case Family::R: {
      // Orbit of the exponent multiset {m,n,0} under coordinate permutations.
      std::array<long long, 3> e = {r.a, r.b, 0};
      std::sort(e.begin(), e.end());
      r.a = e[2] - e[0];
      r.b = e[1] - e[0];
      break;
    }
    case Family::Q:
      r.g = r.g.primitive();
      break;
    default:
      break;
  }
  return r;
}

std::string space_key(const MoriFibreSpace& s) {
  MoriFibreSpace n = normalize(s);
  std::ostringstream os;
  os << family_name(n.family);
  switch (n.family) {
    case Family::F:
    case Family::U:
      os << "[" << n.a << "," << n.b << "," << n.c << "]";
      break;
    case Family::P:
    case Family::S:
    case Family::V:
    case Family::W:
      os << "[" << n.b << "]";
      break;
    case Family::R:
      os << "[" << n.a << "," << n.b << "]";
      break;
    case Family::Q:
      os << "[" << n.g.str() << "]";
      break;
    default:
      break;
  }
  return os.str();
}

bool spaces_equal(const MoriFibreSpace& s1, const MoriFibreSpace& s2) {
  MoriFibreSpace n1 = normalize(s1), n2 = normalize(s2);
  if (n1.family != n2.family) return false;
  if (n1.family == Family::Q) return n1.g == n2.g;
  return n1.a == n2.a && n1.b == n2.b && n1.c == n2.c;
}

namespace {

struct Verdict {
  Maximality status;
  std::string provenance;
  WitnessKind kind = WitnessKind::None;
  std::optional<NonMaximalityWitness> witness;
};

NonMaximalityWitness make_witness(MoriFibreSpace target, std::string desc) {
  return NonMaximalityWitness{normalize(target), std::move(desc)};
}

Verdict maximal(const char* prov) {
  return Verdict{Maximality::Maximal, prov, WitnessKind::None, std::nullopt};
}

Verdict not_maximal(NonMaximalityWitness w) {
  return Verdict{Maximality::NotMaximal, "", WitnessKind::Witness, std::move(w)};
}

Verdict off_list(NonMaximalityWitness w) {
  return Verdict{Maximality::NotMaximal, "", WitnessKind::OffList, std::move(w)};
}

Verdict decide_f(const MoriFibreSpace& s) {
  long long a = s.a, b = s.b, c = s.c;
  if (a == 1) {
    return off_list(make_witness(
        s, "off-list intermediate (P1-bundle over F_1); not classified as a "
           "maximal family"));
  }
  bool max = (a == 0 && b == 1 && c == -1) ||
             (a == 0 && c != 1 && b >= 2 && b >= std::llabs(c)) ||
             (-a < c && c < a * (b - 1)) || (b == 0 && c == 0);
  if (max) return maximal("family (a)");

  if (a == 0) {
    if (c == 1) {
      std::ostringstream os;
      os << "swap isomorphism and contraction of F[0,1," << b << "] to R[0," << b
         << "]";
      return not_maximal(make_witness(MoriFibreSpace::R(0, b), os.str()));
    }
    // Remaining non-maximal case after normalization: (b,c) = (1,0).
    return not_maximal(make_witness(
        MoriFibreSpace::R(0, 0), "contraction of the section to R[0,0]"));
  }

  // a >= 2 below.
  if (b >= 1 && c >= a * (b - 1)) {
    long long target_n = c - a * (b - 1);
    std::ostringstream os;
    os << "chain of elementary links down to F[" << a << ",1," << target_n
       << "] followed by the section contraction to R[" << a << ","
       << target_n << "]";
    return not_maximal(make_witness(MoriFibreSpace::R(a, target_n), os.str()));
  }
  if (b == 0 && -a < c && c < 0) {
    std::ostringstream os;
    os << "elementary link up to F[" << a << ",1," << c + a
       << "] followed by the section contraction to R[" << a << "," << c + a
       << "]";
    return not_maximal(make_witness(MoriFibreSpace::R(a, c + a), os.str()));
  }
  // c <= -a: raise b until c lands in (-a, 0].
  long long t = 1;
  while (c + t * a <= -a) ++t;
  long long b2 = b + t, c2 = c + t * a;
  if (c2 == 0 && b2 == 1) {
    std::ostringstream os;
    os << "elementary link up to F[" << a
       << ",1,0] followed by the section contraction to R[" << a << ",0]";
    return not_maximal(make_witness(MoriFibreSpace::R(a, 0), os.str()));
  }
  std::ostringstream os;
  os << "chain of " << t << " elementary links up to the maximal bundle F[" << a
     << "," << b2 << "," << c2 << "]";
  return not_maximal(make_witness(MoriFibreSpace::F(a, b2, c2), os.str()));
}

Verdict decide_u(const MoriFibreSpace& s) {
  long long a = s.a, b = s.b, c = s.c;
  long long k = (c - 2) / a;
  if (a == 1) {
    if (c < b) return maximal("family (c)");
    if (c == b) {
      return not_maximal(make_witness(
          MoriFibreSpace::make(Family::Q3),
          "chain of elementary links down to U[1,2,2], the blow-up of a line "
          "in Q3"));
    }
    // c = b+1 or b+2: outside the classified families; record the endpoint of
    // the descending chain of elementary links.
    long long steps = std::min(b - 1, c - 2);
    MoriFibreSpace end = MoriFibreSpace::U(1, b - steps, c - steps);
    return off_list(make_witness(
        end, "outside the classified families; descending elementary links "
             "end at " + space_key(end)));
  }
  // a >= 2: maximal iff k <= b-2.
  if (k <= b - 2) return maximal("family (c)");
  if (k == b - 1) {
    std::ostringstream os;
    os << "chain of elementary links down to U[" << a
       << ",1,2], the blow-up of a section of R[" << a - 1 << ",0]";
    return not_maximal(make_witness(MoriFibreSpace::R(a - 1, 0), os.str()));
  }
  // k == b: outside the classified families.
  MoriFibreSpace end = MoriFibreSpace::U(a, 1, a + 2);
  return off_list(make_witness(
      end, "outside the classified families; descending elementary links end "
           "at " + space_key(end)));
}

Verdict decide(const MoriFibreSpace& s) {
  switch (s.family) {
    case Family::F:
      return decide_f(s);
    case Family::P:
      if (s.b >= 2) return maximal("family (b)");
      if (s.b == 0) return maximal("family (g) as R[0,0]");
      return not_maximal(make_witness(
          MoriFibreSpace::make(Family::P3),
          "blow-down of the point [0:0:0:1] blow-up to P3"));
    case Family::U:
      return decide_u(s);
    case Family::S:
      if (s.b == 1 || s.b >= 3) return maximal("family (d)");
      return not_maximal(make_witness(MoriFibreSpace::make(Family::P3),
                                      "blow-down of twisted cubic to P3"));
    case Family::V:
      if (s.b >= 3) return maximal("family (e)");
      if (s.b == 2)
        return not_maximal(make_witness(
            MoriFibreSpace::make(Family::Q3),
            "birational morphism contracting to the quadric threefold Q3"));
      return off_list(make_witness(
          s, "outside the classified families; no reduction derived here"));
    case Family::W:
      return maximal("family (f)");
    case Family::R: {
      long long m = s.a, n = s.b;
      if (m == 1 && n == 0)
        return not_maximal(make_witness(
            MoriFibreSpace::make(Family::P3),
            "blow-down of the line [0:0:*:*] blow-up to P3"));
      if (m == n || m > 2 * n) return maximal("family (g)");
      // 2n >= m > n >= 1: the section blow-up identifies the automorphisms
      // with those of F[m-n,1,-n]; its own reduction continues from there.
      std::ostringstream os;
      os << "blow-up of the invariant section, giving F[" << m - n << ",1,"
         << -n << "]";
      if (m - n == 1) os << " (off-list intermediate; reduction continues)";
      return not_maximal(
          make_witness(MoriFibreSpace::F(m - n, 1, -n), os.str()));
    }
    case Family::Q: {
      if (is_square(s.g)) throw space_error("Q with square g is not a Mori fibration");
      int odd_deg = odd_part(s.g).degree();
      if (odd_deg >= 4) return maximal("family (h)");
      return not_maximal(make_witness(
          MoriFibreSpace::make(Family::Q3),
          "square reduction to the two-root model, which embeds into the "
          "quadric threefold Q3"));
    }
    case Family::P3:
      return maximal("Umemura [P1]");
    case Family::Q3:
      return maximal("Umemura [P2]");
    case Family::P1112:
      return maximal("family (i)");
    case Family::P1123:
      return maximal("family (j)");
  }
  throw space_error("unreachable");
}

}  // namespace

MaximalityVerdict is_maximal(const MoriFibreSpace& s) {
  Verdict v = decide(normalize(s));
  MaximalityVerdict out;
  out.status = v.status;
  out.provenance = v.provenance;
  out.witness = v.witness;
  return out;
}

WitnessResult non_maximality_witness(const MoriFibreSpace& s) {
  Verdict v = decide(normalize(s));
  WitnessResult r;
  r.kind = v.kind;
  r.witness = v.witness;
  return r;
}

namespace {

long long hirzebruch_aut_dim(long long a) { return a == 0 ? 6 : a + 5; }

}  // namespace

AutInfo aut_info(const MoriFibreSpace& s0) {
  MoriFibreSpace s = normalize(s0);
  switch (s.family) {
    case Family::P3:
      return {15, "PGL4"};
    case Family::Q3:
      return {10, "PSO5"};
    case Family::P1112:
      return {15, "graded coordinate changes of P(1,1,1,2)"};
    case Family::P1123:
      return {14, "graded coordinate changes of P(1,1,2,3)"};
    case Family::F: {
      if (s.a == 0 && s.b == 0 && s.c == 0) return {9, "PGL2×PGL2×PGL2"};
      long long dim = hirzebruch_aut_dim(s.a) + 1 +
                      lattice_h0(s.a, s.b, -s.c) + lattice_h0(s.a, -s.b, s.c);
      return {dim, "bundle automorphisms over Aut(F_a)"};
    }
    case Family::P: {
      if (s.b == 0) return {11, "PGL3×PGL2"};
      long long dim = 8 + 1 + (s.b + 1) * (s.b + 2) / 2;
      return {dim, "bundle automorphisms over PGL3"};
    }
    case Family::R: {
      long long m = s.a, n = s.b;
      if (m == 0 && n == 0) return {11, "PGL3×PGL2"};
      const std::array<long long, 9> degs = {0,     n - m, -m, m - n, 0,
                                             -n,    m,     n,  0};
      long long sum = 0;
      for (long long d : degs) sum += std::max(0LL, d + 1);
      return {sum - 1 + 3, "graded-matrix group ⋊ PGL2"};
    }
    case Family::S:
      if (s.b == 1) return {8, "PGL3"};
      return {3, "PGL2"};
    case Family::W: {
      // Conjugate to the automorphisms of F[2,b,1] through the elementary
      // link between them.
      long long dim = hirzebruch_aut_dim(2) + 1 + lattice_h0(2, s.b, -1) +
                      lattice_h0(2, -s.b, 1);
      return {dim, "conjugate to Aut0(F[2," + std::to_string(s.b) + ",1])"};
    }
    case Family::Q: {
      if (s.g.is_zero() || is_square(s.g))
        return {std::nullopt, "not a Mori fibration"};
      if (root_stats(s.g).distinct_roots == 2) return {4, "PGL2×Gm"};
      return {3, "PGL2"};
    }
    case Family::U:
    case Family::V:
      return {std::nullopt, "not derived here"};
  }
  return {std::nullopt, "unknown"};
}

std::optional<OrbitSummary> orbit_structure(const MoriFibreSpace& s0) {
  MoriFibreSpace s = normalize(s0);
  auto summary = [](int n, std::vector<std::string> labels) {
    return OrbitSummary{n, std::move(labels)};
  };
  switch (s.family) {
    case Family::P3:
    case Family::Q3:
      return summary(1, {"open (transitive action)"});
    case Family::F:
      if (s.a == 0 && s.b == 0 && s.c == 0)
        return summary(1, {"open (transitive action)"});
      if (s.a == 0) {
        if (s.c <= 0)
          return summary(2, {"divisor H_x0 ≅ P1×P1", "open complement"});
        return summary(3, {"divisor H_x0 ≅ P1×P1", "divisor H_x1 ≅ P1×P1",
                           "open complement"});
      }
      return std::nullopt;
    case Family::R:
      if (s.a == 0 && s.b == 0) return summary(1, {"open (transitive action)"});
      if (s.b == 0 && s.a >= 2)
        return summary(2, {"divisor H = (x0=0) ≅ P1×P1", "open complement"});
      return std::nullopt;
    case Family::P:
      if (s.b == 0) return summary(1, {"open (transitive action)"});
      if (s.b >= 2) return summary(2, {"divisor D ≅ P2 (y0=0)", "open complement"});
      return std::nullopt;
    case Family::S:
      if (s.b == 1) return summary(1, {"open (transitive action)"});
      return summary(4, {"curve gamma", "D minus gamma", "E minus gamma",
                         "open orbit"});
    case Family::U:
      if (s.a == 1 && s.c == 2)
        return summary(4, {"curve l00", "H_x minus l00", "H_y minus l00",
                           "open orbit"});
      return std::nullopt;
    case Family::V:
      if (s.b >= 2)
        return summary(3, {"curve f'", "H' minus f'", "open orbit"});
      return std::nullopt;
    case Family::W:
      return summary(5, {"singular point q1", "singular point q2 = l ∩ D",
                         "invariant fibre l minus its two points",
                         "section D ≅ P(1,1,2) minus q2", "open orbit"});
    case Family::P1112:
      return summary(2, {"singular point", "open complement"});
    case Family::P1123:
      return summary(4, {"singular point p1 = [0:0:1:0]",
                         "singular point p2 = [0:0:0:1]",
                         "curve [0:0:*:*] minus the singular points",
                         "open complement"});
    case Family::Q: {
      if (is_square(s.g)) return std::nullopt;
      RootStats st = root_stats(s.g);
      if (st.degree >= 4 && st.distinct_roots >= 3) {
        OrbitSummary o;
        o.count = std::nullopt;
        o.labels = {
            "two orbits over each point of P1 where g does not vanish: the "
            "conic Gamma_p and its complement in the fibre",
            "three orbits over each root of g: the cone vertex, the conic "
            "Gamma_p, and their complement in the fibre"};
        return o;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace sarkisov
