#include <doctest.h>

#include <deque>
#include <set>

#include "sarkisov/parse.hpp"
#include "sarkisov/spaces.hpp"
#include "sarkisov/toric.hpp"

using namespace sarkisov;

namespace {

MoriFibreSpace sp(const std::string& text) { return parse_space(text); }

// Independent oracle: close the orbit of (m,n) under the two coordinate
// permutations and select the member with m >= n >= 0.
std::pair<long long, long long> r_normal_form_bruteforce(long long m,
                                                         long long n) {
  std::set<std::pair<long long, long long>> orbit;
  std::deque<std::pair<long long, long long>> work{{m, n}};
  while (!work.empty()) {
    auto p = work.front();
    work.pop_front();
    if (!orbit.insert(p).second) continue;
    work.push_back({p.second, p.first});
    work.push_back({p.first - p.second, -p.second});
  }
  for (auto [a, b] : orbit)
    if (a >= b && b >= 0) return {a, b};
  REQUIRE(false);
  return {0, 0};
}

}  // namespace

TEST_CASE("validate") {
  auto v = validate(MoriFibreSpace::U(2, 3, 5));
  CHECK(!v.ok);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0] == "2 does not divide 5-2");

  auto v2 = validate(MoriFibreSpace::U(2, 2, 4));
  CHECK(v2.ok);
  CHECK(MoriFibreSpace::U(2, 2, 4).k() == 1);

  CHECK(!validate(MoriFibreSpace::U(2, 1, 8)).ok);  // k = 3 > b
  CHECK(!validate(MoriFibreSpace::F(-2, 1, 1)).ok);
  CHECK(!validate(MoriFibreSpace::W(1)).ok);
  CHECK(!validate(MoriFibreSpace::S(0)).ok);
  CHECK(!validate(MoriFibreSpace::Q(parse_form("u0"))).ok);  // odd degree

  auto vq = validate(sp("Q[u0^2*u1^2]"));
  CHECK(vq.ok);
  CHECK(vq.q_not_mori_fibration);
  CHECK(!validate(sp("Q[u0*u1]")).q_not_mori_fibration);
}

TEST_CASE("normalize") {
  CHECK(spaces_equal(normalize(MoriFibreSpace::R(1, 3)), MoriFibreSpace::R(3, 1)));
  CHECK(render_space(normalize(sp("R[1,3]"))) == "R[3,1]");
  CHECK(render_space(normalize(sp("F[0,-2,1]"))) == "F[0,2,-1]");
  CHECK(render_space(normalize(sp("R[2,5]"))) == "R[5,2]");
  CHECK(render_space(normalize(sp("P[-3]"))) == "P[3]");
  CHECK(render_space(normalize(sp("Q[6*u0*u1]"))) == "Q[u0*u1]");

  // a = 0 tie-breaking: (b,b) and (b,-b) representatives.
  CHECK(render_space(normalize(sp("F[0,-2,-2]"))) == "F[0,2,2]");
  CHECK(render_space(normalize(sp("F[0,-2,2]"))) == "F[0,2,-2]");
  CHECK(render_space(normalize(sp("F[0,1,-1]"))) == "F[0,1,-1]");

  // Against the brute-force orbit oracle.
  for (long long m = -6; m <= 6; ++m)
    for (long long n = -6; n <= 6; ++n) {
      auto [em, en] = r_normal_form_bruteforce(m, n);
      MoriFibreSpace got = normalize(MoriFibreSpace::R(m, n));
      CHECK(got.a == em);
      CHECK(got.b == en);
    }

  // Idempotence over a grid.
  for (long long a : {0LL, 2LL, 3LL})
    for (long long b = -4; b <= 4; ++b)
      for (long long c = -4; c <= 4; ++c) {
        MoriFibreSpace s = MoriFibreSpace::F(a, b, c);
        MoriFibreSpace n1 = normalize(s);
        CHECK(spaces_equal(normalize(n1), n1));
        CHECK(render_space(normalize(n1)) == render_space(n1));
      }
}

TEST_CASE("spaces_equal distinguishes fibrations") {
  CHECK(spaces_equal(sp("F[0,0,0]"), sp("F[0,0,0]")));
  // Same total space, different Mori fibrations.
  CHECK(!spaces_equal(sp("F[2,0,0]"), sp("F[0,2,0]")));
  CHECK(!spaces_equal(sp("R[0,0]"), sp("P[0]")));
  CHECK(spaces_equal(sp("Q[u0*u1]"), sp("Q[3*u0*u1]")));

  // Equivalence relation on a sample.
  std::vector<MoriFibreSpace> sample = {
      sp("F[2,1,-1]"), sp("F[2,1,-1]"), sp("R[1,3]"), sp("R[3,1]"),
      sp("Q[u0*u1]"),  sp("Q[2*u0*u1]")};
  for (const auto& x : sample) CHECK(spaces_equal(x, x));
  for (const auto& x : sample)
    for (const auto& y : sample) CHECK(spaces_equal(x, y) == spaces_equal(y, x));
}

TEST_CASE("maximality verdicts") {
  auto v = is_maximal(sp("F[2,1,-1]"));
  CHECK(v.status == Maximality::Maximal);
  CHECK(v.provenance == "family (a)");

  auto u = is_maximal(sp("U[1,3,3]"));
  CHECK(u.status == Maximality::NotMaximal);
  REQUIRE(u.witness.has_value());
  CHECK(u.witness->target.family == Family::Q3);

  // u0*u1*(u0^2+u1^2): odd part of degree 4, no rational factorization needed.
  auto q = is_maximal(sp("Q[u0^3*u1 + u0*u1^3]"));
  CHECK(q.status == Maximality::Maximal);
  CHECK(q.provenance == "family (h)");

  auto r = is_maximal(sp("R[2,1]"));
  CHECK(r.status == Maximality::NotMaximal);
  REQUIRE(r.witness.has_value());
  CHECK(spaces_equal(r.witness->target, MoriFibreSpace::F(1, 1, -1)));

  CHECK(is_maximal(sp("P3")).provenance == "Umemura [P1]");
  CHECK(is_maximal(sp("Q3")).provenance == "Umemura [P2]");
  CHECK(is_maximal(sp("P1112")).status == Maximality::Maximal);
  CHECK(is_maximal(sp("P1123")).status == Maximality::Maximal);
  CHECK(is_maximal(sp("W[4]")).status == Maximality::Maximal);
  CHECK(is_maximal(sp("P[0]")).status == Maximality::Maximal);
  CHECK(is_maximal(sp("P[1]")).witness->target.family == Family::P3);
  CHECK(is_maximal(sp("S[2]")).witness->description ==
        "blow-down of twisted cubic to P3");
  CHECK(is_maximal(sp("V[2]")).witness->target.family == Family::Q3);

  // Q maximality depends only on the degree of the odd part.
  CHECK(is_maximal(sp("Q[u0^5*u1 + u0^3*u1^3]")).status ==
        Maximality::Maximal);  // u0^3 u1 (u0^2+u1^2): odd part degree 6
  CHECK(is_maximal(sp("Q[u0^3*u1]")).status == Maximality::NotMaximal);
  CHECK_THROWS_AS(is_maximal(sp("Q[u0^2*u1^2]")), space_error);
}

TEST_CASE("every grid space gets a decided verdict with a valid witness") {
  std::vector<MoriFibreSpace> grid;
  for (long long a : {0LL, 2LL, 3LL, 4LL, 5LL})
    for (long long b = 0; b <= 6; ++b)
      for (long long c = -12; c <= 12; ++c) grid.push_back(MoriFibreSpace::F(a, b, c));
  for (long long m = 0; m <= 8; ++m)
    for (long long n = 0; n <= 8; ++n) grid.push_back(MoriFibreSpace::R(m, n));
  for (long long a = 1; a <= 4; ++a)
    for (long long b = 1; b <= 6; ++b)
      for (long long k = 0; k <= b; ++k)
        grid.push_back(MoriFibreSpace::U(a, b, a * k + 2));
  for (long long b = 0; b <= 8; ++b) grid.push_back(MoriFibreSpace::P(b));
  for (long long b = 1; b <= 8; ++b) {
    grid.push_back(MoriFibreSpace::S(b));
    grid.push_back(MoriFibreSpace::V(b));
  }
  for (long long b = 2; b <= 8; ++b) grid.push_back(MoriFibreSpace::W(b));

  for (const auto& s : grid) {
    if (!validate(s).ok) continue;
    MaximalityVerdict v = is_maximal(s);
    CHECK(v.status != Maximality::UnknownFano);
    if (v.status == Maximality::NotMaximal) {
      REQUIRE(v.witness.has_value());
      CHECK(validate(v.witness->target).ok);
    }
  }
}

TEST_CASE("witness routes") {
  auto w = non_maximality_witness(sp("P[1]"));
  CHECK(w.kind == WitnessKind::Witness);
  CHECK(w.witness->target.family == Family::P3);
  CHECK(w.witness->description.find("[0:0:0:1]") != std::string::npos);

  CHECK(non_maximality_witness(sp("S[2]")).witness->target.family == Family::P3);
  CHECK(non_maximality_witness(sp("P3")).kind == WitnessKind::None);

  // b >= 2 with a(b-1) <= c < ab reduces to R[a, c-a(b-1)].
  auto f = non_maximality_witness(sp("F[2,3,5]"));
  CHECK(f.kind == WitnessKind::Witness);
  CHECK(spaces_equal(f.witness->target, MoriFibreSpace::R(2, 1)));

  auto f2 = non_maximality_witness(sp("F[2,1,0]"));
  CHECK(spaces_equal(f2.witness->target, MoriFibreSpace::R(2, 0)));

  // Low c: climb to the maximal member of the chain.
  auto f3 = non_maximality_witness(sp("F[2,1,-5]"));
  CHECK(f3.kind == WitnessKind::Witness);
  CHECK(is_maximal(f3.witness->target).status == Maximality::Maximal);

  // Outside the classified families.
  CHECK(non_maximality_witness(sp("U[2,1,4]")).kind == WitnessKind::OffList);
  CHECK(non_maximality_witness(sp("U[1,3,5]")).kind == WitnessKind::OffList);
  CHECK(non_maximality_witness(sp("V[1]")).kind == WitnessKind::OffList);
}

TEST_CASE("automorphism info") {
  auto q = aut_info(sp("Q[u0*u1]"));
  CHECK(q.dimension == 4);
  CHECK(q.description == "PGL2×Gm");
  CHECK(aut_info(sp("Q[u0^3*u1+u0*u1^3]")).dimension == 3);

  auto s7 = aut_info(sp("S[7]"));
  CHECK(s7.dimension == 3);
  CHECK(s7.description == "PGL2");
  CHECK(aut_info(sp("S[1]")).dimension == 8);

  // Graded-matrix count for R[3,1], spelled out entry by entry.
  long long expected = 0;
  for (long long d : {0LL, -2LL, -3LL, 2LL, 0LL, -1LL, 3LL, 1LL, 0LL})
    expected += std::max(0LL, d + 1);
  CHECK(expected == 12);
  CHECK(aut_info(sp("R[3,1]")).dimension == expected - 1 + 3);

  // Decomposable-bundle count for F[2,1,-1] through the section-space oracle.
  CHECK(lattice_h0(2, 1, 1) == 6);
  CHECK(aut_info(sp("F[2,1,-1]")).dimension == 7 + 1 + 6);

  CHECK(aut_info(sp("P3")).dimension == 15);
  CHECK(aut_info(sp("Q3")).dimension == 10);
  CHECK(aut_info(sp("F[0,0,0]")).dimension == 9);
  CHECK(aut_info(sp("R[0,0]")).dimension == 11);
  CHECK(aut_info(sp("P[0]")).dimension == 11);
  CHECK(aut_info(sp("P[2]")).dimension == 15);
  CHECK(aut_info(sp("P1112")).dimension == 15);
  CHECK(aut_info(sp("P1123")).dimension == 14);
  CHECK(aut_info(sp("W[2]")).dimension == 14);
  CHECK(!aut_info(sp("U[1,4,2]")).dimension.has_value());
  CHECK(!aut_info(sp("V[4]")).dimension.has_value());

  // R[1,0] is the blow-up of a line in P3: the line stabilizer has
  // dimension 15 - 4.
  CHECK(aut_info(sp("R[1,0]")).dimension == 11);
  // P[1] is the blow-up of a point in P3: the point stabilizer.
  CHECK(aut_info(sp("P[1]")).dimension == 12);
}

TEST_CASE("orbit structure") {
  auto s4 = orbit_structure(sp("S[4]"));
  REQUIRE(s4.has_value());
  CHECK(s4->count == 4);
  REQUIRE(s4->labels.size() == 4);
  CHECK(s4->labels[0] == "curve gamma");

  CHECK(orbit_structure(sp("W[5]"))->count == 5);
  CHECK(orbit_structure(sp("V[4]"))->count == 3);
  CHECK(orbit_structure(sp("U[1,4,2]"))->count == 4);
  CHECK(orbit_structure(sp("P1123"))->count == 4);
  CHECK(orbit_structure(sp("P1112"))->count == 2);
  CHECK(orbit_structure(sp("P[3]"))->count == 2);
  CHECK(orbit_structure(sp("P3"))->count == 1);
  CHECK(orbit_structure(sp("S[1]"))->count == 1);
  CHECK(orbit_structure(sp("R[4,0]"))->count == 2);
  CHECK(orbit_structure(sp("F[0,3,-2]"))->count == 2);
  CHECK(orbit_structure(sp("F[0,3,2]"))->count == 3);
  CHECK(!orbit_structure(sp("R[3,1]")).has_value());
  CHECK(!orbit_structure(sp("U[2,2,4]")).has_value());

  // Q with at least three roots: families of orbits, no finite count.
  auto q = orbit_structure(sp("Q[u0^3*u1 + u0*u1^3]"));
  REQUIRE(q.has_value());
  CHECK(!q->count.has_value());
  CHECK(q->labels.size() == 2);
}
