#include "sarkisov/selfcheck.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "sarkisov/intersection.hpp"
#include "sarkisov/links.hpp"
#include "sarkisov/parse.hpp"
#include "sarkisov/spaces.hpp"
#include "sarkisov/toric.hpp"

namespace sarkisov {

namespace {

struct Tally {
  long long checks = 0;
  long long failures = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (failures <= 5) detail << what << "; ";
    }
  }

  CheckResult result(const std::string& name) {
    CheckResult r;
    r.name = name;
    r.pass = failures == 0;
    std::ostringstream os;
    if (r.pass) {
      os << checks << " checks";
    } else {
      os << failures << "/" << checks << " failed: " << detail.str();
    }
    r.detail = os.str();
    return r;
  }
};

std::string describe(const MoriFibreSpace& s) { return space_key(s); }

// Normalized representatives of the sweep grids.
std::vector<MoriFibreSpace> f_grid(long long bmax, long long cmax) {
  std::vector<MoriFibreSpace> out;
  for (long long a : {0LL, 2LL, 3LL, 4LL, 5LL})
    for (long long b = 0; b <= bmax; ++b)
      for (long long c = -cmax; c <= cmax; ++c) {
        if (b == 0 && c > 0) continue;
        if (a == 0 && b < std::llabs(c)) continue;
        out.push_back(MoriFibreSpace::F(a, b, c));
      }
  return out;
}

std::vector<MoriFibreSpace> r_grid(long long mmax) {
  std::vector<MoriFibreSpace> out;
  for (long long m = 0; m <= mmax; ++m)
    for (long long n = 0; n <= m; ++n) out.push_back(MoriFibreSpace::R(m, n));
  return out;
}

std::vector<MoriFibreSpace> u_grid(long long amax, long long bmax) {
  std::vector<MoriFibreSpace> out;
  for (long long a = 1; a <= amax; ++a)
    for (long long b = 1; b <= bmax; ++b)
      for (long long k = 0; k <= b; ++k)
        out.push_back(MoriFibreSpace::U(a, b, a * k + 2));
  return out;
}

std::vector<BinaryForm> q_form_pool(int max_degree) {
  // Products of small linear and irreducible quadratic forms.
  std::vector<BinaryForm> lin = {
      parse_form("u0"), parse_form("u1"), parse_form("u0+u1"),
      parse_form("u0-u1"), parse_form("u0+2*u1"), parse_form("u0-2*u1")};
  BinaryForm quad = parse_form("u0^2+u1^2");
  std::vector<BinaryForm> pool;
  auto push = [&](const BinaryForm& g) {
    if (g.degree() >= 2 && g.degree() % 2 == 0 && g.degree() <= max_degree)
      pool.push_back(g.primitive());
  };
  // Squarefree products of 2,4,6 distinct linear forms.
  push(lin[0] * lin[1]);
  push(lin[0] * lin[1] * lin[2] * lin[3]);
  push(lin[0] * lin[1] * lin[2] * lin[4]);
  push(lin[0] * lin[1] * lin[2] * lin[3] * lin[4] * lin[5]);
  // With repeated factors.
  push(lin[0] * lin[0] * lin[1] * lin[1]);                    // square
  push(lin[0].pow(3) * lin[1]);                               // two roots
  push(lin[0].pow(3) * lin[1].pow(5));                        // two roots
  push(lin[0] * lin[1] * lin[2] * lin[3] * lin[4].pow(2));    // one repeated
  push(lin[0].pow(2) * lin[1] * lin[2] * lin[3] * lin[4]);
  push(lin[0].pow(3) * lin[1] * lin[2] * lin[3]);
  push(lin[0].pow(2) * lin[1].pow(2) * lin[2] * lin[3]);
  // Irrational pieces.
  push(quad * lin[0] * lin[1]);
  push(quad * quad * lin[0] * lin[1]);
  push(quad.pow(2) * lin[0].pow(2) * lin[1] * lin[2]);
  push(quad * lin[0] * lin[1] * lin[2] * lin[3]);
  return pool;
}

std::vector<MoriFibreSpace> full_space_grid(const CheckOptions& opts) {
  long long bmax = opts.full_grid ? 6 : 3;
  long long cmax = opts.full_grid ? 12 : 5;
  long long mmax = opts.full_grid ? 8 : 4;
  std::vector<MoriFibreSpace> out = f_grid(bmax, cmax);
  for (auto& r : r_grid(mmax)) out.push_back(r);
  for (auto& u : u_grid(opts.full_grid ? 5 : 3, bmax)) out.push_back(u);
  for (long long b = 0; b <= bmax; ++b) out.push_back(MoriFibreSpace::P(b));
  for (long long b = 1; b <= bmax + 2; ++b) out.push_back(MoriFibreSpace::S(b));
  for (long long b = 1; b <= bmax + 2; ++b) out.push_back(MoriFibreSpace::V(b));
  for (long long b = 2; b <= bmax; ++b) out.push_back(MoriFibreSpace::W(b));
  out.push_back(MoriFibreSpace::make(Family::P3));
  out.push_back(MoriFibreSpace::make(Family::Q3));
  out.push_back(MoriFibreSpace::make(Family::P1112));
  out.push_back(MoriFibreSpace::make(Family::P1123));
  for (auto& g : q_form_pool(opts.full_grid ? 10 : 8)) {
    MoriFibreSpace q = MoriFibreSpace::Q(g);
    if (!validate(q).q_not_mori_fibration) out.push_back(q);
  }
  return out;
}

// ---- Criterion 1: intersection tables and closed-form K-degrees ----

CheckResult check_intersection_tables(const CheckOptions& opts) {
  Tally t;
  long long bmax = opts.full_grid ? 6 : 3;
  long long cmax = opts.full_grid ? 12 : 5;

  for (const auto& s : f_grid(bmax, cmax)) {
    auto d = intersection_data(s);
    long long a = s.a, b = s.b, c = s.c;
    t.expect(d.has_value(), "F table missing " + describe(s));
    if (!d) continue;
    t.expect(k_dot(*d, "l1") == a - c - 2, "F K.l1 " + describe(s));
    t.expect(k_dot(*d, "l2") == b - 2, "F K.l2 " + describe(s));
    t.expect(k_dot(*d, "l3") == -2, "F K.l3 (fibre) " + describe(s));
    t.expect(k_dot(*d, "l4") == a + c - 2, "F K.l4 " + describe(s));
    std::vector<std::string> ne_expect =
        c <= 0 ? std::vector<std::string>{"l1", "l2", "l3"}
               : std::vector<std::string>{"l4", "l2", "l3"};
    t.expect(d->ne_generators == ne_expect, "F NE " + describe(s));
    // l4 = l1 - c*l3 as a pairing identity against every divisor.
    for (const auto& div : d->divisor_labels) {
      long long lhs = pair_classes(*d, {{"l4", 1}}, {{div, 1}});
      long long rhs = pair_classes(*d, {{"l1", 1}, {"l3", -c}}, {{div, 1}});
      t.expect(lhs == rhs, "F l4=l1-c*l3 " + describe(s));
    }
  }

  long long mmax = opts.full_grid ? 8 : 4;
  for (const auto& s : r_grid(mmax)) {
    auto d = intersection_data(s);
    long long m = s.a, n = s.b;
    t.expect(d.has_value(), "R table missing " + describe(s));
    if (!d) continue;
    t.expect(k_dot(*d, "l") == m + n - 2, "R K.l " + describe(s));
    t.expect(k_dot(*d, "f") == -3, "R K.f " + describe(s));
    t.expect(d->canonical == std::vector<long long>({-3, -(2 * m - n + 2)}),
             "R canonical " + describe(s));
  }

  for (long long b = 1; b <= 8; ++b) {
    auto d = intersection_data(MoriFibreSpace::S(b));
    t.expect(d.has_value(), "S table missing");
    if (!d) continue;
    t.expect(k_dot(*d, "f") == -2, "S K.f");
    t.expect(k_dot(*d, "s1") == b - 3, "S K.s1 b=" + std::to_string(b));
    // s2 = s1 + (b+1) f.
    for (const auto& div : d->divisor_labels) {
      long long lhs = pair_classes(*d, {{"s2", 1}}, {{div, 1}});
      long long rhs = pair_classes(*d, {{"s1", 1}, {"f", b + 1}}, {{div, 1}});
      t.expect(lhs == rhs, "S s2=s1+(b+1)f");
    }
  }

  for (const auto& s : u_grid(4, 6)) {
    auto d = intersection_data(s);
    long long a = s.a, b = s.b, c = s.c, k = s.k();
    t.expect(d.has_value(), "U table missing " + describe(s));
    if (!d) continue;
    t.expect(k_dot(*d, "f") == -2, "U K.f " + describe(s));
    t.expect(k_dot(*d, "s") == b - 2, "U K.s " + describe(s));
    if (c > 2) t.expect(k_dot(*d, "l10") == a * (k + 1), "U K.l10 " + describe(s));
    if (c == 2) t.expect(k_dot(*d, "r") == a - 2, "U K.r " + describe(s));
    std::vector<std::string> ne_expect =
        c > 2 ? std::vector<std::string>{"f", "s", "l10"}
              : std::vector<std::string>{"f", "s", "r"};
    t.expect(d->ne_generators == ne_expect, "U NE " + describe(s));
    for (const auto& div : d->divisor_labels) {
      long long l10 = pair_classes(*d, {{"l10", 1}}, {{div, 1}});
      long long l10e = pair_classes(*d, {{"l00", 1}, {"f", -c}}, {{div, 1}});
      t.expect(l10 == l10e, "U l10=l00-c*f " + describe(s));
      long long r = pair_classes(*d, {{"r", 1}}, {{div, 1}});
      long long re = pair_classes(*d, {{"l00", 1}, {"f", -1}}, {{div, 1}});
      t.expect(r == re, "U r=l00-f " + describe(s));
    }
  }

  for (long long b = 1; b <= 8; ++b) {
    auto d = intersection_data(MoriFibreSpace::V(b));
    t.expect(d.has_value(), "V table missing");
    if (!d) continue;
    t.expect(k_dot(*d, "f'") == -2, "V K.f'");
    t.expect(k_dot(*d, "s'") == b - 3, "V K.s' b=" + std::to_string(b));
    t.expect(d->canonical == std::vector<long long>({-2, -(b + 1)}),
             "V canonical");
  }

  for (long long b = 0; b <= 6; ++b) {
    auto d = intersection_data(MoriFibreSpace::P(b));
    t.expect(d.has_value(), "P table missing");
    if (!d) continue;
    t.expect(k_dot(*d, "f") == -2, "P K.f");
    t.expect(k_dot(*d, "l") == b - 3, "P K.l b=" + std::to_string(b));
  }

  for (const auto& g : q_form_pool(12)) {
    MoriFibreSpace q = MoriFibreSpace::Q(g);
    if (validate(q).q_not_mori_fibration) continue;
    auto d = intersection_data(q);
    long long n = g.degree() / 2;
    t.expect(d.has_value(), "Q table missing");
    if (!d) continue;
    t.expect(k_dot(*d, "h") == n - 2, "Q K.h deg=" + std::to_string(2 * n));
    t.expect(k_dot(*d, "f") == -2, "Q K.f");
    t.expect(d->canonical == std::vector<long long>({-2, -(n + 2)}),
             "Q canonical");
  }

  return t.result("1 intersection-table reproduction");
}

// ---- Criterion 2: toric oracle agreement ----

CheckResult check_toric_oracle(const CheckOptions& opts) {
  Tally t;
  long long bmax = opts.full_grid ? 6 : 3;
  long long cmax = opts.full_grid ? 12 : 5;

  auto wall_between = [](const Fan& fan, const std::string& l1,
                         const std::string& l2) {
    int i = fan.ray_index(l1), j = fan.ray_index(l2);
    return Wall{std::min(i, j), std::max(i, j)};
  };

  for (const auto& s : f_grid(bmax, cmax)) {
    Fan fan = fan_of(s);
    auto degs = invariant_curve_K_degrees(fan);
    auto d = intersection_data(s);
    struct Probe {
      const char* ray1;
      const char* ray2;
      const char* curve;
    };
    for (const Probe& p : {Probe{"x0", "y0", "l1"}, Probe{"x0", "z0", "l2"},
                           Probe{"y0", "z0", "l3"}, Probe{"x1", "y0", "l4"}}) {
      Wall w = wall_between(fan, p.ray1, p.ray2);
      auto it = degs.find(w);
      bool found = it != degs.end() && it->second.has_value();
      t.expect(found, std::string("missing wall ") + p.curve + " " + describe(s));
      if (!found) continue;
      long long fan_deg = -(*it->second);  // map holds (-K).C
      t.expect(fan_deg == k_dot(*d, p.curve),
               std::string("F wall ") + p.curve + " " + describe(s));
    }
  }

  long long mmax = opts.full_grid ? 8 : 4;
  for (const auto& s : r_grid(mmax)) {
    Fan fan = fan_of(s);
    auto degs = invariant_curve_K_degrees(fan);
    auto d = intersection_data(s);
    Wall wl = wall_between(fan, "x0", "x1");
    Wall wf = wall_between(fan, "x0", "y0");
    auto itl = degs.find(wl), itf = degs.find(wf);
    bool okl = itl != degs.end() && itl->second.has_value();
    bool okf = itf != degs.end() && itf->second.has_value();
    t.expect(okl && okf, "missing R wall " + describe(s));
    if (okl) t.expect(-(*itl->second) == k_dot(*d, "l"), "R wall l " + describe(s));
    if (okf) t.expect(-(*itf->second) == k_dot(*d, "f"), "R wall f " + describe(s));
  }

  return t.result("2 toric oracle agreement");
}

// ---- Criterion 3: terminality of the antiflipped F[2,b,c] ----

CheckResult check_antiflip_terminality(const CheckOptions&) {
  Tally t;
  for (long long b = 2; b <= 6; ++b) {
    for (long long c : {-1LL, 0LL, 1LL, 2LL, 3LL}) {
      MoriFibreSpace s = MoriFibreSpace::F(2, b, c);
      Fan fan = fan_of(s);
      // The K-positive extremal invariant wall: (x0,y0) when c < 0,
      // (x1,y0) when c > 0. For c = 0 the ray is divisorial, not small,
      // and no antiflip exists.
      std::string ray = c < 0 ? "x0" : "x1";
      int i = fan.ray_index(ray), j = fan.ray_index("y0");
      Wall w{std::min(i, j), std::max(i, j)};
      if (c == 0) {
        bool threw = false;
        try {
          wall_flip(fan, w);
        } catch (const toric_error&) {
          threw = true;
        }
        t.expect(threw, "expected no antiflip at c=0, b=" + std::to_string(b));
        continue;
      }
      Fan flipped = wall_flip(fan, w);
      bool term = is_terminal(flipped);
      t.expect(term == (c <= 1),
               "antiflip terminality b=" + std::to_string(b) +
                   " c=" + std::to_string(c));
    }
  }
  return t.result("3 terminality law for antiflipped F[2,b,c]");
}

// ---- Criterion 4: W_b singular points and flip targets ----

CheckResult check_w_fans(const CheckOptions&) {
  Tally t;
  for (long long b = 2; b <= 5; ++b) {
    Fan fan = fan_of(MoriFibreSpace::W(b));
    auto sing = singular_cones(fan);
    t.expect(sing.size() == 2, "W singular cone count b=" + std::to_string(b));
    t.expect(is_terminal(fan), "W terminal b=" + std::to_string(b));
    t.expect(!is_smooth(fan), "W not smooth b=" + std::to_string(b));

    // Reduced blow-up of each singular point: star subdivision at the
    // half-sum ray of its cone, followed by the flip of the wall (z0,z1).
    int z0 = fan.ray_index("z0"), z1 = fan.ray_index("z1");
    Wall zwall{std::min(z0, z1), std::max(z0, z1)};
    struct Case {
      const char* y_ray;
      MoriFibreSpace target;
    };
    for (const Case& cs : {Case{"y0", MoriFibreSpace::F(2, b, 1)},
                           Case{"y1", MoriFibreSpace::F(2, b - 1, -1)}}) {
      int y = fan.ray_index(cs.y_ray);
      Ray mid{};
      for (int d = 0; d < 3; ++d)
        mid[static_cast<size_t>(d)] =
            (fan.rays[static_cast<size_t>(y)][static_cast<size_t>(d)] +
             fan.rays[static_cast<size_t>(z0)][static_cast<size_t>(d)] +
             fan.rays[static_cast<size_t>(z1)][static_cast<size_t>(d)]) /
            2;
      Fan blown = star_subdivide(fan, mid);
      t.expect(is_terminal(blown), "W blow-up terminal b=" + std::to_string(b));
      Fan flipped = wall_flip(blown, zwall);
      Fan target = fan_of(cs.target);
      t.expect(fans_isomorphic(flipped, target),
               "W flip target " + describe(cs.target));
      // And not isomorphic to the other candidate.
      MoriFibreSpace other = spaces_equal(cs.target, MoriFibreSpace::F(2, b, 1))
                                 ? MoriFibreSpace::F(2, b - 1, -1)
                                 : MoriFibreSpace::F(2, b, 1);
      t.expect(!fans_isomorphic(flipped, fan_of(other)),
               "W flip target uniqueness b=" + std::to_string(b));
    }
  }
  // b in 2..6 for the singular-count claim.
  for (long long b = 2; b <= 6; ++b) {
    Fan fan = fan_of(MoriFibreSpace::W(b));
    t.expect(singular_cones(fan).size() == 2 && is_terminal(fan),
             "W fan b=" + std::to_string(b));
  }
  return t.result("4 W_b singular points and flip targets");
}

// ---- Criterion 5: enumeration counts ----

CheckResult check_enumeration_counts(const CheckOptions&) {
  Tally t;
  auto count = [](const MoriFibreSpace& s) {
    return enumerate_links(s).links.size();
  };
  auto expect_count = [&](const MoriFibreSpace& s, size_t n) {
    size_t got = count(s);
    t.expect(got == n, describe(s) + " expected " + std::to_string(n) +
                           " links, got " + std::to_string(got));
  };
  expect_count(MoriFibreSpace::make(Family::P3), 0);
  expect_count(MoriFibreSpace::make(Family::Q3), 0);
  expect_count(MoriFibreSpace::F(0, 0, 0), 2);
  expect_count(MoriFibreSpace::R(0, 0), 1);
  expect_count(MoriFibreSpace::S(1), 1);
  for (long long b = 3; b <= 8; ++b) expect_count(MoriFibreSpace::S(b), 1);
  expect_count(MoriFibreSpace::P(2), 1);
  for (long long b = 3; b <= 8; ++b) expect_count(MoriFibreSpace::P(b), 0);
  for (long long m = 2; m <= 8; ++m) expect_count(MoriFibreSpace::R(m, 0), 0);
  expect_count(MoriFibreSpace::R(1, 1), 2);
  expect_count(MoriFibreSpace::R(3, 1), 2);
  expect_count(MoriFibreSpace::make(Family::P1123), 2);
  expect_count(MoriFibreSpace::W(2), 3);
  for (long long b = 3; b <= 6; ++b) expect_count(MoriFibreSpace::W(b), 2);
  expect_count(MoriFibreSpace::F(2, 1, -1), 3);
  expect_count(MoriFibreSpace::F(0, 3, 2), 0);
  return t.result("5 link-enumeration counts");
}

// ---- Criterion 6: closure and round trips ----

CheckResult check_closure(const CheckOptions& opts) {
  Tally t;
  for (const auto& s0 : full_space_grid(opts)) {
    if (!validate(s0).ok) continue;
    MoriFibreSpace s = normalize(s0);
    if (s.family == Family::Q && validate(s).q_not_mori_fibration) continue;
    MaximalityVerdict v = is_maximal(s);
    if (v.status != Maximality::Maximal) continue;
    for (const SarkisovLink& l : enumerate_links(s).links) {
      MoriFibreSpace applied = apply_link(s, l);
      t.expect(spaces_equal(applied, l.target),
               "apply mismatch " + l.id_str() + " at " + describe(s));
      t.expect(is_maximal(l.target).status == Maximality::Maximal,
               "non-maximal target " + describe(l.target) + " via " +
                   l.id_str() + " from " + describe(s));
      MoriFibreSpace back = apply_link(l.target, inverse(l));
      t.expect(spaces_equal(back, s),
               "round trip " + l.id_str() + " at " + describe(s));
    }
  }
  return t.result("6 closure and round trips over the sweep grid");
}

// ---- Criterion 7: automorphism-dimension invariance ----

CheckResult check_aut_invariance(const CheckOptions& opts) {
  Tally t;
  for (const auto& s0 : full_space_grid(opts)) {
    if (!validate(s0).ok) continue;
    MoriFibreSpace s = normalize(s0);
    if (s.family == Family::Q && validate(s).q_not_mori_fibration) continue;
    if (is_maximal(s).status != Maximality::Maximal) continue;
    AutInfo src = aut_info(s);
    if (!src.dimension) continue;
    for (const SarkisovLink& l : enumerate_links(s).links) {
      AutInfo tgt = aut_info(l.target);
      if (!tgt.dimension) continue;
      t.expect(*src.dimension == *tgt.dimension,
               "aut dim across " + l.id_str() + ": " + describe(s) + "=" +
                   std::to_string(*src.dimension) + " vs " +
                   describe(l.target) + "=" + std::to_string(*tgt.dimension));
    }
  }
  // The pentagon around W2 carries the single value 14.
  for (const MoriFibreSpace& s :
       {MoriFibreSpace::F(2, 1, -1), MoriFibreSpace::R(3, 1),
        MoriFibreSpace::make(Family::P1123), MoriFibreSpace::W(2),
        MoriFibreSpace::F(2, 2, 1)}) {
    AutInfo a = aut_info(s);
    t.expect(a.dimension && *a.dimension == 14,
             "dimension 14 component " + describe(s));
  }
  for (long long b = 2; b <= 6; ++b) {
    auto a1 = aut_info(MoriFibreSpace::F(2, b, 1));
    auto a2 = aut_info(MoriFibreSpace::F(2, b - 1, -1));
    t.expect(a1.dimension && a2.dimension && *a1.dimension == *a2.dimension,
             "F[2,b,1] vs F[2,b-1,-1] b=" + std::to_string(b));
  }
  return t.result("7 aut-dimension invariance across links");
}

// ---- Criterion 8: lattice_h0 closed form vs direct enumeration ----

long long lattice_h0_enumerated(long long a, long long alpha, long long beta) {
  // Polytope of alpha*s_a + beta*f on F_a: 0 <= x <= alpha, -beta <= y <= a*x.
  if (alpha < 0) return 0;
  long long count = 0;
  for (long long x = 0; x <= alpha; ++x)
    for (long long y = -beta; y <= a * x; ++y) ++count;
  return count;
}

CheckResult check_lattice_h0(const CheckOptions&) {
  Tally t;
  for (long long a = 0; a <= 4; ++a)
    for (long long alpha = 0; alpha <= 6; ++alpha)
      for (long long beta = -6; beta <= 6; ++beta)
        t.expect(lattice_h0(a, alpha, beta) ==
                     lattice_h0_enumerated(a, alpha, beta),
                 "h0(" + std::to_string(a) + "," + std::to_string(alpha) + "," +
                     std::to_string(beta) + ")");
  t.expect(lattice_h0(3, -1, 5) == 0, "alpha<0");
  return t.result("8 section-count oracle");
}

// ---- Criterion 9: binary-form laws ----

CheckResult check_binary_forms(const CheckOptions&) {
  Tally t;
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> coeff(-20, 20);
  std::uniform_int_distribution<int> degree(1, 12);
  std::uniform_int_distribution<int> lin_coeff(-5, 5);

  auto random_form = [&](int deg) {
    std::vector<mpq_class> c(static_cast<size_t>(deg) + 1);
    bool nonzero = false;
    for (auto& x : c) {
      int v = coeff(rng);
      x = v;
      if (v != 0) nonzero = true;
    }
    if (!nonzero) c[0] = 1;
    return BinaryForm(std::move(c));
  };

  for (int trial = 0; trial < 100; ++trial) {
    BinaryForm g = random_form(degree(rng));
    // Reconstruction up to a positive rational scalar.
    BinaryForm rebuilt = BinaryForm::constant(1);
    for (const auto& layer : squarefree_decomposition(g))
      rebuilt = rebuilt * layer.factor.pow(layer.multiplicity);
    t.expect(rebuilt.primitive() == g.primitive(),
             "Yun reconstruction trial " + std::to_string(trial));

    BinaryForm op = odd_part(g);
    t.expect(odd_part(op) == op, "odd_part idempotent " + std::to_string(trial));

    // Invariance under multiplying by the square of a linear form.
    int p = lin_coeff(rng), q = lin_coeff(rng);
    if (p == 0 && q == 0) p = 1;
    BinaryForm l = BinaryForm::linear(mpq_class(p), mpq_class(q));
    t.expect(odd_part(g * l * l) == op,
             "odd_part l^2-invariance " + std::to_string(trial));

    RootStats st = root_stats(g);
    t.expect(is_square(g) == (op.degree() == 0), "square iff odd degree 0");
    // distinct + sum (i-1) deg g_i = degree.
    long long excess = 0;
    bool squarefree = true;
    for (const auto& layer : squarefree_decomposition(g)) {
      excess += (layer.multiplicity - 1) *
                static_cast<long long>(layer.factor.degree());
      if (layer.multiplicity >= 2) squarefree = false;
    }
    t.expect(st.distinct_roots + excess == st.degree, "degree balance");
    t.expect((st.repeated_roots == 0) == squarefree, "repeated iff not squarefree");

    // Q-maximality depends only on the odd part.
    if (g.degree() % 2 == 0 && !is_square(g)) {
      MoriFibreSpace qs = MoriFibreSpace::Q(g);
      bool max = is_maximal(qs).status == Maximality::Maximal;
      t.expect(max == (op.degree() >= 4), "Q maximality vs odd part");
    }
  }

  // Fixed expectations.
  {
    auto layers = squarefree_decomposition(parse_form("u0^3*u1^5"));
    bool ok = layers.size() == 2 && layers[0].multiplicity == 3 &&
              layers[0].factor == parse_form("u0") &&
              layers[1].multiplicity == 5 &&
              layers[1].factor == parse_form("u1");
    t.expect(ok, "layers of u0^3*u1^5");
  }
  t.expect(is_square(parse_form("u0^4-2*u0^2*u1^2+u1^4")), "square detection");
  return t.result("9 binary-form laws");
}

// ---- Criterion 10: path search ----

CheckResult check_paths(const CheckOptions&) {
  Tally t;
  auto p1 = find_path(MoriFibreSpace::R(3, 1), MoriFibreSpace::W(2), 6, 12);
  bool ok = p1.has_value() && p1->size() == 2 &&
            spaces_equal((*p1)[0].target, MoriFibreSpace::make(Family::P1123));
  t.expect(ok, "R[3,1] -> W[2] through P1123");

  auto p2 = find_path(MoriFibreSpace::P(3), MoriFibreSpace::P(2), 6, 12);
  t.expect(!p2.has_value(), "P[3] -> P[2] none");

  // Endpoint symmetry on random maximal pairs.
  std::vector<MoriFibreSpace> pool = {
      MoriFibreSpace::make(Family::P3), MoriFibreSpace::make(Family::Q3),
      MoriFibreSpace::make(Family::P1112), MoriFibreSpace::make(Family::P1123),
      MoriFibreSpace::W(2), MoriFibreSpace::W(3), MoriFibreSpace::W(4),
      MoriFibreSpace::S(1), MoriFibreSpace::S(3), MoriFibreSpace::S(5),
      MoriFibreSpace::V(3), MoriFibreSpace::V(4), MoriFibreSpace::P(2),
      MoriFibreSpace::P(4), MoriFibreSpace::R(0, 0), MoriFibreSpace::R(1, 1),
      MoriFibreSpace::R(3, 1), MoriFibreSpace::R(2, 2), MoriFibreSpace::R(5, 2),
      MoriFibreSpace::F(0, 0, 0), MoriFibreSpace::F(0, 1, -1),
      MoriFibreSpace::F(0, 2, 0), MoriFibreSpace::F(2, 1, -1),
      MoriFibreSpace::F(2, 2, 1), MoriFibreSpace::F(3, 2, 2),
      MoriFibreSpace::U(1, 4, 2), MoriFibreSpace::U(1, 5, 3),
      MoriFibreSpace::U(2, 3, 2), MoriFibreSpace::P(0)};
  std::mt19937 rng(1729);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 20; ++i) {
    const MoriFibreSpace& x = pool[pick(rng)];
    const MoriFibreSpace& y = pool[pick(rng)];
    auto fwd = find_path(x, y, 6, 12);
    auto bwd = find_path(y, x, 6, 12);
    t.expect(fwd.has_value() == bwd.has_value(),
             "symmetry " + describe(x) + " <-> " + describe(y));
    if (fwd && bwd)
      t.expect(fwd->size() == bwd->size(),
               "length symmetry " + describe(x) + " <-> " + describe(y));
  }
  return t.result("10 path search");
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks(const CheckOptions& opts) {
  std::vector<CheckResult> out;
  out.push_back(check_intersection_tables(opts));
  out.push_back(check_toric_oracle(opts));
  out.push_back(check_antiflip_terminality(opts));
  out.push_back(check_w_fans(opts));
  out.push_back(check_enumeration_counts(opts));
  out.push_back(check_closure(opts));
  out.push_back(check_aut_invariance(opts));
  out.push_back(check_lattice_h0(opts));
  out.push_back(check_binary_forms(opts));
  out.push_back(check_paths(opts));
  return out;
}

}  // namespace sarkisov
