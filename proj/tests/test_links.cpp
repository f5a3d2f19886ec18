#include <doctest.h>

#include <algorithm>

#include "sarkisov/links.hpp"
#include "sarkisov/parse.hpp"

using namespace sarkisov;

namespace {

MoriFibreSpace sp(const std::string& text) { return parse_space(text); }

std::vector<std::string> link_lines(const MoriFibreSpace& s) {
  std::vector<std::string> out;
  for (const auto& l : enumerate_links(s).links)
    out.push_back(l.id_str() + " -> " + space_key(l.target));
  return out;
}

}  // namespace

TEST_CASE("catalog") {
  const auto& cat = link_catalog();
  REQUIRE(cat.size() == 16);
  for (size_t i = 0; i < cat.size(); ++i)
    CHECK(cat[i].id == static_cast<int>(i) + 1);
  CHECK(cat[5].target_shape == "P1112");
  CHECK(cat[4].type == SarkisovType::II);
  CHECK(cat[7].type == SarkisovType::IV);
  CHECK(cat[8].type == SarkisovType::I);
}

TEST_CASE("enumerations match the catalog lists") {
  CHECK(link_lines(sp("P1123")) ==
        std::vector<std::string>({"S9 -> R[3,1]", "S10^-1 -> W[2]"}));
  CHECK(link_lines(sp("W[3]")) ==
        std::vector<std::string>({"S14 -> F[2,2,-1]", "S15 -> F[2,3,1]"}));
  CHECK(link_lines(sp("W[2]")) ==
        std::vector<std::string>(
            {"S10 -> P1123", "S14 -> F[2,1,-1]", "S15 -> F[2,2,1]"}));
  CHECK(link_lines(sp("F[0,3,2]")).empty());
  CHECK(link_lines(sp("F[2,1,-1]")) ==
        std::vector<std::string>(
            {"S7 -> R[3,1]", "S11 -> F[2,2,1]", "S14^-1 -> W[2]"}));
  CHECK(link_lines(sp("R[1,1]")) ==
        std::vector<std::string>({"S7^-1 -> F[0,1,-1]", "S8 -> R[1,1]"}));
  CHECK(link_lines(sp("R[3,1]")) ==
        std::vector<std::string>({"S7^-1 -> F[2,1,-1]", "S9^-1 -> P1123"}));
  CHECK(link_lines(sp("R[5,2]")) ==
        std::vector<std::string>({"S7^-1 -> F[3,1,-2]"}));
  CHECK(link_lines(sp("F[0,4,-1]")) ==
        std::vector<std::string>({"S7 -> R[4,4]"}));
  CHECK(link_lines(sp("V[4]")) ==
        std::vector<std::string>({"S13^-1 -> U[1,4,2]"}));
  CHECK(link_lines(sp("U[1,4,2]")) ==
        std::vector<std::string>({"S12 -> U[1,5,3]", "S13 -> V[4]"}));
  CHECK(link_lines(sp("U[1,5,3]")) ==
        std::vector<std::string>({"S12 -> U[1,6,4]", "S12^-1 -> U[1,4,2]"}));
  CHECK(link_lines(sp("F[0,2,0]")) ==
        std::vector<std::string>({"S4 -> F[2,0,0]"}));
  CHECK(link_lines(sp("F[3,0,0]")) ==
        std::vector<std::string>({"S4^-1 -> F[0,3,0]"}));

  // The two factor-exchange links of (P1)^3 and the two section contractions
  // of F[0,1,-1] are distinguished by variant.
  auto p13 = enumerate_links(sp("F[0,0,0]")).links;
  REQUIRE(p13.size() == 2);
  CHECK(p13[0].variant != p13[1].variant);
  auto f01 = enumerate_links(sp("F[0,1,-1]")).links;
  REQUIRE(f01.size() == 2);
  CHECK(f01[0].id == 7);
  CHECK(spaces_equal(f01[0].target, sp("R[1,1]")));
}

TEST_CASE("Q enumerations") {
  // Squarefree: no inverse links, only the forward family descriptor.
  // g = u0 u1 (u0+u1)(u0-2u1).
  BinaryForm g = parse_form("u0") * parse_form("u1") * parse_form("u0+u1") *
                 parse_form("u0-2*u1");
  LinkEnumeration e = enumerate_links(MoriFibreSpace::Q(g));
  CHECK(e.links.empty());
  CHECK(e.infinite_family.has_value());
  CHECK(!e.extension_note.has_value());

  // Repeated rational factor: one inverse link dividing it out.
  BinaryForm rep = g * parse_form("u0-u1") * parse_form("u0-u1");
  LinkEnumeration e2 = enumerate_links(MoriFibreSpace::Q(rep));
  REQUIRE(e2.links.size() == 1);
  CHECK(e2.links[0].id == 16);
  CHECK(e2.links[0].inverse);
  CHECK(spaces_equal(e2.links[0].target, MoriFibreSpace::Q(g)));

  // A repeated factor whose square cannot be removed (the quotient would
  // drop below the catalog conditions) is not enumerated.
  BinaryForm low = parse_form("u0^2") * parse_form("u1") * parse_form("u0+u1");
  LinkEnumeration e3 = enumerate_links(MoriFibreSpace::Q(low));
  CHECK(e3.links.empty());

  // Repeated irrational factor: reported, not enumerated.
  BinaryForm irr = g * parse_form("u0^2+u1^2") * parse_form("u0^2+u1^2");
  LinkEnumeration e4 = enumerate_links(MoriFibreSpace::Q(irr));
  CHECK(e4.links.empty());
  CHECK(e4.extension_note.has_value());
}

TEST_CASE("non-maximal spaces get witnesses instead of links") {
  LinkEnumeration e = enumerate_links(sp("P[1]"));
  CHECK(e.links.empty());
  REQUIRE(e.not_maximal_witness.has_value());
  CHECK(e.not_maximal_witness->target.family == Family::P3);

  LinkEnumeration q2 = enumerate_links(sp("Q[u0^3*u1]"));
  CHECK(q2.links.empty());
  REQUIRE(q2.not_maximal_witness.has_value());
  CHECK(q2.not_maximal_witness->target.family == Family::Q3);
}

TEST_CASE("apply") {
  CHECK(spaces_equal(apply_link(sp("F[2,1,-1]"), 11, false), sp("F[2,2,1]")));
  CHECK(spaces_equal(apply_link(sp("U[1,4,2]"), 12, false), sp("U[1,5,3]")));
  CHECK(spaces_equal(apply_link(sp("F[0,2,-1]"), 7, false), sp("R[2,2]")));
  CHECK(spaces_equal(apply_link(sp("R[0,0]"), 2, false), sp("P[0]")));
  CHECK(spaces_equal(apply_link(sp("P1123"), 10, true), sp("W[2]")));

  // S16 with payload u0 - u1.
  BinaryForm g = parse_form("u0") * parse_form("u1") * parse_form("u0+u1") *
                 parse_form("u0-2*u1");
  BinaryForm h = parse_form("u0-u1");
  MoriFibreSpace out = apply_link(MoriFibreSpace::Q(g), 16, false, h);
  CHECK(spaces_equal(out, MoriFibreSpace::Q(g * h * h)));
  // The payload enters only through its square, so the sign is irrelevant.
  CHECK(spaces_equal(apply_link(MoriFibreSpace::Q(g), 16, false,
                                parse_form("u1-u0")),
                     out));

  CHECK_THROWS_AS(apply_link(sp("P3"), 11, false), link_error);
  CHECK_THROWS_AS(apply_link(sp("F[0,2,0]"), 11, false), link_error);
  CHECK_THROWS_AS(apply_link(sp("P[3]"), 6, false), link_error);
  CHECK_THROWS_AS(apply_link(MoriFibreSpace::Q(g), 16, false), link_error);
  CHECK_THROWS_AS(
      apply_link(MoriFibreSpace::Q(g), 16, false, parse_form("u0^2")),
      link_error);
  // Inverse S16 needs the square to divide.
  CHECK_THROWS_AS(apply_link(MoriFibreSpace::Q(g), 16, true, h), link_error);
}

TEST_CASE("inverse round trips") {
  for (const char* text : {"F[2,1,-1]", "U[1,4,2]", "R[3,1]", "W[2]", "S[4]",
                           "P[2]", "P1123", "V[3]", "F[0,2,0]"}) {
    MoriFibreSpace s = sp(text);
    for (const SarkisovLink& l : enumerate_links(s).links) {
      MoriFibreSpace there = apply_link(s, l);
      CHECK(spaces_equal(there, l.target));
      MoriFibreSpace back = apply_link(there, inverse(l));
      CHECK(spaces_equal(back, s));
      // inverse is an involution on links.
      SarkisovLink twice = inverse(inverse(l));
      CHECK(twice.id == l.id);
      CHECK(twice.inverse == l.inverse);
      CHECK(spaces_equal(twice.target, l.target));
    }
  }
  // S5 is an involution.
  CHECK(spaces_equal(apply_link(sp("S[4]"), 5, false), sp("S[4]")));
  // Types swap I <-> III under inversion.
  SarkisovLink s9 = enumerate_links(sp("P1123")).links[0];
  CHECK(s9.type == SarkisovType::I);
  CHECK(inverse(s9).type == SarkisovType::III);
}

TEST_CASE("find_path") {
  auto p = find_path(sp("R[3,1]"), sp("W[2]"), 6, 12);
  REQUIRE(p.has_value());
  REQUIRE(p->size() == 2);
  CHECK(spaces_equal((*p)[0].target, sp("P1123")));
  CHECK(spaces_equal((*p)[1].target, sp("W[2]")));
  CHECK((*p)[0].id_str() == "S9^-1");
  CHECK((*p)[1].id_str() == "S10^-1");

  auto p2 = find_path(sp("F[0,2,0]"), sp("F[2,0,0]"), 6, 12);
  REQUIRE(p2.has_value());
  REQUIRE(p2->size() == 1);
  CHECK((*p2)[0].id == 4);

  CHECK(!find_path(sp("P[3]"), sp("P[2]"), 6, 12).has_value());
  CHECK(find_path(sp("S[4]"), sp("S[4]"), 6, 12)->empty());

  // Q-to-Q paths instantiate the forward family under the degree cap.
  BinaryForm g = parse_form("u0") * parse_form("u1") * parse_form("u0+u1") *
                 parse_form("u0-2*u1");
  BinaryForm h = parse_form("u0-u1");
  auto qp = find_path(MoriFibreSpace::Q(g), MoriFibreSpace::Q(g * h * h), 3, 6);
  REQUIRE(qp.has_value());
  CHECK(qp->size() == 1);
  CHECK((*qp)[0].id == 16);

  CHECK_THROWS_AS(find_path(sp("P[1]"), sp("P3"), 3, 8), link_error);
}

TEST_CASE("canonical representatives") {
  // Odd part for Q.
  BinaryForm g = parse_form("u0^3") * parse_form("u1") * parse_form("u0+u1") *
                 parse_form("u0-u1").pow(3);
  MoriFibreSpace rep = canonical_representative(MoriFibreSpace::Q(g));
  BinaryForm expected = parse_form("u0") * parse_form("u1") *
                        parse_form("u0+u1") * parse_form("u0-u1");
  CHECK(spaces_equal(rep, MoriFibreSpace::Q(expected)));

  // Descending elementary links for U and F. The chains through F[2,b,1]
  // and F[2,b-1,-1] for fixed b share a base point, one per W component:
  // F[2,4,3] -> F[2,3,1] -> F[2,2,-1] (the W[3] component), while
  // F[2,3,3] -> F[2,2,1] -> F[2,1,-1] (the W[2] component).
  CHECK(spaces_equal(canonical_representative(sp("U[1,6,4]")), sp("U[1,4,2]")));
  CHECK(spaces_equal(canonical_representative(sp("F[2,2,1]")), sp("F[2,1,-1]")));
  CHECK(spaces_equal(canonical_representative(sp("F[2,3,3]")), sp("F[2,1,-1]")));
  CHECK(spaces_equal(canonical_representative(sp("F[2,4,3]")), sp("F[2,2,-1]")));
  CHECK(spaces_equal(canonical_representative(sp("W[3]")), sp("W[3]")));

  // Idempotence.
  for (const char* text : {"U[1,6,4]", "F[2,4,3]", "S[5]", "R[3,1]"}) {
    MoriFibreSpace r1 = canonical_representative(sp(text));
    CHECK(spaces_equal(canonical_representative(r1), r1));
  }

  // S16 commutes with the canonical representative.
  BinaryForm base = parse_form("u0") * parse_form("u1") * parse_form("u0+u1") *
                    parse_form("u0-2*u1");
  BinaryForm h = parse_form("u0+3*u1");
  MoriFibreSpace up = apply_link(MoriFibreSpace::Q(base), 16, false, h);
  CHECK(spaces_equal(canonical_representative(up),
                     canonical_representative(MoriFibreSpace::Q(base))));
}

TEST_CASE("enumerations are duplicate-free") {
  for (const char* text :
       {"F[0,0,0]", "F[0,1,-1]", "F[2,1,-1]", "W[2]", "R[1,1]", "R[3,1]",
        "U[1,4,2]", "U[2,3,2]", "P1123", "S[5]"}) {
    auto links = enumerate_links(sp(text)).links;
    for (size_t i = 0; i < links.size(); ++i)
      for (size_t j = i + 1; j < links.size(); ++j) {
        bool same = links[i].id == links[j].id &&
                    links[i].inverse == links[j].inverse &&
                    links[i].variant == links[j].variant &&
                    spaces_equal(links[i].target, links[j].target);
        CHECK(!same);
      }
  }
  CHECK(enumerate_links(sp("U[2,3,2]")).links.size() == 1);
}

TEST_CASE("neighborhood DOT export") {
  std::string dot = neighborhood_dot(sp("P1123"), 1);
  CHECK(dot.find("digraph links") != std::string::npos);
  CHECK(dot.find("\"P1123\"") != std::string::npos);
  CHECK(dot.find("\"R[3,1]\"") != std::string::npos);
  CHECK(dot.find("\"W[2]\"") != std::string::npos);
  CHECK(dot.find("label=\"S9\"") != std::string::npos);
}
