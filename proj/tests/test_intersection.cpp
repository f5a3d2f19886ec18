#include <doctest.h>

#include "sarkisov/intersection.hpp"
#include "sarkisov/parse.hpp"

using namespace sarkisov;

namespace {

IntersectionData data(const std::string& text) {
  auto d = intersection_data(parse_space(text));
  REQUIRE(d.has_value());
  return *d;
}

}  // namespace

TEST_CASE("R[3,1] table") {
  IntersectionData d = data("R[3,1]");
  CHECK(d.canonical == std::vector<long long>({-3, -7}));  // K = -3H - 7F
  CHECK(k_dot(d, "l") == 2);
  CHECK(k_dot(d, "f") == -3);
  CHECK(pair_classes(d, {{"l", 1}}, {{"H", 1}}) == -3);
  CHECK(pair_classes(d, {{"l", 1}}, {{"F", 1}}) == 1);
  CHECK(pair_classes(d, {{"f", 1}}, {{"H", 1}}) == 1);
  CHECK(pair_classes(d, {{"f", 1}}, {{"F", 1}}) == 0);
  // Bilinearity: (l + 2f).H = -3 + 2.
  CHECK(pair_classes(d, {{"l", 1}, {"f", 2}}, {{"H", 1}}) == -1);
}

TEST_CASE("F[2,3,1] table") {
  IntersectionData d = data("F[2,3,1]");
  CHECK(k_dot(d, "l1") == -1);
  CHECK(k_dot(d, "l2") == 1);
  CHECK(k_dot(d, "l3") == -2);
  CHECK(k_dot(d, "l4") == 1);
  CHECK(d.ne_generators == std::vector<std::string>({"l4", "l2", "l3"}));
  IntersectionData d2 = data("F[2,1,-1]");
  CHECK(d2.ne_generators == std::vector<std::string>({"l1", "l2", "l3"}));
}

TEST_CASE("U[2,2,4] table") {
  IntersectionData d = data("U[2,2,4]");
  // lambda = c = 4 here.
  CHECK(pair_classes(d, {{"l00", 1}}, {{"Hx", 1}}) == 4);
  CHECK(d.canonical == std::vector<long long>({-2, -4, -4}));
  CHECK(k_dot(d, "l10") == 4);  // a(k+1) with k = 1
  CHECK(k_dot(d, "f") == -2);
  CHECK(k_dot(d, "s") == 0);
  CHECK(d.ne_generators == std::vector<std::string>({"f", "s", "l10"}));

  IntersectionData d2 = data("U[2,2,2]");  // c = 2: lambda = 2, ray r
  CHECK(pair_classes(d2, {{"l00", 1}}, {{"Hx", 1}}) == 2);
  CHECK(k_dot(d2, "r") == 0);  // a - 2
  CHECK(d2.ne_generators == std::vector<std::string>({"f", "s", "r"}));
}

TEST_CASE("Q table for degree six") {
  IntersectionData d = data("Q[u0^5*u1 - u0*u1^5]");  // squarefree, deg 6
  CHECK(d.canonical == std::vector<long long>({-2, -5}));  // K = -2H - 5F
  CHECK(k_dot(d, "h") == 1);
  CHECK(k_dot(d, "f") == -2);
  CHECK_THROWS_AS(intersection_data(parse_space("Q[u0^2*u1^2]")), space_error);
}

TEST_CASE("S and V tables") {
  IntersectionData s3 = data("S[3]");
  CHECK(k_dot(s3, "s1") == 0);  // b - 3
  CHECK(k_dot(s3, "f") == -2);
  CHECK(pair_classes(s3, {{"f", 1}}, {{"E", 1}}) == 2);

  IntersectionData v5 = data("V[5]");
  CHECK(k_dot(v5, "f'") == -2);
  CHECK(k_dot(v5, "s'") == 2);
  CHECK(v5.canonical == std::vector<long long>({-2, -6}));
}

TEST_CASE("fibre degrees") {
  // Relative anticanonical degree of a P1-bundle is -2; of a P2-bundle -3.
  CHECK(k_dot(data("F[3,2,1]"), "l3") == -2);
  CHECK(k_dot(data("P[4]"), "f") == -2);
  CHECK(k_dot(data("U[1,5,3]"), "f") == -2);
  CHECK(k_dot(data("S[6]"), "f") == -2);
  CHECK(k_dot(data("V[2]"), "f'") == -2);
  CHECK(k_dot(data("Q[u0*u1]"), "f") == -2);
  CHECK(k_dot(data("R[5,2]"), "f") == -3);
}

TEST_CASE("rank-one records and unavailable tables") {
  auto p3 = intersection_data(parse_space("P3"));
  REQUIRE(p3.has_value());
  CHECK(p3->rank_one);
  CHECK(p3->minus_k_degree_of_line == 4);
  auto q3 = intersection_data(parse_space("Q3"));
  CHECK(q3->minus_k_degree_of_line == 3);

  CHECK(!intersection_data(parse_space("W[3]")).has_value());
  CHECK(!intersection_data(parse_space("P1112")).has_value());
  CHECK(!intersection_data(parse_space("P1123")).has_value());
}

TEST_CASE("unknown labels are rejected") {
  IntersectionData d = data("R[3,1]");
  CHECK_THROWS_AS(k_dot(d, "nope"), space_error);
  CHECK_THROWS_AS(pair_classes(d, {{"l", 1}}, {{"Z", 1}}), space_error);
}

TEST_CASE("table input is normalized first") {
  // R[1,3] normalizes to R[3,1]; the table is the normalized one.
  IntersectionData d = data("R[1,3]");
  CHECK(k_dot(d, "l") == 2);
  CHECK(d.canonical == std::vector<long long>({-3, -7}));

  // F[0,-2,1] normalizes to F[0,2,-1]: K.l2 = b - 2 for the normalized b.
  IntersectionData f = data("F[0,-2,1]");
  CHECK(k_dot(f, "l2") == 0);
  CHECK(k_dot(f, "l1") == -1);  // a - c - 2 at (a,c) = (0,-1)
}
