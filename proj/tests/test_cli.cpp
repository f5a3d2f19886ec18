// End-to-end tests driving the CLI binary.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "sarkisov/parse.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SARKISOV_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_CASE("links output is exact") {
  RunResult r = run("links P1123");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "S9 -> R[3,1]\nS10^-1 -> W[2]\n");
}

TEST_CASE("info reports non-maximality") {
  RunResult r = run("info S[2]");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("NotMaximal: blow-down of twisted cubic to P3\n") !=
        std::string::npos);
}

TEST_CASE("path output") {
  RunResult r = run("path R[3,1] W[2]");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("P1123") != std::string::npos);
  CHECK(r.out.find("length: 2") != std::string::npos);

  RunResult none = run("path P[3] P[2]");
  CHECK(none.exit_code == 3);
}

TEST_CASE("exit codes") {
  CHECK(run("info R[3,1").exit_code == 1);     // syntax
  CHECK(run("info F[-2,1,1]").exit_code == 2);  // a < 0 rejected
  CHECK(run("info U[2,3,5]").exit_code == 2);   // divisibility
  CHECK(run("apply P3 S11").exit_code == 4);    // inapplicable
  CHECK(run("apply P3 S99").exit_code == 1);    // bad link id
  CHECK(run("toric Q[u0*u1] check").exit_code == 2);  // not toric
}

TEST_CASE("apply subcommand") {
  RunResult r = run("apply F[2,1,-1] S11");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "F[2,2,1]\n");

  RunResult inv = run("apply F[2,2,1] S11^-1");
  CHECK(inv.out == "F[2,1,-1]\n");

  RunResult q = run("apply \"Q[u0^3*u1+u0^2*u1^2]\" S16 --h u0-u1");
  CHECK(q.exit_code == 0);
  CHECK(q.out == "Q[u0^5*u1 - u0^4*u1^2 - u0^3*u1^3 + u0^2*u1^4]\n");
}

TEST_CASE("toric export format") {
  RunResult r = run("toric R[0,0] export");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 6) == "1 0 0\n");
  // Blank line between rays and cones.
  CHECK(r.out.find("\n\n") != std::string::npos);

  RunResult w = run("toric W[3] check");
  CHECK(w.exit_code == 0);
  CHECK(w.out.find("terminal: yes") != std::string::npos);
  CHECK(w.out.find("singular cones: 2") != std::string::npos);
}

TEST_CASE("info on a square form flags the fibration") {
  RunResult r = run("info Q[u0^2*u1^2]");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mori_fibration: no") != std::string::npos);
}

TEST_CASE("graph emits DOT") {
  RunResult r = run("graph P1123 --radius 1 --dot");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("digraph links") != std::string::npos);
  CHECK(r.out.find("S10^-1") != std::string::npos);
}

TEST_CASE("space expression round trips") {
  using namespace sarkisov;
  for (const char* t : {"F[2,1,-1]", "P[4]", "U[2,2,4]", "S[3]", "V[4]", "W[2]",
                        "R[3,1]", "Q[u0^3*u1 + u1^4]", "P3", "Q3", "P1112",
                        "P1123"}) {
    MoriFibreSpace s = parse_space(t);
    CHECK(spaces_equal(parse_space(render_space(s)), s));
  }
}

TEST_CASE("json report is schema-stable") {
  RunResult r = run("info R[3,1] --json");
  CHECK(r.exit_code == 0);
  std::ifstream golden(std::string(SARKISOV_GOLDEN_DIR) + "/info_R31.json");
  REQUIRE(golden.good());
  std::stringstream want;
  want << golden.rdbuf();
  CHECK(r.out == want.str());
}
