#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "extrikit/instances.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + EXTRIKIT_BIN + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool has(const RunResult& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("validate: fixtures by name and bundles by path") {
  RunResult r = run("validate pt");
  CHECK(r.code == 0);
  CHECK(has(r, "\"valid\": true"));

  std::string path = "/tmp/xk_cli_pt.json";
  xk::save_instance(xk::build_fixture("pt"), path);
  RunResult f = run("validate " + path);
  CHECK(f.code == 0);
  CHECK(has(f, "\"valid\": true"));

  RunResult bad = run("validate no_such_bundle.json");
  CHECK(bad.code == 2);
}

TEST_CASE("gldim examples") {
  RunResult a = run("gldim twoterm_a2");
  CHECK(a.code == 0);
  CHECK(has(a, "\"value\": \"1\""));
  RunResult b = run("gldim pt");
  CHECK(b.code == 0);
  CHECK(has(b, ">= 4"));
}

TEST_CASE("balance a4sub reports the unbalanced triple; strict exits 1") {
  RunResult r = run("balance a4sub --nmax 2");
  CHECK(r.code == 0);
  CHECK(has(r, "3[-1]|[4;3]|n=1"));
  CHECK(has(r, "\"balanced\": false"));
  RunResult s = run("balance a4sub --nmax 2 --strict");
  CHECK(s.code == 1);
  RunResult t = run("balance twoterm_a2 --nmax 2 --strict");
  CHECK(t.code == 0);
  CHECK(has(t, "\"balanced\": true"));
}

TEST_CASE("ext: cross-checked oracles agree") {
  RunResult r = run("ext pt --neg 3 --cross-check");
  CHECK(r.code == 0);
  CHECK(has(r, "\"T|T\": 1"));
  CHECK(has(r, "\"mismatches\": []"));
  RunResult p = run("ext twoterm_a2 --pos 2 --cross-check");
  CHECK(p.code == 0);
  CHECK(has(p, "\"mismatches\": []"));
  RunResult q = run("ext twoterm_a2 --neg 1 --pairs 'P1,P1[1]'");
  CHECK(q.code == 0);
  CHECK(has(q, "\"P1|P1[1]\": 1"));
  RunResult bad = run("ext pt --pos 1 --neg 1");
  CHECK(bad.code == 2);
}

TEST_CASE("les-check and the nmax guard") {
  RunResult r = run("les-check split2");
  CHECK(r.code == 0);
  CHECK(has(r, "\"checks_failed\": 0"));
  RunResult g = run("les-check split2 --nmax 9");
  CHECK(g.code == 2);
  CHECK(has(g, "--force"));
}

TEST_CASE("defect and relstruct surfaces") {
  RunResult d = run("defect twoterm_a2 --reflect");
  CHECK(d.code == 0);
  CHECK(has(d, "\"failures\": []"));
  RunResult r = run("relstruct a4sub --window 1");
  CHECK(r.code == 0);
  CHECK(has(r, "\"closed\": true"));
  CHECK(has(r, "\"witness_bounded\": true"));
}

TEST_CASE("report is byte-identical across runs") {
  RunResult a = run("report twoterm_a2 --json /tmp/xk_cli_r1.json");
  RunResult b = run("report twoterm_a2 --json /tmp/xk_cli_r2.json");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  std::string s1 = slurp("/tmp/xk_cli_r1.json"), s2 = slurp("/tmp/xk_cli_r2.json");
  REQUIRE(!s1.empty());
  CHECK(s1 == s2);
  CHECK(s1.find("witness-bounded") != std::string::npos);
}

TEST_CASE("EXTRIKIT_FIELD overrides the fixture field") {
  RunResult r = run("validate pt", "EXTRIKIT_FIELD=5");
  CHECK(r.code == 0);
  CHECK(has(r, "\"field\": 5"));
}
