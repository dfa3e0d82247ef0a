#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

// End-to-end runs of the installed binary; SYANG_CLI_PATH is injected by CMake.

namespace {

struct RunResult {
  int rc;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SYANG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 512> buf;
  while (fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("normalform reduces and reports parse errors") {
  RunResult odd = run("normalform --m 1 --n 1 --expr t[1,2,1]*t[1,2,1]");
  CHECK(odd.rc == 0);
  CHECK(odd.out == "0\n");

  RunResult id = run("normalform --m 1 --n 1 --expr t[1,1,1]");
  CHECK(id.rc == 0);
  CHECK(id.out == "t[1,1,1]\n");

  RunResult swap = run("normalform --m 1 --n 1 --json --expr t[1,2,1]*t[2,1,1]");
  CHECK(swap.rc == 0);
  CHECK(swap.out.find("\"normal_form\"") != std::string::npos);

  RunResult bad = run("normalform --m 1 --n 1 --expr t[1,2");
  CHECK(bad.rc == 2);
  CHECK(bad.out.find("position") != std::string::npos);

  RunResult range = run("normalform --m 1 --n 1 --expr t[3,1,1]");
  CHECK(range.rc == 2);

  RunResult positional = run("normalform --m 1 --n 1 \"t[1,2,1]*t[1,2,1]\"");
  CHECK(positional.rc == 0);
  CHECK(positional.out == "0\n");

  RunResult missing = run("normalform --m 1 --n 1");
  CHECK(missing.rc == 2);
}

TEST_CASE("verify runs suites and enforces bounds") {
  RunResult t2 = run("verify --suite theorem2 --m 2 --n 1 --N 2");
  CHECK(t2.rc == 0);
  CHECK(t2.out.find("PASS") != std::string::npos);

  RunResult rtt = run("verify --suite rtt --m 1 --n 1 --N 2 --json");
  CHECK(rtt.rc == 0);
  CHECK(rtt.out.find("\"instances\": 64") != std::string::npos);
  CHECK(rtt.out.find("\"passed\": true") != std::string::npos);

  RunResult unknown = run("verify --suite nonsense --m 1 --n 1 --N 2");
  CHECK(unknown.rc == 2);

  RunResult mismatched = run("verify --suite lemma5.1 --m 1 --n 2 --N 2");
  CHECK(mismatched.rc == 2);

  RunResult bounds = run("verify --suite theorem3 --m 9 --n 9 --N 8");
  CHECK(bounds.rc == 2);
  CHECK(bounds.out.find("max-bounds-override") != std::string::npos);
}

TEST_CASE("bounds override admits larger parameters") {
  RunResult big = run("normalform --m 4 --n 4 --max-bounds-override --expr t[8,8,1]");
  CHECK(big.rc == 0);
  CHECK(big.out == "t[8,8,1]\n");

  RunResult refused = run("normalform --m 4 --n 4 --expr t[8,8,1]");
  CHECK(refused.rc == 2);
}

TEST_CASE("verify output is byte-identical across thread counts") {
  std::string base = "verify --suite lemma6 --m 1 --n 1 --N 2 --sample 0.5";
  RunResult one = run(base + " --threads 1");
  RunResult two = run(base + " --threads 2");
  CHECK(one.rc == 0);
  CHECK(two.rc == 0);
  CHECK(one.out == two.out);
}

TEST_CASE("gauss emits coefficient tables") {
  RunResult g = run("gauss --m 1 --n 1 --N 1");
  CHECK(g.rc == 0);
  CHECK(g.out == "d1[1] = t[1,1,1]\nd2[1] = t[2,2,1]\ne[1,2][1] = t[1,2,1]\nf[2,1][1] = "
                 "t[2,1,1]\n");

  RunResult gj = run("gauss --m 1 --n 1 --N 2 --json");
  CHECK(gj.rc == 0);
  CHECK(gj.out.find("\"1,2\"") != std::string::npos);
}

TEST_CASE("berezinian checks map module outcomes to exit codes") {
  RunResult forms = run("berezinian --m 1 --n 1 --N 2 --form both");
  CHECK(forms.rc == 0);
  CHECK(forms.out.find("forms agree") != std::string::npos);

  RunResult deflt = run("berezinian --m 1 --n 1 --N 2");
  CHECK(deflt.rc == 0);
  CHECK(deflt.out == forms.out);

  RunResult central = run("berezinian --m 1 --n 1 --N 3 --form central");
  CHECK(central.rc == 0);

  RunResult leading = run("berezinian --m 1 --n 1 --N 3 --form leading");
  CHECK(leading.rc == 0);

  // m <= n has no factorial root: delegated module error surfaces as exit 1.
  RunResult root = run("berezinian --m 1 --n 1 --N 2 --form root");
  CHECK(root.rc == 1);
  CHECK(root.out.find("requires m > n") != std::string::npos);

  RunResult rootok = run("berezinian --m 2 --n 1 --N 2 --form root");
  CHECK(rootok.rc == 0);
  CHECK(rootok.out.find("recomposition verified") != std::string::npos);

  RunResult badcheck = run("berezinian --m 1 --n 1 --N 2 --form nonsense");
  CHECK(badcheck.rc == 2);
}

TEST_CASE("map applies homomorphisms with target tagging") {
  RunResult z = run("map --name zeta --m 1 --n 1 --N 2 --expr t[1,1,1]");
  CHECK(z.rc == 0);
  CHECK(z.out == "gl(1|1): -t[2,2,1]\n");

  // Without --N the truncation order comes from the expression itself.
  RunResult zn = run("map --name zeta --m 1 --n 1 --expr t[1,1,1]");
  CHECK(zn.rc == 0);
  CHECK(zn.out == "gl(1|1): -t[2,2,1]\n");

  RunResult r = run("map --name rho --m 2 --n 1 --N 2 --expr t[1,1,1] --json");
  CHECK(r.rc == 0);
  CHECK(r.out.find("\"target\": {\n    \"m\": 1,\n    \"n\": 2\n  }") != std::string::npos);

  RunResult ps = run("map --name psi --m 1 --n 1 --N 2 --k 1 --expr t[1,1,1]");
  CHECK(ps.rc == 0);
  CHECK(ps.out.find("gl(2|1): ") == 0);

  RunResult mu = run("map --name mu --m 1 --n 1 --N 2 --f 1,2 --expr t[1,1,1]");
  CHECK(mu.rc == 0);
  CHECK(mu.out == "gl(1|1): 2 + t[1,1,1]\n");

  // mu precondition f_0 = 1 violated: module error, exit 1.
  RunResult badf = run("map --name mu --m 1 --n 1 --N 2 --f 2,1 --expr t[1,1,1]");
  CHECK(badf.rc == 1);

  RunResult badname = run("map --name nonsense --m 1 --n 1 --N 2 --expr t[1,1,1]");
  CHECK(badname.rc == 2);
}

TEST_CASE("rtt-check subcommand and help paths") {
  RunResult rt = run("rtt-check --m 1 --n 1 --N 2");
  CHECK(rt.rc == 0);
  CHECK(rt.out.find("PASS") != std::string::npos);

  RunResult help = run("--help");
  CHECK(help.rc == 0);

  RunResult nosub = run("");
  CHECK(nosub.rc == 2);
}
