#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "garlink/cli.hpp"

namespace {

struct Run {
  int exit;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = garlink::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(GARLINK_FIXTURE_DIR) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("garside verify: passing and failing fixtures") {
  Run good = cli({"garside", "verify", "--file", fixture("b3.pres")});
  CHECK(good.exit == 0);
  CHECK(contains(good.out, "pass = true"));
  CHECK(contains(good.out, "left-divisor-count = 6"));
  CHECK(contains(good.out, "tau = s1->s2 s2->s1"));

  Run bad = cli({"garside", "verify", "--file", fixture("freemonoid.pres")});
  CHECK(bad.exit == 1);
  CHECK(contains(bad.out, "pass = false"));
  CHECK(contains(bad.out, "check C3.divisors-equal = fail"));
  CHECK(contains(bad.out, "(a b)"));
}

TEST_CASE("bad inputs exit with status 2") {
  Run unknown_flag = cli({"garside", "verify", "--file", fixture("b3.pres"), "--bogus"});
  CHECK(unknown_flag.exit == 2);
  Run no_sub = cli({"garside"});
  CHECK(no_sub.exit == 2);
  Run missing_file = cli({"garside", "verify", "--file", "/nonexistent.pres"});
  CHECK(missing_file.exit == 2);
  Run bad_word = cli({"garside", "nf", "--file", fixture("b3.pres"), "--word", "zz"});
  CHECK(bad_word.exit == 2);
}

TEST_CASE("garside reverse") {
  Run r = cli({"garside", "reverse", "--file", fixture("b3.pres"), "--word", "s1^-1 s2"});
  CHECK(r.exit == 0);
  CHECK(contains(r.out, "outcome = converged"));
  CHECK(contains(r.out, "numerator = s2 s1"));
  CHECK(contains(r.out, "denominator = s1 s2"));
  CHECK(contains(r.out, "steps = 1"));

  Run blocked = cli({"garside", "reverse", "--file", fixture("freemonoid.pres"), "--word",
                     "a^-1 b"});
  CHECK(blocked.exit == 0);
  CHECK(contains(blocked.out, "outcome = blocked"));

  Run diverged = cli({"garside", "reverse", "--file", fixture("b3.pres"), "--word",
                      "s1^-1 s2 s1^-1 s2 s1^-1 s2", "--cap", "2"});
  CHECK(diverged.exit == 3);
}

TEST_CASE("garside coherence") {
  Run good = cli({"garside", "coherence", "--file", fixture("b3.pres")});
  CHECK(good.exit == 0);
  CHECK(contains(good.out, "left-failures = 0"));
  CHECK(contains(good.out, "right-failures = 0"));

  Run bad = cli({"garside", "coherence", "--file", fixture("bad_coherence.pres"),
                 "--side", "left"});
  CHECK(bad.exit == 1);
  CHECK(contains(bad.out, "left-failure"));
}

TEST_CASE("garside normal forms and word problem") {
  Run nf = cli({"garside", "nf", "--file", fixture("b3.pres"), "--word", "s1 s2 s1 s1"});
  CHECK(nf.exit == 0);
  CHECK(contains(nf.out, "greedy-nf = (s1 s2 s1) (s1)"));

  Run frac = cli({"garside", "nf", "--file", fixture("b3.pres"), "--word", "s1 s2^-1"});
  CHECK(frac.exit == 0);
  CHECK(contains(frac.out, "denominator = s1 s2"));
  CHECK(contains(frac.out, "numerator = s2 s1"));

  Run wp = cli({"garside", "wp", "--file", fixture("b3.pres"), "--lhs", "s1 s2 s1", "--rhs",
                "s2 s1 s2"});
  CHECK(wp.exit == 0);
  CHECK(contains(wp.out, "equal = true"));

  Run ball = cli({"garside", "ball", "--file", fixture("b3.pres"), "--oracle-norm", "3"});
  CHECK(ball.exit == 0);
  CHECK(contains(ball.out, "classes = 14"));
}

TEST_CASE("braid subcommands") {
  Run trivial = cli({"braid", "trivial", "--n", "3", "--braid", "s1 s2 s1 s2^-1 s1^-1 s2^-1"});
  CHECK(trivial.exit == 0);
  CHECK(contains(trivial.out, "trivial = true"));

  Run nontrivial = cli({"braid", "trivial", "--n", "3", "--braid", "s1"});
  CHECK(contains(nontrivial.out, "trivial = false"));

  Run apply = cli({"braid", "apply", "--base", "Z", "--h", "a", "--n", "2", "--braid", "s1",
                   "--element", "a_1"});
  CHECK(apply.exit == 0);
  CHECK(contains(apply.out, "image = a_1^-1 a_2 a_1"));
}

TEST_CASE("linkinv subcommands") {
  Run trefoil = cli({"linkinv", "fingerprint", "--base", "Z", "--h", "a", "--braid", "s1^3",
                     "--n", "2"});
  CHECK(trefoil.exit == 0);
  CHECK(trefoil.out == "rank=1 torsion=[]\n");

  Run markov = cli({"linkinv", "markov-test", "--cases", "5", "--seed", "7"});
  CHECK(markov.exit == 0);
  CHECK(contains(markov.out, "failures = 0"));

  // identical bytes across runs and worker counts
  Run again = cli({"linkinv", "markov-test", "--cases", "5", "--seed", "7"});
  CHECK(again.out == markov.out);
  Run parallel = cli({"linkinv", "markov-test", "--cases", "5", "--seed", "7", "--jobs", "3"});
  CHECK(parallel.out == markov.out);
}

TEST_CASE("semidirect subcommands") {
  Run build = cli({"semidirect", "build", "--base", "Z", "--h", "a", "--n", "2"});
  CHECK(build.exit == 0);
  CHECK(contains(build.out, "generators = a s1"));
  CHECK(contains(build.out, "relation: a s1 a s1 = s1 a s1 a"));
  CHECK(contains(build.out, "delta = a s1 a s1"));

  Run verify = cli({"semidirect", "verify", "--base", "Z", "--h", "a", "--n", "2"});
  CHECK(verify.exit == 0);
  CHECK(contains(verify.out, "structure = pass"));

  Run torsion = cli({"semidirect", "verify", "--base", "Z/2", "--h", "a", "--n", "2"});
  CHECK(torsion.exit == 2);
  CHECK(contains(torsion.err, "torsion"));

  Run negative = cli({"semidirect", "verify", "--base", "Z", "--h", "a^-1", "--n", "2"});
  CHECK(negative.exit == 2);

  Run file_base = cli({"semidirect", "verify", "--base", fixture("b3base.pres"), "--h", "a b a",
                       "--n", "2"});
  CHECK(file_base.exit == 0);
  CHECK(contains(file_base.out, "structure = pass"));
}

TEST_CASE("base groups load from presentation files") {
  // unknot closure over H = B_3: Gamma is H itself, whose H_1 is Z.
  // --h defaults to the file's distinguished element.
  Run r = cli({"linkinv", "fingerprint", "--base", fixture("b3base.pres"), "--braid", "s1",
               "--n", "2"});
  CHECK(r.exit == 0);
  CHECK(r.out == "rank=1 torsion=[]\n");
}

TEST_CASE("wada subcommands") {
  Run check = cli({"wada", "check", "--all", "--n", "3"});
  CHECK(check.exit == 0);
  CHECK(contains(check.out, "all = pass"));

  Run act = cli({"wada", "act", "--type", "2", "--n", "2", "--braid", "s1^5", "--abelianized"});
  CHECK(act.exit == 0);
  CHECK(contains(act.out, "[6 5]"));
  CHECK(contains(act.out, "[-5 -4]"));

  Run word = cli({"wada", "act", "--type", "1", "--h", "2", "--n", "2", "--braid", "s1",
                  "--word", "x1"});
  CHECK(word.exit == 0);
  CHECK(contains(word.out, "image = x1^-2 x2 x1^2"));
}

TEST_CASE("machine format strips padding") {
  Run r = cli({"garside", "wp", "--file", fixture("b3.pres"), "--lhs", "s1", "--rhs", "s1",
               "--format", "machine"});
  CHECK(r.exit == 0);
  CHECK(contains(r.out, "equal=true"));
}

TEST_CASE("reports are byte-identical across runs") {
  std::vector<std::string> args{"garside", "verify", "--file", fixture("b3.pres")};
  Run a = cli(args);
  Run b = cli(args);
  CHECK(a.out == b.out);
  CHECK(a.exit == b.exit);
}
