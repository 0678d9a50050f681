#include "coxforge/cli.hpp"
#include "coxforge/textio.hpp"
#include "fixtures.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace coxforge;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("matrix text format") {
  IntMatrix m = parse_matrix("# comment\n2 3\n1 -2 3\n\n0 4 5\n");
  CHECK(same_matrix(m, int_matrix({{1, -2, 3}, {0, 4, 5}})));
  CHECK(same_matrix(parse_matrix(format_matrix(m)), m));
  try {
    parse_matrix("2 3\n1 2 3\n4 5\n");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(contains(e.what(), "line 3"));
  }
  CHECK_THROWS_AS(parse_matrix("1 2\n1 x\n"), Error);
}

TEST_CASE("every shipped presentation round-trips") {
  for (const char* name : {"f2.cox", "F.cox", "F3.cox", "elliptic.cox", "calT.cox", "calTv.cox"}) {
    CAPTURE(name);
    CoxPresentation p = fixture::load(name);
    CoxPresentation q = parse_presentation(format_presentation(p));
    CHECK(q.variables == p.variables);
    CHECK(same_matrix(q.weights, p.weights));
    CHECK(q.irrelevant == p.irrelevant);
    CHECK(q.stacky == p.stacky);
    CHECK(format_presentation(q) == format_presentation(p));
  }
}

TEST_CASE("presentation parsing errors") {
  CHECK_THROWS_AS(parse_presentation("rank 1\nvars a b\n1 1\nirrelevant (a,c)\n"), Error);
  CHECK_THROWS_AS(parse_presentation("rank 1\nvars a b\n1 1\n"), Error);
  CHECK_NOTHROW(parse_presentation("rank 1\nvars a b\n1 1\nirrelevant (a,b)\n"));
  CHECK(parse_presentation("rank 2\nvars a b c d\n1 1 0 0\n0 0 1 1\nirrelevant (a,b) ∩ (c,d)\n").irrelevant.components().size() == 2);
}

TEST_CASE("fan text format") {
  Fan f = parse_fan("dim 2\nrays 3\n1 0\n0 1\n-1 -1\ncones 3\n1 2\n2 3\n1 3\n");
  CHECK(f.num_rays() == 3);
  CHECK(f.max_cones[1] == IndexSet{1, 2});
  Fan g = parse_fan(format_fan(f));
  CHECK(same_matrix(g.rays, f.rays));
  CHECK(g.max_cones == f.max_cones);
  CHECK_THROWS_AS(parse_fan("dim 2\nrays 1\n1 0\ncones 1\n1 4\n"), Error);
}

TEST_CASE("discrepancy spec format") {
  DiscrepancySpec s = parse_discrepancy_spec(read_text_file(fixture::data_path("calT.disc")));
  CHECK(s.presentation_path == "F3.cox");
  CHECK(s.center_base == 1);
  CHECK(s.k == 2);
  CHECK(s.b == std::vector<Integer>{4, 2, 3, 1, 1});
  CHECK(s.new_var == "w");
  REQUIRE(s.ci.equations.size() == 2);
  CHECK(s.ci.equations[0].support.size() == 2);
  CHECK_FALSE(s.solve.has_value());
  DiscrepancySpec t = parse_discrepancy_spec(read_text_file(fixture::data_path("calT_solve.disc")));
  REQUIRE(t.solve.has_value());
  CHECK(t.solve->unknown == 0);
  CHECK(t.solve->target == Rational(1, 3));
  CHECK(t.ci.equations[1].order == std::optional<Integer>(4));
  CHECK_THROWS_AS(parse_discrepancy_spec("order 3\n"), Error);
}

TEST_CASE("cli: wellform") {
  Run r = run({"wellform", fixture::data_path("f2.cox")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1 1 1 0 -2\n0 0 0 1 1\n"));
  CHECK(contains(r.out, "certificate verified"));
  Run already = run({"wellform", fixture::data_path("F.cox")});
  CHECK(already.code == 0);
  CHECK(contains(already.out, "already well-formed"));
  Run elliptic = run({"wellform", fixture::data_path("elliptic.cox")});
  CHECK(contains(elliptic.out, "1 3 2 0 0 0\n0 9 8 6 1 1\n"));
}

TEST_CASE("cli: exit codes") {
  Run unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(contains(unknown.err, "unknown verb"));
  CHECK(run({"wellform", "/nonexistent.cox"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  Run nonstandard = run({"gale", fixture::data_path("f2.cox")});
  CHECK(nonstandard.code == 2);
  CHECK(contains(nonstandard.err, "error:"));
}

TEST_CASE("cli: game, charts, blowup, discrepancy") {
  Run g = run({"game", fixture::data_path("F.cox")});
  CHECK(g.code == 0);
  CHECK(contains(g.out, "models: 4"));
  CHECK(contains(g.out, "crossings: 3"));
  CHECK(contains(g.out, "Flip of type (1,1,2,1,-1,-1)"));
  Run c = run({"charts", fixture::data_path("F3.cox")});
  CHECK(contains(c.out, "U(1,2): 1/3(0,1,1,1,2) [terminal]"));
  Run b = run({"blowup", fixture::data_path("F3.cox"), "--center", "1,2", "--b", "4,2,3,1,1", "--newvar", "w"});
  CHECK(b.code == 0);
  CHECK(contains(b.out, "3 0 4 2 0 1 1 -3"));
  CHECK(contains(b.out, "x->x*w^(4/3)"));
  Run d = run({"discrepancy", fixture::data_path("calT.disc")});
  CHECK(contains(d.out, "discrepancy: 1/3"));
  Run s = run({"discrepancy", fixture::data_path("calT_solve.disc")});
  CHECK(contains(s.out, "solved b_0 = 4"));
  Run bad = run({"blowup", fixture::data_path("F3.cox"), "--center", "1,2", "--b", "3,4,2,1,1"});
  CHECK(bad.code == 2);
}

TEST_CASE("cli: json output is stable and parses") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"--json", "game", fixture::data_path("F.cox")},
        std::vector<std::string>{"--json", "wellform", fixture::data_path("f2.cox")},
        std::vector<std::string>{"--json", "charts", fixture::data_path("F3.cox")},
        std::vector<std::string>{"--json", "discrepancy", fixture::data_path("calT.disc")}}) {
    CAPTURE(args[1]);
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    nlohmann::json j = nlohmann::json::parse(a.out, nullptr, false);
    CHECK_FALSE(j.is_discarded());
  }
}
