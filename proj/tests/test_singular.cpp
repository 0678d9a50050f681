#include "coxforge/singular.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace coxforge;

namespace {

QuotientSingularity q(long r, std::vector<long> w) {
  QuotientSingularity s;
  s.index = r;
  for (long x : w) s.weights.push_back(x);
  return s;
}

}  // namespace

TEST_CASE("type normalization") {
  CHECK(normalize_type(q(2, {1, 1, 1})) == q(2, {1, 1, 1}));
  CHECK(normalize_type(q(4, {2, 2, 2})) == q(2, {1, 1, 1}));
  CHECK(normalize_type(q(3, {1, 4, 2})) == q(3, {1, 1, 2}));
  CHECK(normalize_type(q(3, {0, 2, 1})) == q(3, {0, 1, 2}));
  CHECK(q(9, {1, 1, 6, 8}).format() == "1/9(1,1,6,8)");
  CHECK(transverse_part(q(2, {0, 1, 1})) == q(2, {1, 1}));
}

TEST_CASE("Reid-Tai terminality") {
  CHECK(is_terminal_cyclic(q(2, {1, 1, 1})));
  CHECK(is_terminal_cyclic(q(3, {1, 1, 2})));
  CHECK_FALSE(is_terminal_cyclic(q(2, {1, 1})));
  CHECK(is_terminal_cyclic(q(2, {1, 1, 1})) == oracle::reid_tai(2, {1, 1, 1}));
  CHECK(is_terminal_cyclic(q(5, {1, 4, 2})) == oracle::reid_tai(5, {1, 4, 2}));
  CHECK(is_terminal_cyclic(q(3, {0, 1, 1, 2})));
  CHECK_THROWS_AS(is_terminal_cyclic(q(4, {1, 2, 3})), Error);
  CHECK(classify(q(1, {0, 0})) == ChartVerdict::Smooth);
  CHECK(classify(q(4, {1, 2, 3})) == ChartVerdict::Undecided);
  CHECK(std::string(verdict_name(ChartVerdict::NonTerminal)) == "non-terminal");
}

TEST_CASE("charts of F are smooth") {
  WeightedBundleSpec s = weighted_bundle(1, {0, 1, 2, 3, 3}, {1, 1, 1, 1, 1});
  std::vector<ChartReport> charts = weighted_bundle_charts(s);
  CHECK(charts.size() == 10);
  for (const ChartReport& c : charts) CHECK(c.type.is_smooth());
}

TEST_CASE("charts of F3") {
  WeightedBundleSpec s = weighted_bundle(1, {0, 1, 2, 1, 1}, {1, 2, 3, 1, 1});
  std::vector<ChartReport> charts = weighted_bundle_charts(s);
  CHECK(charts.size() == 10);
  int idx2 = 0, idx3 = 0;
  for (const ChartReport& c : charts) {
    QuotientSingularity t = transverse_part(c.type);
    if (c.type.index == 2) {
      ++idx2;
      CHECK(t == q(2, {1, 1, 1, 1}));
      CHECK(c.fiber == 1);
    } else if (c.type.index == 3) {
      ++idx3;
      CHECK(t == q(3, {1, 1, 1, 2}));
      CHECK(c.fiber == 2);
    } else {
      CHECK(c.type.is_smooth());
    }
  }
  CHECK(idx2 == 2);
  CHECK(idx3 == 2);
  // the point where v and z are nonzero
  QuotientSingularity pvz = fixed_point_type(s, 1, 2);
  CHECK(pvz.index == 3);
  CHECK(transverse_part(pvz) == q(3, {1, 1, 1, 2}));
  CHECK(is_terminal_cyclic(pvz));
  CHECK_THROWS_AS(fixed_point_type(s, 2, 0), Error);
}

TEST_CASE("P(1,1,1,2) as a trivial bundle has a 1/2(1,1,1) point") {
  // base P^0 is not allowed, so use P^1 x P(1,1,1,2); the zero slot is the A^1 factor
  WeightedBundleSpec s = weighted_bundle(1, {0, 0, 0, 0}, {1, 1, 2});
  QuotientSingularity t = fixed_point_type(s, 0, 3);
  CHECK(transverse_part(t) == q(2, {1, 1, 1}));
  CHECK(is_terminal_cyclic(t));
}

TEST_CASE("bundle with m = 0") {
  WeightedBundleSpec s = weighted_bundle(2, {0}, {});
  std::vector<ChartReport> charts = weighted_bundle_charts(s);
  CHECK(charts.size() == 3);
  for (const ChartReport& c : charts) CHECK(c.type.is_smooth());
}
