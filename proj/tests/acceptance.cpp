// One PASS/FAIL line per acceptance criterion, with wall time.

#include "coxforge/blowup.hpp"
#include "coxforge/galefan.hpp"
#include "coxforge/singular.hpp"
#include "coxforge/textio.hpp"
#include "coxforge/vgit.hpp"
#include "properties.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace coxforge;

namespace {

using Ints = std::vector<Integer>;

CoxPresentation load(const std::string& name) {
  return parse_presentation(read_text_file(std::string(COXFORGE_DATA_DIR) + "/" + name));
}

MonomialIdeal named_ideal(const CoxPresentation& p, const std::vector<std::vector<std::string>>& comps) {
  std::vector<IndexSet> out;
  for (const auto& c : comps) {
    IndexSet s;
    for (const auto& v : c) s.push_back(p.index_of(v));
    std::sort(s.begin(), s.end());
    out.push_back(s);
  }
  return MonomialIdeal(out, p.size());
}

std::vector<std::string> names(const std::vector<Monomial>& ms, const CoxPresentation& p) {
  std::vector<std::string> out;
  for (const Monomial& m : ms) out.push_back(m.format(p.variables));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Each check appends what went wrong; a criterion passes with no notes.
struct Notes {
  std::vector<std::string> bad;
  void expect(bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  }
};

const IntMatrix A = int_matrix({{3, 3, 3, 0, -2}, {1, 1, 1, 2, 0}});
const IntMatrix A_final = int_matrix({{1, 1, 1, 0, -2}, {0, 0, 0, 1, 1}});

CoxPresentation f2_final() {
  return make_presentation({"x", "y", "z", "t", "u"}, A_final,
                           std::vector<std::vector<std::string>>{{"x", "y", "z"}, {"t", "u"}});
}

void c1(Notes& n) {
  n.expect(minor_gcd(A, 2) == 2, "minor_gcd(A) != 2");
  n.expect(oracle::all_minors_gcd(A, 2) == 2, "exhaustive minors disagree");
  Standardization s = standardize(A);
  n.expect(is_standard(s.standard), "standardize output not standard");
  n.expect(same_matrix(IntMatrix(s.transform * s.standard), A), "A != transform * N");
  WellFormedMatrix w = well_form_matrix(s.standard);
  n.expect(hnf_canonical(w.matrix) == hnf_canonical(A_final), "well-formed matrix not equivalent to A'");
  n.expect(verify_certificate(s.standard, w.certificate, w.matrix), "certificate rejected");
  WellFormedMatrix direct = well_form_matrix(A);
  n.expect(verify_certificate(A, direct.certificate, direct.matrix), "certificate from A rejected");
}

void c2(Notes& n) {
  IntMatrix b = gale_dual(A_final);
  n.expect(IntMatrix(A_final * b).isZero(), "gale rays violate A'");
  IntMatrix listed = int_matrix({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}, {-1, -1, -1}, {1, 1, 1}});
  n.expect(IntMatrix(A_final * listed).isZero(), "listed rays violate A'");
  n.expect(unimodular_row_equivalent(IntMatrix(b.transpose()), IntMatrix(listed.transpose())),
           "gale rays not GL(3,Z)-equivalent to the listed rays");
  CoxPresentation p = f2_final();
  Fan f = fan_from_presentation(p);
  n.expect(f.num_rays() == 5, "ray count");
  n.expect(f.max_cones.size() == 6, "cone count");
  MonomialIdeal i = irrelevant_ideal_from_fan(f);
  n.expect(i == named_ideal(p, {{"x", "y", "z"}, {"t", "u"}}), "ideal is not (x,y,z)(t,u)");
}

void c3(Notes& n) {
  BundleModel m = weighted_bundle_fan(weighted_bundle(1, {0, 1, 2, 3, 3}, {1, 1, 1, 1, 1}));
  CoxPresentation f = load("F.cox");
  n.expect(unimodular_row_equivalent(m.presentation.weights, int_matrix({{1, 1, 0, -1, -2, -3, -3}, {0, 0, 1, 1, 1, 1, 1}})),
           "weights differ");
  n.expect(unimodular_row_equivalent(weights_from_rays(m.fan.rays), f.weights), "fan weights differ");
  n.expect(m.fan.max_cones.size() == 10, "not 10 cones");
  MonomialIdeal want({{0, 1}, {2, 3, 4, 5, 6}}, 7);
  n.expect(m.presentation.irrelevant == want, "presentation ideal");
  n.expect(irrelevant_ideal_from_fan(m.fan) == want, "fan ideal");
}

void c4(Notes& n) {
  CoxPresentation f = load("F.cox");
  ChamberDecomposition d = chambers_rank2(f);
  std::vector<IntVector> walls{ray2(1, 0), ray2(0, 1), ray2(-1, 1), ray2(-2, 1), ray2(-3, 1)};
  n.expect(d.walls.size() == walls.size(), "wall count");
  for (std::size_t i = 0; i < walls.size() && i < d.walls.size(); ++i)
    n.expect(same_matrix(d.walls[i], walls[i]), "wall " + std::to_string(i));
  GameDiagram g = two_ray_game(f);
  std::vector<MonomialIdeal> ideals{
      named_ideal(f, {{"y0", "y1"}, {"x0", "x1", "x2", "x3", "x4"}}),
      named_ideal(f, {{"y0", "y1", "x0"}, {"x1", "x2", "x3", "x4"}}),
      named_ideal(f, {{"y0", "y1", "x0", "x1"}, {"x2", "x3", "x4"}}),
      named_ideal(f, {{"y0", "y1", "x0", "x1", "x2"}, {"x3", "x4"}}),
  };
  n.expect(g.models.size() == 4, "model count");
  for (std::size_t i = 0; i < 4 && i < g.models.size(); ++i)
    n.expect(g.models[i].irrelevant == ideals[i], "ideal of model " + std::to_string(i));
  std::vector<std::pair<Ints, CrossingKind>> want{{{1, 1, -1, -2, -3, -3}, CrossingKind::AntiFlip},
                                                  {{1, 1, 1, -1, -2, -2}, CrossingKind::AntiFlip},
                                                  {{1, 1, 2, 1, -1, -1}, CrossingKind::Flip}};
  n.expect(g.crossings.size() == 3, "crossing count");
  for (std::size_t i = 0; i < 3 && i < g.crossings.size(); ++i) {
    n.expect(g.crossings[i].type_vector == want[i].first, "type vector " + std::to_string(i));
    n.expect(g.crossings[i].classification == want[i].second, "classification " + std::to_string(i));
  }
  // both ends: fibrations onto P^1, i.e. two degree-1 generators
  for (const EndBehavior& e : g.ends) {
    const Fibration* fib = std::get_if<Fibration>(&e.kind);
    n.expect(fib != nullptr, "end is not a fibration");
    if (fib) n.expect(fib->target_generators.size() == 2, "fibration target is not P^1");
  }
}

void c5(Notes& n) {
  CoxPresentation p = f2_final();
  EndBehavior a = end_behavior(p, ray2(1, 0));
  const Fibration* fib = std::get_if<Fibration>(&a.kind);
  n.expect(fib && names(fib->target_generators, p) == sorted({"x", "y", "z"}), "(1,0) end");
  EndBehavior b = end_behavior(p, ray2(0, 1));
  const DivisorialContraction* dc = std::get_if<DivisorialContraction>(&b.kind);
  n.expect(dc && dc->variable == p.index_of("u"), "(0,1) end is not a contraction of u");
  n.expect(dc && names(dc->target_generators, p) ==
                     sorted({"t", "x^2*u", "x*y*u", "y^2*u", "x*z*u", "y*z*u", "z^2*u"}),
           "Veronese generators");
  // the same data from the stacky input
  CoxPresentation coarse = coarse_moduli(load("f2.cox"));
  GameDiagram g = two_ray_game(coarse);
  n.expect(std::holds_alternative<Fibration>(g.ends[0].kind), "game end 0");
  n.expect(std::holds_alternative<DivisorialContraction>(g.ends[1].kind), "game end 1");
}

const IntMatrix F3_rays = int_matrix({{1, 0, 0, 0, 0},
                                      {0, 1, 0, 0, 0},
                                      {0, 0, 1, 0, 0},
                                      {0, 0, 0, 1, 0},
                                      {-1, -1, -1, -1, 0},
                                      {0, 0, 0, 0, 1},
                                      {3, 3, 2, 1, -1}});

void c6(Notes& n) {
  CoxPresentation f3 = load("F3.cox");
  BlowupSpec spec = make_blowup_spec(f3, 1, 2, {4, 2, 3, 1, 1}, "w");
  n.expect(spec.a_k() == 3, "a_k");
  n.expect(spec.variable_weights() == Ints{3, 0, 4, 2, 0, 1, 1}, "weights on u,v,x,y,z,t,s are not (3,0,4,2,0,1,1)");
  CoxPresentation t = blow_up_weighted_bundle(f3, spec);
  n.expect(same_matrix(t.weights, int_matrix({{1, 1, 0, -1, -2, -1, -1, 0},
                                              {0, 0, 1, 2, 3, 1, 1, 0},
                                              {3, 0, 4, 2, 0, 1, 1, -3}})),
           "matrix differs");
  n.expect(t.irrelevant == named_ideal(t, {{"u", "v"}, {"x", "y", "z", "t", "s"}, {"u", "x", "y", "t", "s"}, {"w", "v"}, {"w", "z"}}),
           "five-component ideal differs");
  WellFormedPresentation wf = well_form(t);
  n.expect(verify_certificate(t.weights, wf.certificate, wf.presentation.weights), "certificate");
  n.expect(unimodular_row_equivalent(wf.presentation.weights, int_matrix({{1, 1, 0, -1, -2, -1, -1, 0},
                                                                          {0, 0, 1, 2, 3, 1, 1, 0},
                                                                          {1, 0, 1, 0, -1, 0, 0, -1}})),
           "well-formed third row");
  IntVector r = blowup_ray(F3_rays, spec.variable_weights(), spec.a_k());
  n.expect(same_matrix(r, int_vector({2, 1, 2, 1, 0})), "new ray");
  std::vector<IndexSet> cones;
  for (std::size_t base : {0u, 1u})
    for (std::size_t fiber = 2; fiber < 7; ++fiber) cones.push_back(complement({base, fiber}, 7));
  Fan sub = star_subdivision(make_fan(F3_rays, cones), r);
  n.expect(irrelevant_ideal_from_fan(sub).same_ideal(t.irrelevant), "subdivision ideal");
  n.expect(unimodular_row_equivalent(weights_from_rays(sub.rays), wf.presentation.weights), "subdivision weights");
  // and with the library's own basis
  Fan own = fan_from_presentation(f3);
  Fan own_sub = star_subdivision(own, blowup_ray(own.rays, spec.variable_weights(), spec.a_k()));
  n.expect(irrelevant_ideal_from_fan(own_sub).same_ideal(t.irrelevant), "subdivision ideal, gale basis");
}

void c7(Notes& n) {
  CoxPresentation f3 = load("F3.cox");
  BlowupSpec spec = make_blowup_spec(f3, 1, 2, {4, 2, 3, 1, 1}, "w");
  CIData ci;
  ci.equations.push_back({int_vector({-1, 3, 0}), {{1, 0, 0, 0, 1, 0, 0}, {0, 0, 2, 0, 0, 1, 0}}, {}});
  ci.equations.push_back({int_vector({-2, 4, 0}), {{0, 0, 0, 2, 0, 0, 0}, {0, 0, 1, 0, 1, 0, 0}}, {}});
  n.expect(pullback_order(spec, ci.equations[0].support) == 3, "order of f");
  n.expect(pullback_order(spec, ci.equations[1].support) == 4, "order of g");
  n.expect(discrepancy(spec, ci) == Rational(1, 3), "discrepancy != 1/3");
  // strict transform orders 3 and 4 held fixed while b(x) runs over 1 mod 3
  CIData fixed;
  fixed.equations.push_back({int_vector({-1, 3, 0}), {}, Integer(3)});
  fixed.equations.push_back({int_vector({-2, 4, 0}), {}, Integer(4)});
  BlowupSpec pattern = make_blowup_spec(f3, 1, 2, {1, 2, 3, 1, 1}, "w");
  n.expect(solve_exceptional_weight(pattern, 0, fixed, Rational(1, 3)) == 4, "solve != 4");
}

void c8(Notes& n) {
  CoxPresentation tv = load("calTv.cox");
  WallCrossing x = wall_crossing(tv, ray2(1, 0));
  n.expect(x.type_vector == Ints{1, 1, -1, -1}, "type vector");
  n.expect(x.classification == CrossingKind::Flop, "not a flop");
  n.expect(x.base_weights == Ints{1, 1, 2}, "base weights");
  GameDiagram g = two_ray_game(tv);
  n.expect(g.input_model.has_value(), "input chamber not found");
  if (g.input_model) {
    const EndBehavior& far = *g.input_model == 0 ? g.ends[1] : g.ends[0];
    const DivisorialContraction* dc = std::get_if<DivisorialContraction>(&far.kind);
    n.expect(dc && dc->variable == tv.index_of("u"), "far end is not a contraction of u");
  }
}

void c9(Notes& n) {
  IntMatrix t = int_matrix({{3, 0, -2, -6, -1, -1}, {0, 9, 8, 6, 1, 1}});
  WellFormedMatrix w = well_form_matrix(t);
  n.expect(unimodular_row_equivalent(w.matrix, int_matrix({{1, 3, 2, 0, 0, 0}, {0, 9, 8, 6, 1, 1}})), "not equivalent");
  n.expect(verify_certificate(t, w.certificate, w.matrix), "certificate");
}

void c10(Notes& n) {
  for (const ChartReport& c : weighted_bundle_charts(weighted_bundle(1, {0, 1, 2, 3, 3}, {1, 1, 1, 1, 1})))
    n.expect(c.type.is_smooth(), "F chart not smooth");
  bool two = false, three = false;
  for (const ChartReport& c : weighted_bundle_charts(weighted_bundle(1, {0, 1, 2, 1, 1}, {1, 2, 3, 1, 1}))) {
    QuotientSingularity q = transverse_part(normalize_type(c.type));
    if (q.index == 2 && q.weights == Ints{1, 1, 1, 1}) two = true;
    if (q.index == 3 && q.weights == Ints{1, 1, 1, 2}) three = true;
  }
  n.expect(two, "no 1/2(1,1,1,1) chart");
  n.expect(three, "no 1/3(1,1,1,2) chart");
  n.expect(is_terminal_cyclic({2, {1, 1, 1}}), "1/2(1,1,1)");
  n.expect(is_terminal_cyclic({3, {1, 1, 2}}), "1/3(1,1,2)");
}

void c11(Notes& n) {
  const int cases = 500;
  std::vector<props::Report> reps{
      props::standardize_reconstruction(11, cases), props::is_standard_smith(12, cases),
      props::wps_agreement(13, cases),              props::chamber_semistability(14, cases),
      props::gale_round_trip(15, cases),            props::fan_ideal_round_trip(16, cases),
      props::minor_gcd_exhaustive(17, cases)};
  for (const props::Report& r : reps) {
    std::cout << "    " << r.name << ": " << r.cases << " cases, " << r.failures << " failures\n";
    n.expect(r.passed(cases), r.name + ": " + r.first_failure);
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Notes&)> body;
  double limit_s;
};

}  // namespace

int main() {
  std::vector<Criterion> all{
      {1, "non-standard example: minor gcd, standardize, well-form, certificate", c1, 5},
      {2, "gale dual and fan of the well-formed example", c2, 5},
      {3, "weighted bundle fan of F", c3, 5},
      {4, "2-ray game of F", c4, 5},
      {5, "ends of the well-formed example", c5, 5},
      {6, "blow-up of F3: matrix, ideal, well-formed model, new ray", c6, 5},
      {7, "discrepancy 1/3 and exceptional weight 4", c7, 5},
      {8, "flop on the blow-up chart and far-end contraction", c8, 5},
      {9, "well-forming the elliptic blow-up", c9, 5},
      {10, "singularity charts and terminality", c10, 5},
      {11, "property suites", c11, 60},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    Notes notes;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(notes);
    } catch (const std::exception& e) {
      notes.bad.push_back(std::string("threw: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) notes.bad.push_back("took longer than " + std::to_string(c.limit_s) + " s");
    bool ok = notes.bad.empty();
    failed += !ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << timing << ")\n";
    for (const std::string& b : notes.bad) std::cout << "    - " << b << "\n";
  }
  std::cout << (all.size() - failed) << "/" << all.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
