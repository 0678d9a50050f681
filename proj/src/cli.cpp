#include "coxforge/cli.hpp"

#include "coxforge/blowup.hpp"
#include "coxforge/galefan.hpp"
#include "coxforge/singular.hpp"
#include "coxforge/textio.hpp"
#include "coxforge/vgit.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace coxforge::cli {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json vector_json(const IntVector& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
  return a;
}

Json list_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const Integer& x : v) a.push_back(to_json(x));
  return a;
}

Json ideal_json(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  Json comps = Json::array();
  for (const IndexSet& c : ideal.components()) {
    Json comp = Json::array();
    for (std::size_t i : c) comp.push_back(names[i]);
    comps.push_back(comp);
  }
  return comps;
}

Json presentation_json(const CoxPresentation& p) {
  return Json{{"variables", p.variables},
              {"weights", to_json(p.weights)},
              {"irrelevant", ideal_json(p.irrelevant, p.variables)},
              {"stacky", p.stacky}};
}

Json fan_json(const Fan& f) {
  Json cones = Json::array();
  for (const IndexSet& c : f.max_cones) {
    Json cone = Json::array();
    for (std::size_t i : c) cone.push_back(i + 1);
    cones.push_back(cone);
  }
  return Json{{"dim", f.lattice_dim}, {"rays", to_json(f.rays)}, {"cones", cones}};
}

Json gens_json(const std::vector<Monomial>& gens, const std::vector<std::string>& names) {
  Json a = Json::array();
  for (const Monomial& m : gens) a.push_back(m.format(names));
  return a;
}

Json end_json(const EndBehavior& e, const std::vector<std::string>& names) {
  Json j{{"ray", vector_json(e.ray)}, {"degree_bound", e.degree_bound}};
  if (const auto* f = std::get_if<Fibration>(&e.kind)) {
    j["kind"] = "Fibration";
    j["generators"] = gens_json(f->target_generators, names);
  } else if (const auto* d = std::get_if<DivisorialContraction>(&e.kind)) {
    j["kind"] = "DivisorialContraction";
    j["variable"] = names[d->variable];
    j["generators"] = gens_json(d->target_generators, names);
  } else {
    j["kind"] = "Unclassified";
    j["beyond"] = std::get<Unclassified>(e.kind).beyond;
  }
  return j;
}

Json crossing_json(const WallCrossing& x, const std::vector<std::string>& names) {
  Json off = Json::array(), base = Json::array();
  for (std::size_t v : x.off_wall_vars) off.push_back(names[v]);
  for (std::size_t v : x.base_vars) base.push_back(names[v]);
  return Json{{"wall", vector_json(x.wall)},
              {"classification", crossing_name(x.classification)},
              {"off_wall", off},
              {"type", list_json(x.type_vector)},
              {"base", base},
              {"base_weights", list_json(x.base_weights)}};
}

std::string certificate_text(const WellFormingCertificate& c) { return c.summary(); }

std::vector<Integer> parse_list(const std::string& s) {
  std::vector<Integer> out;
  std::istringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    std::size_t a = tok.find_first_not_of(" \t"), b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) fail(ErrorKind::Parse, "empty entry in list '" + s + "'");
    out.push_back(parse_integer(tok.substr(a, b - a + 1)));
  }
  if (out.empty()) fail(ErrorKind::Parse, "empty list");
  return out;
}

std::vector<long> to_longs(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const Integer& x : v) {
    if (!x.fits_slong_p()) fail(ErrorKind::InvalidArgument, "value too large: " + to_string(x));
    out.push_back(x.get_si());
  }
  return out;
}

std::size_t to_index(const Integer& v) {
  if (v < 0 || !v.fits_ulong_p()) fail(ErrorKind::InvalidArgument, "bad index " + to_string(v));
  return v.get_ui();
}

bool looks_like_presentation(const std::string& text) {
  std::istringstream in(text);
  for (std::string tok; in >> tok;) {
    if (tok[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    return tok == "rank";
  }
  return false;
}

// Weight matrix from a matrix file or a presentation file.
IntMatrix load_weights(const std::string& path, std::optional<CoxPresentation>* pres = nullptr) {
  std::string text = read_text_file(path);
  if (looks_like_presentation(text)) {
    CoxPresentation p = parse_presentation(text);
    IntMatrix w = p.weights;
    if (pres) *pres = std::move(p);
    return w;
  }
  return parse_matrix(text);
}

CoxPresentation load_presentation(const std::string& path) {
  return parse_presentation(read_text_file(path));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::InvalidArgument, "cannot write file: " + path);
  f << content;
}

std::optional<unsigned> degree_bound_option(int flag) {
  if (flag > 0) return static_cast<unsigned>(flag);
  if (const char* env = std::getenv("COXFORGE_DEGREE_BOUND")) {
    Integer v = parse_integer(env);
    if (v < 1 || v > 1000) fail(ErrorKind::InvalidArgument, "COXFORGE_DEGREE_BOUND must be in 1..1000");
    return static_cast<unsigned>(v.get_ui());
  }
  return std::nullopt;
}

std::string fan_dot(const Fan& f, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "graph fan {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < f.num_rays(); ++i) {
    out << "  r" << i + 1 << " [label=\"";
    if (i < names.size()) out << names[i] << " ";
    out << format_vector(f.ray(i)) << "\"];\n";
  }
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    out << "  c" << c + 1 << " [shape=point];\n";
    for (std::size_t i : f.max_cones[c]) out << "  c" << c + 1 << " -- r" << i + 1 << ";\n";
  }
  out << "}\n";
  return out.str();
}

// Bundle data for `charts` from a rank-2 presentation with ideal (X)(Y):
// X is the block of equal columns, fiber weights are the cross products.
WeightedBundleSpec bundle_from_presentation(const CoxPresentation& p) {
  const auto& comps = p.irrelevant.components();
  if (p.rank() != 2 || comps.size() != 2)
    fail(ErrorKind::InvalidArgument, "charts needs a rank-2 presentation with two ideal components");
  auto equal_columns = [&](const IndexSet& s) {
    for (std::size_t i : s)
      if (!same_matrix(p.column(i), p.column(s[0]))) return false;
    return content(p.column(s[0])) == 1;
  };
  std::size_t xb = equal_columns(comps[0]) ? 0 : 1;
  if (!equal_columns(comps[xb])) fail(ErrorKind::InvalidArgument, "no block of equal primitive columns");
  const IndexSet& xs = comps[xb];
  const IndexSet& ys = comps[1 - xb];
  if (xs.size() + ys.size() != p.size()) fail(ErrorKind::InvalidArgument, "ideal components must partition the variables");
  IntVector x = p.column(xs[0]);
  std::vector<Integer> a;
  for (std::size_t i : ys) {
    IntVector c = p.column(i);
    Integer v = x(0) * c(1) - x(1) * c(0);
    a.push_back(abs(v));
  }
  if (a[0] != 1) fail(ErrorKind::InvalidArgument, "first fiber variable must have fiber weight 1");
  WeightedBundleSpec spec = weighted_bundle(static_cast<Index>(xs.size() - 1),
                                            std::vector<long>(a.size(), 0), to_longs(a));
  for (std::size_t i : xs) spec.base_names.push_back(p.variables[i]);
  for (std::size_t i : ys) spec.fiber_names.push_back(p.variables[i]);
  return spec;
}

struct Context {
  std::ostream& out;
  bool json = false;
  void emit(const Json& j) { out << j.dump(2) << "\n"; }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"coxforge: Cox presentations, well-forming, fans, VGIT and weighted blow-ups"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");
  Context ctx{out};
  std::function<void()> action;

  auto verb = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", json, "machine-readable output");
    return sub;
  };

  // standardize
  std::string s_file;
  auto* s_cmd = verb("standardize", "standardize a weight matrix");
  s_cmd->add_option("file", s_file, "matrix or presentation file")->required();
  s_cmd->callback([&] {
    action = [&] {
      IntMatrix m = load_weights(s_file);
      Integer d = minor_gcd(m, m.rows());
      Standardization st = standardize(m);
      if (ctx.json) {
        ctx.emit({{"minor_gcd", to_json(d)}, {"transform", to_json(st.transform)}, {"standard", to_json(st.standard)}});
        return;
      }
      out << "minor gcd: " << d << "\ntransform:\n" << format_matrix(st.transform) << "standard:\n"
          << format_matrix(st.standard);
    };
  });

  // wellform
  std::string w_file;
  auto* w_cmd = verb("wellform", "well-form a presentation or matrix");
  w_cmd->add_option("file", w_file, "presentation or matrix file")->required();
  w_cmd->callback([&] {
    action = [&] {
      std::optional<CoxPresentation> pres;
      IntMatrix m = load_weights(w_file, &pres);
      if (is_standard(m) && is_well_formed(m)) {
        if (ctx.json) ctx.emit({{"already_well_formed", true}});
        else out << "already well-formed\n";
        return;
      }
      WellFormedMatrix wf = well_form_matrix(m);
      bool ok = verify_certificate(m, wf.certificate, wf.matrix);
      ensure(ok, "well-forming certificate failed to verify");
      std::optional<CoxPresentation> result;
      if (pres) result = well_form(*pres).presentation;
      if (ctx.json) {
        Json j{{"already_well_formed", false}, {"matrix", to_json(wf.matrix)},
               {"certificate", certificate_text(wf.certificate)}, {"verified", ok}};
        if (result) j["presentation"] = presentation_json(*result);
        ctx.emit(j);
        return;
      }
      if (result) out << format_presentation(*result);
      else out << format_matrix(wf.matrix);
      out << "certificate: " << certificate_text(wf.certificate) << "\ncertificate verified\n";
    };
  });

  // wps
  std::vector<std::string> wps_weights;
  auto* wps_cmd = verb("wps", "well-form weighted projective space weights");
  wps_cmd->add_option("weights", wps_weights, "weights a0 a1 ... (or one comma list)")->required();
  wps_cmd->callback([&] {
    action = [&] {
      std::vector<Integer> a;
      for (const std::string& s : wps_weights)
        for (const Integer& v : parse_list(s)) a.push_back(v);
      std::vector<Integer> w = wps_well_form(a);
      if (ctx.json) {
        ctx.emit({{"input", list_json(a)}, {"well_formed", list_json(w)}});
        return;
      }
      out << "P(";
      for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
      out << ")\n";
    };
  });

  // gale
  std::string g_file;
  auto* g_cmd = verb("gale", "rays of the Gale dual");
  g_cmd->add_option("file", g_file, "matrix or presentation file")->required();
  g_cmd->callback([&] {
    action = [&] {
      IntMatrix b = gale_dual(load_weights(g_file));
      if (ctx.json) ctx.emit({{"rays", to_json(b)}});
      else out << format_matrix(b);
    };
  });

  // fan2cox
  std::string fc_file, fc_names;
  auto* fc_cmd = verb("fan2cox", "Cox presentation of a fan");
  fc_cmd->add_option("file", fc_file, "fan file")->required();
  fc_cmd->add_option("--names", fc_names, "comma-separated variable names");
  fc_cmd->callback([&] {
    action = [&] {
      Fan f = parse_fan(read_text_file(fc_file));
      std::vector<std::string> names;
      if (!fc_names.empty()) {
        std::istringstream in(fc_names);
        for (std::string n; std::getline(in, n, ',');) names.push_back(n);
      }
      CoxPresentation p = presentation_from_fan(f, names);
      if (ctx.json) ctx.emit(presentation_json(p));
      else out << format_presentation(p);
    };
  });

  // cox2fan
  std::string cf_file, cf_dot;
  auto* cf_cmd = verb("cox2fan", "fan of a well-formed presentation");
  cf_cmd->add_option("file", cf_file, "presentation file")->required();
  cf_cmd->add_option("--dot", cf_dot, "write a DOT graph of the fan");
  cf_cmd->callback([&] {
    action = [&] {
      CoxPresentation p = load_presentation(cf_file);
      Fan f = fan_from_presentation(p);
      if (!cf_dot.empty()) write_file(cf_dot, fan_dot(f, p.variables));
      if (ctx.json) ctx.emit(fan_json(f));
      else out << format_fan(f);
    };
  });

  // subdivide
  std::string sd_file, sd_ray;
  auto* sd_cmd = verb("subdivide", "star subdivision of a fan at a ray");
  sd_cmd->add_option("file", sd_file, "fan file")->required();
  sd_cmd->add_option("--ray", sd_ray, "comma-separated lattice vector")->required();
  sd_cmd->callback([&] {
    action = [&] {
      Fan f = star_subdivision(parse_fan(read_text_file(sd_file)), int_vector(parse_list(sd_ray)));
      if (ctx.json) ctx.emit(fan_json(f));
      else out << format_fan(f);
    };
  });

  // charts
  std::string ch_file, ch_omega, ch_a;
  int ch_n = 1;
  auto* ch_cmd = verb("charts", "quotient singularities at the torus-fixed points of a weighted bundle");
  ch_cmd->add_option("file", ch_file, "rank-2 bundle presentation (alternative to the flags)");
  ch_cmd->add_option("--n", ch_n, "base dimension");
  ch_cmd->add_option("--omega", ch_omega, "twists omega_0..omega_m");
  ch_cmd->add_option("--a", ch_a, "fiber weights a_1..a_m (or a_0..a_m with a_0 = 1)");
  ch_cmd->callback([&] {
    action = [&] {
      WeightedBundleSpec spec;
      if (!ch_file.empty()) {
        spec = bundle_from_presentation(load_presentation(ch_file));
      } else {
        if (ch_omega.empty() || ch_a.empty()) fail(ErrorKind::InvalidArgument, "charts needs a file or --omega and --a");
        spec = weighted_bundle(ch_n, to_longs(parse_list(ch_omega)), to_longs(parse_list(ch_a)));
      }
      std::vector<ChartReport> charts = weighted_bundle_charts(spec);
      if (ctx.json) {
        Json a = Json::array();
        for (const ChartReport& c : charts)
          a.push_back({{"base", c.base}, {"fiber", c.fiber}, {"index", to_json(c.type.index)},
                       {"weights", list_json(c.type.weights)}, {"verdict", verdict_name(classify(c.type))}});
        ctx.emit(a);
        return;
      }
      for (const ChartReport& c : charts)
        out << "U(" << c.base << "," << c.fiber << "): " << c.type.format() << " ["
            << verdict_name(classify(c.type)) << "]\n";
    };
  });

  // chambers
  std::string cb_file;
  auto* cb_cmd = verb("chambers", "GIT chambers of a rank-2 presentation");
  cb_cmd->add_option("file", cb_file, "presentation file")->required();
  cb_cmd->callback([&] {
    action = [&] {
      CoxPresentation p = load_presentation(cb_file);
      ChamberDecomposition d = chambers_rank2(p);
      Rank2Cones cones = cones_rank2(p);
      if (ctx.json) {
        Json walls = Json::array(), chambers = Json::array();
        for (const IntVector& w : d.walls) walls.push_back(vector_json(w));
        for (const Chamber& c : d.chambers) {
          CoxPresentation m = model_at_chamber(p, c);
          chambers.push_back({{"left", vector_json(c.left)}, {"right", vector_json(c.right)},
                              {"irrelevant", ideal_json(m.irrelevant, p.variables)}});
        }
        Json j{{"orientation", d.orientation}, {"walls", walls}, {"chambers", chambers},
               {"effective", {vector_json(cones.effective[0]), vector_json(cones.effective[1])}},
               {"moving", {vector_json(cones.moving[0]), vector_json(cones.moving[1])}}};
        j["input_chamber"] = d.input_chamber ? Json(*d.input_chamber) : Json(nullptr);
        ctx.emit(j);
        return;
      }
      out << "walls:";
      for (const IntVector& w : d.walls) out << " " << format_vector(w);
      out << "\neffective cone: " << format_vector(cones.effective[0]) << " " << format_vector(cones.effective[1])
          << "\nmoving cone: " << format_vector(cones.moving[0]) << " " << format_vector(cones.moving[1]) << "\n";
      for (const Chamber& c : d.chambers) {
        CoxPresentation m = model_at_chamber(p, c);
        out << "chamber " << c.index << " " << format_vector(c.left) << "|" << format_vector(c.right) << ": "
            << m.irrelevant.format(p.variables);
        if (d.input_chamber && *d.input_chamber == c.index) out << " [input]";
        out << "\n";
      }
    };
  });

  // game
  std::string gm_file, gm_dot;
  int gm_bound = 0;
  auto* gm_cmd = verb("game", "2-ray game of a rank-2 presentation");
  gm_cmd->add_option("file", gm_file, "presentation file")->required();
  gm_cmd->add_option("--dot", gm_dot, "write a DOT digraph of the game");
  gm_cmd->add_option("--bound", gm_bound, "degree bound for end generators");
  gm_cmd->callback([&] {
    action = [&] {
      CoxPresentation p = load_presentation(gm_file);
      GameDiagram g = two_ray_game(p, degree_bound_option(gm_bound));
      if (!gm_dot.empty()) write_file(gm_dot, game_to_dot(g, p));
      if (ctx.json) {
        Json models = Json::array(), crossings = Json::array();
        for (std::size_t i = 0; i < g.models.size(); ++i)
          models.push_back({{"left", vector_json(g.chambers[i].left)}, {"right", vector_json(g.chambers[i].right)},
                            {"irrelevant", ideal_json(g.models[i].irrelevant, p.variables)}});
        for (const WallCrossing& x : g.crossings) crossings.push_back(crossing_json(x, p.variables));
        Json j{{"orientation", g.orientation}, {"models", models}, {"crossings", crossings},
               {"ends", {end_json(g.ends[0], p.variables), end_json(g.ends[1], p.variables)}}};
        j["input_model"] = g.input_model ? Json(*g.input_model) : Json(nullptr);
        ctx.emit(j);
        return;
      }
      out << format_game(g, p);
    };
  });

  // gens
  std::string gn_file, gn_chi;
  int gn_bound = 0;
  auto* gn_cmd = verb("gens", "generators of the ring of sections of a character");
  gn_cmd->add_option("file", gn_file, "presentation file")->required();
  gn_cmd->add_option("--chi", gn_chi, "comma-separated character")->required();
  gn_cmd->add_option("--bound", gn_bound, "largest multiple of chi");
  gn_cmd->callback([&] {
    action = [&] {
      CoxPresentation p = load_presentation(gn_file);
      std::optional<unsigned> bound = degree_bound_option(gn_bound);
      std::vector<Monomial> gens = graded_ring_generators(p, int_vector(parse_list(gn_chi)), bound.value_or(2));
      if (ctx.json) {
        ctx.emit(gens_json(gens, p.variables));
        return;
      }
      for (const Monomial& m : gens) out << m.format(p.variables) << "\n";
    };
  });

  // blowup
  std::string bu_file, bu_center, bu_b, bu_newvar = "xi", bu_wps;
  int bu_k = -1, bu_split = -1, bu_alpha = 1;
  auto* bu_cmd = verb("blowup", "weighted blow-up of a bundle fixed point or a WPS stratum");
  bu_cmd->add_option("file", bu_file, "weighted bundle presentation");
  bu_cmd->add_option("--center", bu_center, "BASE,FIBER: 0-based indices of the nonzero coordinates");
  bu_cmd->add_option("--k", bu_k, "fiber index of the a_k direction (defaults to FIBER)");
  bu_cmd->add_option("--b", bu_b, "comma-separated exceptional weights");
  bu_cmd->add_option("--newvar", bu_newvar, "name of the exceptional variable");
  bu_cmd->add_option("--wps", bu_wps, "weights a0,..,an of a weighted projective space instead of a file");
  bu_cmd->add_option("--split", bu_split, "last index of the first WPS block");
  bu_cmd->add_option("--alpha", bu_alpha, "weight of the exceptional variable in the WPS case");
  bu_cmd->callback([&] {
    action = [&] {
      if (bu_b.empty()) fail(ErrorKind::InvalidArgument, "--b is required");
      std::vector<Integer> b = parse_list(bu_b);
      CoxPresentation result;
      std::vector<Substitution> map;
      if (!bu_wps.empty()) {
        if (!bu_file.empty()) fail(ErrorKind::InvalidArgument, "give either a file or --wps");
        if (bu_split < 0) fail(ErrorKind::InvalidArgument, "--split is required with --wps");
        std::vector<Integer> a = parse_list(bu_wps);
        std::vector<std::string> names{bu_newvar};
        for (const std::string& s : default_names("x", a.size())) names.push_back(s);
        result = blow_up_wps(a, static_cast<std::size_t>(bu_split), Integer(bu_alpha), b, names);
        map = blowup_map_description(result, 0);
      } else {
        if (bu_file.empty() || bu_center.empty()) fail(ErrorKind::InvalidArgument, "need a file and --center");
        std::vector<Integer> c = parse_list(bu_center);
        if (c.size() != 2) fail(ErrorKind::InvalidArgument, "--center takes BASE,FIBER");
        std::size_t k = to_index(c[1]);
        if (bu_k >= 0 && static_cast<std::size_t>(bu_k) != k)
          fail(ErrorKind::InvalidArgument, "--k must equal the fiber index of --center");
        CoxPresentation p = load_presentation(bu_file);
        BlowupSpec spec = make_blowup_spec(p, to_index(c[0]), k, b, bu_newvar);
        result = blow_up_weighted_bundle(p, spec);
        map = blowup_map_description(result, spec);
      }
      if (ctx.json) {
        Json m = Json::object();
        for (const Substitution& s : map) m[s.variable] = s.format();
        ctx.emit({{"presentation", presentation_json(result)}, {"map", m}});
        return;
      }
      out << format_presentation(result) << "# map:";
      for (const Substitution& s : map) out << " " << s.variable << "->" << s.format();
      out << "\n";
    };
  });

  // discrepancy
  std::string dc_file;
  auto* dc_cmd = verb("discrepancy", "discrepancy of a weighted blow-up restricted to a complete intersection");
  dc_cmd->add_option("file", dc_file, "discrepancy spec file")->required();
  dc_cmd->callback([&] {
    action = [&] {
      DiscrepancySpec ds = parse_discrepancy_spec(read_text_file(dc_file));
      std::filesystem::path base = std::filesystem::path(dc_file).parent_path();
      std::filesystem::path pp(ds.presentation_path);
      if (pp.is_relative()) pp = base / pp;
      CoxPresentation bundle = load_presentation(pp.string());
      for (const Equation& e : ds.ci.equations)
        if (e.degree.size() != 0 && e.degree.size() != bundle.rank() + 1)
          fail(ErrorKind::InvalidArgument, "equation degrees must have one entry per blow-up weight row");
      std::vector<Integer> b = ds.b;
      std::optional<Integer> solved;
      if (ds.solve) {
        std::vector<Integer> a = bundle_fiber_weights(bundle);
        if (ds.solve->unknown >= b.size() || ds.solve->unknown >= a.size())
          fail(ErrorKind::InvalidArgument, "solve index out of range");
        b[ds.solve->unknown] = a[ds.solve->unknown];  // placeholder in the right residue class
        BlowupSpec pattern = make_blowup_spec(bundle, ds.center_base, ds.k, b, ds.new_var);
        solved = solve_exceptional_weight(pattern, ds.solve->unknown, ds.ci, ds.solve->target, ds.solve->bound);
        b[ds.solve->unknown] = *solved;
      }
      BlowupSpec spec = make_blowup_spec(bundle, ds.center_base, ds.k, b, ds.new_var);
      Rational disc = discrepancy(spec, ds.ci);
      std::vector<Integer> orders;
      for (const Equation& e : ds.ci.equations) orders.push_back(e.order ? *e.order : pullback_order(spec, e.support));
      if (ctx.json) {
        Json j{{"b", list_json(b)}, {"a_k", to_json(spec.a_k())}, {"orders", list_json(orders)},
               {"discrepancy", to_string(disc)}};
        if (solved) j["solved"] = to_json(*solved);
        ctx.emit(j);
        return;
      }
      if (solved) out << "solved b_" << ds.solve->unknown << " = " << *solved << "\n";
      out << "b:";
      for (const Integer& v : b) out << " " << v;
      out << "\norders (units of 1/" << spec.a_k() << "):";
      for (const Integer& v : orders) out << " " << v;
      out << "\ndiscrepancy: " << to_string(disc) << "\n";
    };
  });

  // equiv
  std::string eq_a, eq_b;
  auto* eq_cmd = verb("equiv", "decide equivalence of two presentations up to relabelling");
  eq_cmd->add_option("first", eq_a, "presentation file")->required();
  eq_cmd->add_option("second", eq_b, "presentation file")->required();
  eq_cmd->callback([&] {
    action = [&] {
      bool same = presentations_equivalent(load_presentation(eq_a), load_presentation(eq_b));
      if (ctx.json) ctx.emit({{"equivalent", same}});
      else out << (same ? "equivalent" : "not equivalent") << "\n";
    };
  });

  for (const std::string& a : args) {
    if (a.empty() || a[0] == '-') continue;
    if (app.get_subcommand_no_throw(a) == nullptr) {
      err << "error: unknown verb '" << a << "'\n" << app.help();
      return 2;
    }
    break;
  }

  std::vector<const char*> argv{"coxforge"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  ctx.json = json;

  try {
    if (!action) {
      err << app.help();
      return 2;
    }
    action();
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace coxforge::cli
