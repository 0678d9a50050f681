#include "coxforge/textio.hpp"

#include <fstream>
#include <sstream>

namespace coxforge {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
  std::string raw;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    out.push_back({number, std::move(tokens), raw});
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

class Cursor {
 public:
  explicit Cursor(const std::string& text) : lines_(significant_lines(text)) {}

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const {
    if (done()) parse_fail(last_number(), "unexpected end of input");
    return lines_[pos_];
  }
  const Line& next() {
    const Line& l = peek();
    ++pos_;
    return l;
  }
  // Line "keyword v1 .. vk": returns the values.
  std::vector<std::string> keyword(const std::string& word, std::size_t count) {
    const Line& l = next();
    if (l.tokens[0] != word) parse_fail(l.number, "expected '" + word + "'");
    if (count != npos && l.tokens.size() != count + 1)
      parse_fail(l.number, "'" + word + "' takes " + std::to_string(count) + " value(s)");
    return {l.tokens.begin() + 1, l.tokens.end()};
  }
  std::size_t last_number() const { return lines_.empty() ? 0 : lines_.back().number; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

Integer integer_at(std::size_t line, const std::string& tok) {
  try {
    return parse_integer(tok);
  } catch (const Error&) {
    parse_fail(line, "not an integer: '" + tok + "'");
  }
}

std::size_t count_at(std::size_t line, const std::string& tok) {
  Integer v = integer_at(line, tok);
  if (v < 0 || !v.fits_ulong_p()) parse_fail(line, "not a count: '" + tok + "'");
  return v.get_ui();
}

void read_rows(Cursor& c, IntMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    const Line& l = c.next();
    if (static_cast<Index>(l.tokens.size()) != m.cols())
      parse_fail(l.number, "expected " + std::to_string(m.cols()) + " integers");
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = integer_at(l.number, l.tokens[static_cast<std::size_t>(j)]);
  }
}

void expect_end(const Cursor& c) {
  if (!c.done()) parse_fail(c.peek().number, "trailing content");
}

std::string join_row(const IntMatrix& m, Index i) {
  std::string s;
  for (Index j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m(i, j).get_str();
  return s;
}

// "(a,b)(c,d)" with optional spaces or ∩ between components.
std::vector<std::vector<std::string>> parse_components(std::size_t line, const std::string& s) {
  std::vector<std::vector<std::string>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (ch == ' ' || ch == '\t') { ++i; continue; }
    if (s.compare(i, 3, "\xE2\x88\xA9") == 0) { i += 3; continue; }
    if (ch != '(') parse_fail(line, "expected '(' in irrelevant ideal");
    std::size_t close = s.find(')', i);
    if (close == std::string::npos) parse_fail(line, "unbalanced '(' in irrelevant ideal");
    std::vector<std::string> comp;
    std::istringstream in(s.substr(i + 1, close - i - 1));
    for (std::string name; std::getline(in, name, ',');) {
      std::size_t a = name.find_first_not_of(" \t"), b = name.find_last_not_of(" \t");
      if (a == std::string::npos) parse_fail(line, "empty variable name in irrelevant ideal");
      comp.push_back(name.substr(a, b - a + 1));
    }
    if (comp.empty()) parse_fail(line, "empty component in irrelevant ideal");
    out.push_back(std::move(comp));
    i = close + 1;
  }
  if (out.empty()) parse_fail(line, "irrelevant ideal has no components");
  return out;
}

}  // namespace

IntMatrix parse_matrix(const std::string& text) {
  Cursor c(text);
  const Line& head = c.next();
  if (head.tokens.size() != 2) parse_fail(head.number, "expected 'r n'");
  IntMatrix m(static_cast<Index>(count_at(head.number, head.tokens[0])),
              static_cast<Index>(count_at(head.number, head.tokens[1])));
  read_rows(c, m);
  expect_end(c);
  return m;
}

std::string format_matrix(const IntMatrix& m) {
  std::string s = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (Index i = 0; i < m.rows(); ++i) s += join_row(m, i) + "\n";
  return s;
}

CoxPresentation parse_presentation(const std::string& text) {
  Cursor c(text);
  std::size_t rank_line = c.peek().number;
  std::size_t r = count_at(rank_line, c.keyword("rank", 1)[0]);
  if (r == 0) parse_fail(rank_line, "rank must be positive");
  std::size_t vars_line = c.peek().number;
  std::vector<std::string> vars = c.keyword("vars", Cursor::npos);
  if (vars.empty()) parse_fail(vars_line, "no variables");
  IntMatrix w(static_cast<Index>(r), static_cast<Index>(vars.size()));
  read_rows(c, w);
  const Line& il = c.next();
  if (il.tokens[0] != "irrelevant") parse_fail(il.number, "expected 'irrelevant'");
  std::string rest = il.raw.substr(il.raw.find("irrelevant") + 10);
  auto comps = parse_components(il.number, rest);
  bool stacky = false;
  if (!c.done()) {
    std::size_t sl = c.peek().number;
    std::vector<std::string> v = c.keyword("stacky", 1);
    if (v[0] == "true") stacky = true;
    else if (v[0] != "false") parse_fail(sl, "stacky takes true or false");
  }
  expect_end(c);
  try {
    return make_presentation(std::move(vars), std::move(w), comps, stacky);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    throw Error(e.kind(), std::string("presentation: ") + e.what());
  }
}

std::string format_presentation(const CoxPresentation& p) {
  std::string s = "rank " + std::to_string(p.rank()) + "\nvars";
  for (const std::string& v : p.variables) s += " " + v;
  s += "\n";
  for (Index i = 0; i < p.rank(); ++i) s += join_row(p.weights, i) + "\n";
  s += "irrelevant " + p.irrelevant.format(p.variables) + "\n";
  if (p.stacky) s += "stacky true\n";
  return s;
}

Fan parse_fan(const std::string& text) {
  Cursor c(text);
  std::size_t dl = c.peek().number;
  std::size_t d = count_at(dl, c.keyword("dim", 1)[0]);
  std::size_t rl = c.peek().number;
  std::size_t k = count_at(rl, c.keyword("rays", 1)[0]);
  IntMatrix rays(static_cast<Index>(k), static_cast<Index>(d));
  read_rows(c, rays);
  std::size_t cl = c.peek().number;
  std::size_t m = count_at(cl, c.keyword("cones", 1)[0]);
  std::vector<IndexSet> cones;
  for (std::size_t i = 0; i < m; ++i) {
    const Line& l = c.next();
    IndexSet cone;
    for (const std::string& t : l.tokens) {
      std::size_t v = count_at(l.number, t);
      if (v < 1 || v > k) parse_fail(l.number, "ray index out of range: " + t);
      cone.push_back(v - 1);
    }
    cones.push_back(std::move(cone));
  }
  expect_end(c);
  return make_fan(std::move(rays), std::move(cones));
}

std::string format_fan(const Fan& f) {
  std::string s = "dim " + std::to_string(f.lattice_dim) + "\nrays " + std::to_string(f.num_rays()) + "\n";
  for (Index i = 0; i < f.rays.rows(); ++i) s += join_row(f.rays, i) + "\n";
  s += "cones " + std::to_string(f.max_cones.size()) + "\n";
  for (const IndexSet& cone : f.max_cones) {
    for (std::size_t j = 0; j < cone.size(); ++j) s += (j ? " " : "") + std::to_string(cone[j] + 1);
    s += "\n";
  }
  return s;
}

DiscrepancySpec parse_discrepancy_spec(const std::string& text) {
  DiscrepancySpec spec;
  bool have_pres = false, have_center = false, have_b = false;
  Cursor c(text);
  while (!c.done()) {
    const Line& l = c.next();
    const std::string& key = l.tokens[0];
    std::vector<std::string> v(l.tokens.begin() + 1, l.tokens.end());
    auto need = [&](std::size_t lo, std::size_t hi) {
      if (v.size() < lo || v.size() > hi) parse_fail(l.number, "wrong number of values for '" + key + "'");
    };
    if (key == "presentation") {
      need(1, 1);
      spec.presentation_path = v[0];
      have_pres = true;
    } else if (key == "center") {
      need(2, 2);
      spec.center_base = count_at(l.number, v[0]);
      spec.k = count_at(l.number, v[1]);
      have_center = true;
    } else if (key == "b") {
      need(1, Cursor::npos);
      spec.b.clear();
      for (const std::string& t : v) spec.b.push_back(integer_at(l.number, t));
      have_b = true;
    } else if (key == "newvar") {
      need(1, 1);
      spec.new_var = v[0];
    } else if (key == "equation") {
      Equation eq;
      std::vector<std::vector<std::string>> groups(1);
      for (const std::string& t : v) {
        if (t == ";") groups.emplace_back();
        else groups.back().push_back(t);
      }
      eq.degree.resize(static_cast<Index>(groups[0].size()));
      for (std::size_t i = 0; i < groups[0].size(); ++i)
        eq.degree(static_cast<Index>(i)) = integer_at(l.number, groups[0][i]);
      for (std::size_t g = 1; g < groups.size(); ++g) {
        if (groups[g].empty()) parse_fail(l.number, "empty exponent vector");
        Exponents e;
        for (const std::string& t : groups[g]) e.push_back(count_at(l.number, t));
        eq.support.push_back(std::move(e));
      }
      spec.ci.equations.push_back(std::move(eq));
    } else if (key == "order") {
      need(1, 1);
      if (spec.ci.equations.empty()) parse_fail(l.number, "'order' before any equation");
      spec.ci.equations.back().order = integer_at(l.number, v[0]);
    } else if (key == "solve") {
      need(2, 3);
      DiscrepancySpec::Solve s{count_at(l.number, v[0]), Rational(0)};
      try {
        s.target = parse_rational(v[1]);
      } catch (const Error&) {
        parse_fail(l.number, "not a rational: '" + v[1] + "'");
      }
      if (v.size() == 3) s.bound = integer_at(l.number, v[2]);
      spec.solve = s;
    } else {
      parse_fail(l.number, "unknown keyword '" + key + "'");
    }
  }
  if (!have_pres || !have_center || !have_b)
    parse_fail(c.last_number(), "need 'presentation', 'center' and 'b' lines");
  return spec;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace coxforge
