#include "coxforge/vgit.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace coxforge {

IntVector ray2(long x, long y) { return int_vector({x, y}); }

const char* crossing_name(CrossingKind k) {
  switch (k) {
    case CrossingKind::Flip: return "Flip";
    case CrossingKind::AntiFlip: return "AntiFlip";
    case CrossingKind::Flop: return "Flop";
  }
  return "Flop";
}

std::string format_vector(const IntVector& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v(i));
  return out + ")";
}

namespace {

Integer cross(const IntVector& a, const IntVector& b) {
  Integer v = a(0) * b(1) - a(1) * b(0);
  return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer v = a(0) * b(0) + a(1) * b(1);
  return v;
}

bool same_direction(const IntVector& a, const IntVector& b) {
  return cross(a, b) == 0 && dot(a, b) > 0;
}

// Angular sweep of the columns of a 2 x n matrix.
class Sweep {
 public:
  Sweep(const IntMatrix& w, int sigma) : sigma_(sigma) {
    if (w.rows() != 2) fail(ErrorKind::InvalidArgument, "rank-2 weight matrix required");
    for (Index j = 0; j < w.cols(); ++j) {
      if (w.col(j).isZero()) fail(ErrorKind::InvalidArgument, "zero weight column");
      columns_.push_back(w.col(j));
      dirs_.push_back(primitive(w.col(j)));
    }
    bool found = false;
    for (const IntVector& s : dirs_) {
      bool ok = true;
      for (const IntVector& c : dirs_)
        if (sigma_ * cross(s, c) < 0) ok = false;
      if (ok) {
        start_ = s;
        found = true;
        break;
      }
    }
    bool opposite = false;
    for (const IntVector& c : dirs_)
      if (cross(dirs_[0], c) == 0 && dot(dirs_[0], c) < 0) opposite = true;
    bool on_line = std::all_of(dirs_.begin(), dirs_.end(),
                               [&](const IntVector& c) { return cross(dirs_[0], c) == 0; });
    if (!found || (on_line && opposite))
      fail(ErrorKind::NotQuasiProjective,
           "weight columns are not contained in a half-plane; no chamber sweep exists");

    for (const IntVector& d : dirs_)
      if (std::none_of(walls_.begin(), walls_.end(), [&](const IntVector& x) { return same_direction(x, d); }))
        walls_.push_back(d);
    std::sort(walls_.begin(), walls_.end(), [&](const IntVector& a, const IntVector& b) { return less(a, b); });
    for (const IntVector& d : dirs_) wall_of_.push_back(*wall_index(d));

    std::vector<std::size_t> order(dirs_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return wall_of_[a] < wall_of_[b]; });
    const std::size_t n = order.size();
    eff_ = {dirs_[order.front()], dirs_[order.back()]};
    mov_ = {dirs_[order[n >= 2 ? 1 : 0]], dirs_[order[n >= 2 ? n - 2 : 0]]};
  }

  int sigma() const { return sigma_; }
  const IntVector& start() const { return start_; }
  const std::vector<IntVector>& walls() const { return walls_; }
  const std::vector<IntVector>& dirs() const { return dirs_; }
  const std::vector<IntVector>& columns() const { return columns_; }
  std::size_t wall_of(std::size_t v) const { return wall_of_[v]; }
  const std::array<IntVector, 2>& effective() const { return eff_; }
  const std::array<IntVector, 2>& moving() const { return mov_; }
  bool half_plane() const { return same_direction(eff_[1], IntVector(-eff_[0])); }
  bool moving_has_interior() const { return less(mov_[0], mov_[1]); }

  // Strict angular order measured from the start ray in the sweep direction.
  bool less(const IntVector& a, const IntVector& b) const {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    if (ha == 1 || same_direction(a, b)) return false;
    return sigma_ * cross(a, b) > 0;
  }
  bool equal(const IntVector& a, const IntVector& b) const { return !less(a, b) && !less(b, a); }

  std::optional<std::size_t> wall_index(const IntVector& v) const {
    for (std::size_t i = 0; i < walls_.size(); ++i)
      if (same_direction(walls_[i], v)) return i;
    return std::nullopt;
  }

  IndexSet before(std::size_t chamber) const {
    IndexSet s;
    for (std::size_t v = 0; v < dirs_.size(); ++v)
      if (wall_of_[v] <= chamber) s.push_back(v);
    return s;
  }
  IndexSet after(std::size_t chamber) const {
    IndexSet s;
    for (std::size_t v = 0; v < dirs_.size(); ++v)
      if (wall_of_[v] > chamber) s.push_back(v);
    return s;
  }

  std::vector<Chamber> chambers() const {
    std::vector<Chamber> out;
    for (std::size_t i = 0; i + 1 < walls_.size(); ++i) out.push_back({walls_[i], walls_[i + 1], i});
    return out;
  }

 private:
  int half(const IntVector& c) const {
    return (sigma_ * cross(start_, c) > 0 || same_direction(start_, c)) ? 0 : 1;
  }

  int sigma_;
  IntVector start_;
  std::vector<IntVector> columns_, dirs_, walls_;
  std::vector<std::size_t> wall_of_;
  std::array<IntVector, 2> eff_, mov_;
};

Sweep matrix_sweep(const IntMatrix& w) {
  Sweep ccw(w, 1);
  if (same_direction(ccw.start(), w.col(0))) return ccw;
  Sweep cw(w, -1);
  if (same_direction(cw.start(), w.col(0))) return cw;
  return ccw;
}

struct OrientedSweep {
  Sweep sweep;
  std::optional<std::size_t> input_chamber;
};

// Irrelevant ideal of the GIT quotient at chamber i: generated by x_a x_b
// for every pair of columns whose open cone contains the chamber. Equal to
// (before)∩(after) unless the columns fill a half-plane.
MonomialIdeal split_ideal(const Sweep& s, std::size_t i) {
  return MonomialIdeal({s.before(i), s.after(i)}, s.dirs().size());
}

MonomialIdeal chamber_ideal(const Sweep& s, std::size_t i) {
  const std::size_t n = s.dirs().size();
  MonomialIdeal split = split_ideal(s, i);
  IntVector chi = s.walls()[i] + s.walls()[i + 1];
  std::vector<IndexSet> gens;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const IntVector &ca = s.dirs()[a], &cb = s.dirs()[b];
      if (cross(ca, cb) == 0) continue;
      Integer l = cross(ca, chi), r = cross(chi, cb);
      if ((l > 0 && r > 0) || (l < 0 && r < 0)) gens.push_back({a, b});
    }
  MonomialIdeal exact = MonomialIdeal::from_generators(gens, n);
  return exact.same_ideal(split) ? split : exact;
}

OrientedSweep oriented_sweep(const CoxPresentation& p) {
  const auto& comps = p.irrelevant.components();
  std::vector<Sweep> sweeps{Sweep(p.weights, 1), Sweep(p.weights, -1)};
  for (const Sweep& s : sweeps)
    for (std::size_t i = 0; i + 1 < s.walls().size(); ++i)
      if (chamber_ideal(s, i).components() == comps || split_ideal(s, i).components() == comps)
        return {s, i};
  // input ideal listed in another order
  for (const Sweep& s : sweeps)
    for (std::size_t i = 0; i + 1 < s.walls().size(); ++i)
      if (chamber_ideal(s, i).same_ideal(p.irrelevant) || split_ideal(s, i).same_ideal(p.irrelevant))
        return {s, i};
  return {matrix_sweep(p.weights), std::nullopt};
}

ChamberDecomposition decomposition(const Sweep& s, std::optional<std::size_t> input) {
  return {s.walls(), s.chambers(), s.sigma(), input};
}

std::size_t locate_chamber(const Sweep& s, const Chamber& c) {
  for (std::size_t i = 0; i + 1 < s.walls().size(); ++i)
    if (same_direction(s.walls()[i], c.left) && same_direction(s.walls()[i + 1], c.right)) return i;
  fail(ErrorKind::InvalidArgument, "chamber " + format_vector(c.left) + "|" + format_vector(c.right) +
                                       " is not a chamber of this presentation");
}

// Coefficient t with c = t * r for c parallel to the primitive r.
Integer multiple_along(const IntVector& c, const IntVector& r) {
  Integer t = dot(c, r) / dot(r, r);
  return t;
}

// Does some nonzero f <= e have sum f_i l_i = 0?
bool has_degree_zero_divisor(const std::vector<unsigned long>& e, const std::vector<Integer>& l) {
  std::vector<unsigned long> f(e.size(), 0);
  std::function<bool(std::size_t, const Integer&, bool)> rec = [&](std::size_t i, const Integer& sum,
                                                                   bool nonzero) -> bool {
    if (i == e.size()) return nonzero && sum == 0;
    for (unsigned long v = 0; v <= e[i]; ++v) {
      Integer next = sum + l[i] * v;
      if (rec(i + 1, next, nonzero || v > 0)) return true;
    }
    return false;
  };
  return rec(0, Integer(0), false);
}

bool lex_greater(const Monomial& a, const Monomial& b) { return a.exponents > b.exponents; }

}  // namespace

ChamberDecomposition chambers_rank2(const CoxPresentation& p) {
  OrientedSweep o = oriented_sweep(p);
  return decomposition(o.sweep, o.input_chamber);
}

ChamberDecomposition chambers_rank2(const IntMatrix& weights) {
  return decomposition(matrix_sweep(weights), std::nullopt);
}

CoxPresentation model_at_chamber(const CoxPresentation& p, const Chamber& chamber) {
  OrientedSweep o = oriented_sweep(p);
  std::size_t i = locate_chamber(o.sweep, chamber);
  CoxPresentation out = p;
  out.irrelevant = chamber_ideal(o.sweep, i);
  return out;
}

WallCrossing wall_crossing(const CoxPresentation& p, const IntVector& wall_in) {
  OrientedSweep o = oriented_sweep(p);
  const Sweep& s = o.sweep;
  if (wall_in.size() != 2 || wall_in.isZero()) fail(ErrorKind::InvalidArgument, "wall must be a nonzero vector in Z^2");
  IntVector wall = primitive(wall_in);
  if (!s.wall_index(wall)) fail(ErrorKind::InvalidArgument, format_vector(wall) + " is not a wall");
  const auto& mov = s.moving();
  if (!(s.less(mov[0], wall) && s.less(wall, mov[1])))
    fail(ErrorKind::InvalidArgument,
         format_vector(wall) + " is not strictly inside the moving cone; use end_behavior");
  WallCrossing x;
  x.wall = wall;
  Integer sum = 0;
  for (std::size_t v = 0; v < p.size(); ++v) {
    const IntVector& c = s.columns()[v];
    if (same_direction(s.dirs()[v], wall)) {
      x.base_vars.push_back(v);
      x.base_weights.push_back(multiple_along(c, wall));
      continue;
    }
    Integer t = s.sigma() * cross(c, wall);
    x.off_wall_vars.push_back(v);
    x.type_vector.push_back(t);
    sum += t;
  }
  x.classification = sum > 0 ? CrossingKind::Flip : sum < 0 ? CrossingKind::AntiFlip : CrossingKind::Flop;
  return x;
}

std::string Monomial::format(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i < names.size() ? names[i] : "v" + std::to_string(i);
    if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

std::vector<Monomial> graded_ring_generators(const CoxPresentation& p, const IntVector& chi,
                                             unsigned degree_bound) {
  if (p.rank() != 2) fail(ErrorKind::InvalidArgument, "rank-2 presentation required");
  if (chi.size() != 2 || chi.isZero()) fail(ErrorKind::InvalidArgument, "character must be nonzero in Z^2");
  Sweep s(p.weights, 1);
  const auto& eff = s.effective();
  const bool half = s.half_plane();
  const std::size_t n = p.size();
  // phi >= 0 on all columns; zero only along the boundary line in the half-plane case.
  auto phi = [&](const IntVector& c) -> Integer {
    Integer v = cross(eff[0], c);
    if (!half) v += cross(c, eff[1]);
    return v;
  };
  std::vector<std::size_t> off, line;
  std::vector<Integer> phi_of(n), line_coef;
  for (std::size_t v = 0; v < n; ++v) {
    phi_of[v] = phi(s.columns()[v]);
    if (phi_of[v] > 0) {
      off.push_back(v);
    } else {
      ensure(half && phi_of[v] == 0, "graded_ring_generators: functional not nonnegative");
      line.push_back(v);
      line_coef.push_back(multiple_along(s.columns()[v], eff[0]));
    }
  }
  Integer lmax = 0;
  for (const Integer& l : line_coef) lmax = std::max(lmax, Integer(abs(l)));

  std::vector<Monomial> gens;
  for (unsigned k = 1; k <= degree_bound; ++k) {
    IntVector target = chi * Integer(k);
    Integer budget = phi(target);
    if (budget < 0) continue;
    std::vector<Monomial> level;
    Monomial cur{std::vector<unsigned long>(n, 0)};

    auto emit = [&]() {
      for (const Monomial& g : gens)
        if (g.divides(cur)) return;
      level.push_back(cur);
    };
    auto line_part = [&](const Integer& t) {
      Integer cap = abs(t) + Integer(static_cast<unsigned long>(line.size())) * lmax * lmax;
      std::function<void(std::size_t, const Integer&)> rec = [&](std::size_t i, const Integer& sum) {
        if (i == line.size()) {
          if (sum != t) return;
          std::vector<unsigned long> e;
          for (std::size_t v : line) e.push_back(cur.exponents[v]);
          if (!has_degree_zero_divisor(e, line_coef)) emit();
          return;
        }
        for (unsigned long v = 0; Integer(v) <= cap; ++v) {
          cur.exponents[line[i]] = v;
          Integer next = sum + line_coef[i] * v;
          rec(i + 1, next);
        }
        cur.exponents[line[i]] = 0;
      };
      rec(0, Integer(0));
    };
    std::function<void(std::size_t, const Integer&, const IntVector&)> rec =
        [&](std::size_t i, const Integer& left, const IntVector& residual) {
          if (i == off.size()) {
            if (left != 0) return;
            if (!half) {
              if (residual.isZero()) emit();
              return;
            }
            line_part(multiple_along(residual, eff[0]));
            return;
          }
          const std::size_t v = off[i];
          Integer top = left / phi_of[v];
          for (unsigned long e = 0; Integer(e) <= top; ++e) {
            cur.exponents[v] = e;
            Integer rest = left - phi_of[v] * e;
            IntVector res = residual - s.columns()[v] * Integer(e);
            rec(i + 1, rest, res);
          }
          cur.exponents[v] = 0;
        };
    rec(0, budget, target);
    std::sort(level.begin(), level.end(), lex_greater);
    gens.insert(gens.end(), level.begin(), level.end());
  }
  return gens;
}

EndBehavior end_behavior(const CoxPresentation& p, const IntVector& ray_in,
                         std::optional<unsigned> degree_bound) {
  OrientedSweep o = oriented_sweep(p);
  const Sweep& s = o.sweep;
  if (ray_in.size() != 2 || ray_in.isZero()) fail(ErrorKind::InvalidArgument, "ray must be nonzero in Z^2");
  IntVector ray = primitive(ray_in);
  const auto& mov = s.moving();
  int side;
  if (same_direction(ray, mov[0])) side = 0;
  else if (same_direction(ray, mov[1])) side = 1;
  else fail(ErrorKind::InvalidArgument, format_vector(ray) + " is not a boundary ray of the moving cone");

  std::vector<std::size_t> beyond;
  Integer tmax = 1;
  for (std::size_t v = 0; v < p.size(); ++v) {
    const IntVector& d = s.dirs()[v];
    if (side == 0 ? s.less(d, mov[0]) : s.less(mov[1], d)) beyond.push_back(v);
    if (same_direction(d, ray)) tmax = std::max(tmax, multiple_along(s.columns()[v], ray));
  }
  unsigned bound = degree_bound ? *degree_bound : static_cast<unsigned>(tmax.get_ui()) + 1;
  std::vector<Monomial> gens = graded_ring_generators(p, ray, bound);
  EndBehavior out{ray, Unclassified{beyond.size()}, bound};
  if (beyond.empty()) out.kind = Fibration{std::move(gens)};
  else if (beyond.size() == 1) out.kind = DivisorialContraction{beyond[0], std::move(gens)};
  return out;
}

Rank2Cones cones_rank2(const CoxPresentation& p) {
  OrientedSweep o = oriented_sweep(p);
  return {o.sweep.effective(), o.sweep.moving()};
}

bool anticanonical_in_moving_interior(const CoxPresentation& p,
                                      const std::vector<IntVector>& equation_degrees) {
  IntVector k = p.weights.rowwise().sum();
  for (const IntVector& d : equation_degrees) {
    if (d.size() != p.rank()) fail(ErrorKind::InvalidArgument, "equation degree has the wrong length");
    k -= d;
  }
  if (p.rank() == 1) {
    bool pos = (p.weights.array() > 0).all(), neg = (p.weights.array() < 0).all();
    if (!pos && !neg) fail(ErrorKind::NotQuasiProjective, "weights of both signs");
    return pos ? k(0) > 0 : k(0) < 0;
  }
  if (p.rank() != 2) fail(ErrorKind::InvalidArgument, "rank 1 or 2 required");
  OrientedSweep o = oriented_sweep(p);
  const Sweep& s = o.sweep;
  if (k.isZero() || !s.moving_has_interior()) return false;
  const auto& mov = s.moving();
  return s.sigma() * cross(mov[0], k) > 0 && s.sigma() * cross(k, mov[1]) > 0;
}

GameDiagram two_ray_game(const CoxPresentation& p, std::optional<unsigned> degree_bound) {
  OrientedSweep o = oriented_sweep(p);
  const Sweep& s = o.sweep;
  if (!s.moving_has_interior()) fail(ErrorKind::InvalidArgument, "moving cone has empty interior");
  const auto& mov = s.moving();
  GameDiagram g;
  g.orientation = s.sigma();
  for (const Chamber& c : s.chambers()) {
    if (s.less(c.left, mov[0]) || s.less(mov[1], c.right)) continue;
    if (o.input_chamber && *o.input_chamber == c.index) g.input_model = g.chambers.size();
    g.chambers.push_back(c);
    CoxPresentation m = p;
    m.irrelevant = chamber_ideal(s, c.index);
    g.models.push_back(std::move(m));
  }
  for (std::size_t i = 0; i + 1 < g.chambers.size(); ++i)
    g.crossings.push_back(wall_crossing(p, g.chambers[i].right));
  g.ends = {end_behavior(p, mov[0], degree_bound), end_behavior(p, mov[1], degree_bound)};
  ensure(g.crossings.size() + 1 == g.models.size(), "two_ray_game: crossing count");
  return g;
}

namespace {

std::string format_list(const std::vector<Integer>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

std::string format_gens(const std::vector<Monomial>& gens, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + gens[i].format(names);
  return out;
}

std::string describe_end(const EndBehavior& e, const std::vector<std::string>& names) {
  return std::visit(
      [&](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Fibration>) {
          return "Fibration; target generators " + format_gens(k.target_generators, names);
        } else if constexpr (std::is_same_v<T, DivisorialContraction>) {
          return "DivisorialContraction of " + names[k.variable] + "; target generators " +
                 format_gens(k.target_generators, names);
        } else {
          return "Unclassified (" + std::to_string(k.beyond) + " columns beyond)";
        }
      },
      e.kind);
}

std::string end_label(const EndBehavior& e, const std::vector<std::string>& names) {
  return std::visit(
      [&](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Fibration>) return "Fibration\\n" + format_gens(k.target_generators, names);
        else if constexpr (std::is_same_v<T, DivisorialContraction>)
          return "DivContraction " + names[k.variable] + "\\n" + format_gens(k.target_generators, names);
        else return "Unclassified";
      },
      e.kind);
}

}  // namespace

std::string format_game(const GameDiagram& g, const CoxPresentation& p) {
  std::ostringstream out;
  out << "sweep: " << (g.orientation > 0 ? "counterclockwise" : "clockwise") << "\n";
  out << "models: " << g.models.size() << "\n";
  for (std::size_t i = 0; i < g.models.size(); ++i) {
    out << "  model " << i << " chamber " << format_vector(g.chambers[i].left) << "|"
        << format_vector(g.chambers[i].right) << " irrelevant "
        << g.models[i].irrelevant.format(p.variables);
    if (g.input_model && *g.input_model == i) out << " [input]";
    out << "\n";
  }
  out << "crossings: " << g.crossings.size() << "\n";
  for (const WallCrossing& x : g.crossings) {
    out << "  wall " << format_vector(x.wall) << ": " << crossing_name(x.classification) << " of type "
        << format_list(x.type_vector) << " over";
    for (std::size_t b : x.base_vars) out << " " << p.variables[b];
    out << " with weights " << format_list(x.base_weights) << "\n";
  }
  out << "ends:\n";
  for (const EndBehavior& e : g.ends) out << "  " << format_vector(e.ray) << ": " << describe_end(e, p.variables) << "\n";
  return out.str();
}

std::string game_to_dot(const GameDiagram& g, const CoxPresentation& p) {
  std::ostringstream out;
  out << "digraph game {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.models.size(); ++i)
    out << "  m" << i << " [label=\"model " << i << "\\n" << g.models[i].irrelevant.format(p.variables)
        << "\"];\n";
  for (std::size_t i = 0; i < g.crossings.size(); ++i) {
    const WallCrossing& x = g.crossings[i];
    out << "  m" << i << " -> m" << i + 1 << " [style=dashed, label=\"" << crossing_name(x.classification)
        << " " << format_list(x.type_vector) << "\"];\n";
  }
  const std::size_t last = g.models.empty() ? 0 : g.models.size() - 1;
  for (std::size_t e = 0; e < 2; ++e) {
    out << "  end" << e << " [shape=ellipse, label=\"" << end_label(g.ends[e], p.variables) << "\"];\n";
    const char* kind = std::holds_alternative<Fibration>(g.ends[e].kind)
                           ? "Fibration"
                           : std::holds_alternative<DivisorialContraction>(g.ends[e].kind) ? "DivContraction"
                                                                                            : "Unclassified";
    out << "  m" << (e == 0 ? 0 : last) << " -> end" << e << " [label=\"" << kind << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace coxforge
