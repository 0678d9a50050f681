#include "coxforge/galefan.hpp"

#include <algorithm>

namespace coxforge {

void Fan::validate() const {
  if (lattice_dim < 1 || rays.cols() != lattice_dim)
    fail(ErrorKind::InvalidArgument, "ray length does not match the lattice dimension");
  for (Index i = 0; i < rays.rows(); ++i)
    if (content(rays.row(i).transpose()) != 1)
      fail(ErrorKind::InvalidArgument, "ray " + std::to_string(i) + " is zero or not primitive");
  for (const IndexSet& c : max_cones) {
    if (c.empty()) fail(ErrorKind::InvalidArgument, "empty maximal cone");
    if (!std::is_sorted(c.begin(), c.end()) || std::adjacent_find(c.begin(), c.end()) != c.end())
      fail(ErrorKind::InvalidArgument, "cone indices must be sorted and distinct");
    if (c.back() >= num_rays()) fail(ErrorKind::InvalidArgument, "cone index out of range");
    IntMatrix gens(static_cast<Index>(c.size()), lattice_dim);
    for (std::size_t k = 0; k < c.size(); ++k) gens.row(static_cast<Index>(k)) = rays.row(static_cast<Index>(c[k]));
    if (rank(gens) != gens.rows())
      fail(ErrorKind::UnsupportedFeature, "cone is not simplicial");
  }
  for (std::size_t i = 0; i < max_cones.size(); ++i)
    for (std::size_t j = 0; j < max_cones.size(); ++j)
      if (i != j && std::includes(max_cones[j].begin(), max_cones[j].end(), max_cones[i].begin(),
                                  max_cones[i].end()))
        fail(ErrorKind::InvalidArgument, "maximal cone contained in another");
  if (rank(rays) != lattice_dim) fail(ErrorKind::InvalidArgument, "rays do not span the lattice");
}

Fan make_fan(IntMatrix rays, std::vector<IndexSet> max_cones) {
  Fan f{rays.cols(), std::move(rays), std::move(max_cones)};
  for (IndexSet& c : f.max_cones) std::sort(c.begin(), c.end());
  f.validate();
  return f;
}

IntMatrix gale_dual(const IntMatrix& a) {
  if (!is_standard(a)) fail(ErrorKind::MustStandardizeFirst, "gale_dual needs a standard matrix");
  IntMatrix k = integer_kernel(a);
  if (k.cols() == 0) return IntMatrix(a.cols(), 0);
  return hnf_canonical(k.transpose()).transpose();
}

IntMatrix weights_from_rays(const IntMatrix& b) {
  if (rank(b) != b.cols()) fail(ErrorKind::InvalidArgument, "rays do not span Q^d");
  for (const Integer& d : smith_invariants(b))
    if (d != 1)
      fail(ErrorKind::UnsupportedFeature, "rays generate a proper sublattice (torsion class group)");
  IntMatrix rel = integer_kernel(b.transpose());
  if (rel.cols() == 0) return IntMatrix(0, b.rows());
  return hnf_canonical(rel.transpose());
}

std::vector<Integer> WeightedBundleSpec::fiber_weights() const {
  std::vector<Integer> w{Integer(1)};
  w.insert(w.end(), a.begin(), a.end());
  return w;
}

void WeightedBundleSpec::validate() const {
  if (n < 1) fail(ErrorKind::InvalidArgument, "base dimension must be at least 1");
  if (omega.empty()) fail(ErrorKind::InvalidArgument, "omega needs at least one entry");
  if (a.size() + 1 != omega.size())
    fail(ErrorKind::InvalidArgument, "a must list a_1..a_m for omega_0..omega_m");
  for (const Integer& w : omega)
    if (w < 0) fail(ErrorKind::InvalidArgument, "omega entries must be nonnegative");
  for (const Integer& w : a)
    if (w < 1) fail(ErrorKind::InvalidArgument, "fiber weights must be positive");
  if (wps_well_form(fiber_weights()) != fiber_weights())
    fail(ErrorKind::InvalidArgument, "fiber weights (1,a_1,...,a_m) are not well-formed");
  if (!base_names.empty() && base_names.size() != static_cast<std::size_t>(n + 1))
    fail(ErrorKind::InvalidArgument, "need n+1 base variable names");
  if (!fiber_names.empty() && fiber_names.size() != omega.size())
    fail(ErrorKind::InvalidArgument, "need m+1 fiber variable names");
}

WeightedBundleSpec weighted_bundle(Index n, const std::vector<long>& omega,
                                   const std::vector<long>& a) {
  WeightedBundleSpec s;
  s.n = n;
  for (long w : omega) s.omega.emplace_back(w);
  std::vector<long> tail = a;
  if (tail.size() == omega.size() && !tail.empty() && tail.front() == 1) tail.erase(tail.begin());
  for (long w : tail) s.a.emplace_back(w);
  s.validate();
  return s;
}

CoxPresentation weighted_bundle_presentation(const WeightedBundleSpec& spec) {
  spec.validate();
  const Index n1 = spec.n + 1, m1 = spec.m() + 1;
  IntMatrix w = IntMatrix::Zero(2, n1 + m1);
  std::vector<Integer> fw = spec.fiber_weights();
  for (Index j = 0; j < n1; ++j) w(0, j) = 1;
  for (Index i = 0; i < m1; ++i) {
    w(0, n1 + i) = -spec.omega[static_cast<std::size_t>(i)];
    w(1, n1 + i) = fw[static_cast<std::size_t>(i)];
  }
  std::vector<std::string> names =
      spec.base_names.empty() ? default_names("x", static_cast<std::size_t>(n1)) : spec.base_names;
  std::vector<std::string> fiber =
      spec.fiber_names.empty() ? default_names("y", static_cast<std::size_t>(m1)) : spec.fiber_names;
  names.insert(names.end(), fiber.begin(), fiber.end());
  IndexSet base, fib;
  for (Index j = 0; j < n1; ++j) base.push_back(static_cast<std::size_t>(j));
  for (Index i = 0; i < m1; ++i) fib.push_back(static_cast<std::size_t>(n1 + i));
  bool wf = is_standard(w) && is_well_formed(w);
  return make_presentation(std::move(names), std::move(w), {base, fib}, !wf);
}

BundleModel weighted_bundle_fan(const WeightedBundleSpec& spec) {
  CoxPresentation p = weighted_bundle_presentation(spec);
  const Index n = spec.n, m = spec.m(), d = n + m;
  std::vector<Integer> fw = spec.fiber_weights();
  IntMatrix rays = IntMatrix::Zero(n + 1 + m + 1, d);
  // x_0 = alpha_0, x_j = alpha_j, y_0 = beta_0, y_i = beta_i.
  for (Index j = 1; j <= n; ++j) {
    rays(0, m + j - 1) = -1;
    rays(j, m + j - 1) = 1;
  }
  for (Index i = 1; i <= m; ++i) {
    const Integer& ai = fw[static_cast<std::size_t>(i)];
    rays(0, i - 1) = spec.omega[static_cast<std::size_t>(i)] - spec.omega[0] * ai;
    rays(n + 1, i - 1) = -ai;
    rays(n + 1 + i, i - 1) = 1;
  }
  std::vector<IndexSet> cones;
  for (Index s = 0; s <= n; ++s)
    for (Index r = 0; r <= m; ++r) {
      IndexSet c;
      for (Index v = 0; v < n + 1 + m + 1; ++v)
        if (v != s && v != n + 1 + r) c.push_back(static_cast<std::size_t>(v));
      cones.push_back(std::move(c));
    }
  return {make_fan(std::move(rays), std::move(cones)), std::move(p)};
}

MonomialIdeal irrelevant_ideal_from_fan(const Fan& fan) {
  std::vector<IndexSet> gens;
  for (const IndexSet& c : fan.max_cones) gens.push_back(complement(c, fan.num_rays()));
  return MonomialIdeal::from_generators(gens, fan.num_rays());
}

Fan fan_from_presentation(const CoxPresentation& p) {
  if (!is_standard(p.weights) || !is_well_formed(p.weights))
    fail(ErrorKind::MustStandardizeFirst, "fan_from_presentation needs a well-formed presentation");
  IntMatrix rays = gale_dual(p.weights);
  if (rays.cols() == 0) fail(ErrorKind::InvalidArgument, "zero-dimensional quotient has no fan");
  std::vector<IndexSet> cones;
  for (const IndexSet& g : p.irrelevant.generators()) {
    IndexSet c = complement(g, p.size());
    IntMatrix gens(static_cast<Index>(c.size()), rays.cols());
    for (std::size_t k = 0; k < c.size(); ++k) gens.row(static_cast<Index>(k)) = rays.row(static_cast<Index>(c[k]));
    if (rank(gens) != gens.rows())
      fail(ErrorKind::UnsupportedFeature, "irrelevant ideal gives a non-simplicial cone");
    cones.push_back(std::move(c));
  }
  return make_fan(std::move(rays), std::move(cones));
}

CoxPresentation presentation_from_fan(const Fan& fan, std::vector<std::string> names) {
  fan.validate();
  IntMatrix w = weights_from_rays(fan.rays);
  if (w.rows() == 0) fail(ErrorKind::InvalidArgument, "fan has no relations among its rays (rank 0)");
  if (names.empty()) names = default_names("x", fan.num_rays());
  if (names.size() != fan.num_rays()) fail(ErrorKind::InvalidArgument, "one name per ray needed");
  bool wf = is_well_formed(w);
  MonomialIdeal ideal = irrelevant_ideal_from_fan(fan);
  return make_presentation(std::move(names), std::move(w), ideal.components(), !wf);
}

std::optional<RatVector> solve_rational(const RatMatrix& m, const RatVector& b) {
  const Index rows = m.rows(), cols = m.cols();
  RatMatrix a(rows, cols + 1);
  a.leftCols(cols) = m;
  a.col(cols) = b;
  std::vector<Index> pivots;
  Index pr = 0;
  for (Index c = 0; c < cols && pr < rows; ++c) {
    Index p = pr;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.row(pr).swap(a.row(p));
    Rational inv = 1 / a(pr, c);
    a.row(pr) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == pr || a(i, c) == 0) continue;
      Rational f = a(i, c);
      a.row(i) -= f * a.row(pr);
    }
    pivots.push_back(c);
    ++pr;
  }
  for (Index i = pr; i < rows; ++i)
    if (a(i, cols) != 0) return std::nullopt;
  RatVector x = RatVector::Zero(cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) x(pivots[k]) = a(static_cast<Index>(k), cols);
  return x;
}

std::optional<std::vector<Rational>> cone_coordinates(const Fan& fan, const IndexSet& cone,
                                                      const IntVector& w) {
  RatMatrix m(fan.lattice_dim, static_cast<Index>(cone.size()));
  for (std::size_t k = 0; k < cone.size(); ++k)
    for (Index i = 0; i < fan.lattice_dim; ++i) m(i, static_cast<Index>(k)) = Rational(fan.rays(static_cast<Index>(cone[k]), i));
  RatVector b(w.size());
  for (Index i = 0; i < w.size(); ++i) b(i) = Rational(w(i));
  std::optional<RatVector> x = solve_rational(m, b);
  if (!x) return std::nullopt;
  std::vector<Rational> out;
  for (Index i = 0; i < x->size(); ++i) {
    if ((*x)(i) < 0) return std::nullopt;
    out.push_back((*x)(i));
  }
  return out;
}

Fan star_subdivision(const Fan& fan, const IntVector& w_in) {
  fan.validate();
  if (w_in.size() != fan.lattice_dim) fail(ErrorKind::InvalidArgument, "vector has the wrong length");
  if (w_in.isZero()) fail(ErrorKind::InvalidArgument, "cannot subdivide at the zero vector");
  IntVector w = primitive(w_in);
  for (std::size_t i = 0; i < fan.num_rays(); ++i)
    if (same_matrix(fan.ray(i), w)) return fan;
  const std::size_t fresh = fan.num_rays();
  std::vector<IndexSet> cones;
  bool hit = false;
  for (const IndexSet& c : fan.max_cones) {
    std::optional<std::vector<Rational>> coords = cone_coordinates(fan, c, w);
    if (!coords) {
      cones.push_back(c);
      continue;
    }
    hit = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if ((*coords)[k] == 0) continue;
      IndexSet nc;
      for (std::size_t t = 0; t < c.size(); ++t)
        if (t != k) nc.push_back(c[t]);
      nc.push_back(fresh);
      if (std::find(cones.begin(), cones.end(), nc) == cones.end()) cones.push_back(std::move(nc));
    }
  }
  if (!hit) fail(ErrorKind::InvalidArgument, "vector lies outside the support of the fan");
  IntMatrix rays(fan.rays.rows() + 1, fan.lattice_dim);
  rays.topRows(fan.rays.rows()) = fan.rays;
  rays.row(fan.rays.rows()) = w.transpose();
  return make_fan(std::move(rays), std::move(cones));
}

}  // namespace coxforge
