#include "coxforge/blowup.hpp"

#include "coxforge/galefan.hpp"

#include <algorithm>

namespace coxforge {

namespace {

bool divides(const Integer& q, const Integer& v) {
  return mpz_divisible_p(v.get_mpz_t(), q.get_mpz_t()) != 0;
}

}  // namespace

std::vector<Integer> bundle_fiber_weights(const CoxPresentation& p) {
  const std::size_t n = p.size();
  if (p.rank() != 2 || n < 3)
    fail(ErrorKind::InvalidArgument, "expected a rank-2 weighted bundle over P^1");
  IndexSet base{0, 1}, fiber;
  for (std::size_t i = 2; i < n; ++i) fiber.push_back(i);
  if (!p.irrelevant.same_ideal(MonomialIdeal({base, fiber}, n)))
    fail(ErrorKind::InvalidArgument,
         "expected variables X_0, X_1, Y_0..Y_m with irrelevant ideal (X_0,X_1)(Y_0,...,Y_m)");
  IntVector x = p.column(0);
  if (!same_matrix(x, p.column(1)) || content(x) != 1)
    fail(ErrorKind::InvalidArgument, "base variables must share a primitive weight column");
  std::vector<Integer> a;
  for (std::size_t i = 2; i < n; ++i) {
    IntVector c = p.column(i);
    Integer v = x(0) * c(1) - x(1) * c(0);
    a.push_back(v);
  }
  if (a[0] < 0)
    for (Integer& v : a) v = -v;
  for (const Integer& v : a)
    if (v <= 0) fail(ErrorKind::InvalidArgument, "fiber weights must be positive");
  return a;
}

std::vector<Integer> BlowupSpec::variable_weights() const {
  std::vector<Integer> w(2 + fiber_weights.size(), Integer(0));
  w[1 - center_base] = b.at(k);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (i != k) w[2 + i] = b[i];
  return w;
}

void BlowupSpec::validate() const {
  if (center_base > 1) fail(ErrorKind::InvalidArgument, "centre base index must be 0 or 1");
  if (fiber_weights.empty() || k >= fiber_weights.size())
    fail(ErrorKind::InvalidArgument, "fiber index k out of range");
  if (b.size() != fiber_weights.size())
    fail(ErrorKind::InvalidArgument, "b must list b_0..b_m");
  if (new_var.empty() || new_var.find_first_of(" \t(),") != std::string::npos)
    fail(ErrorKind::InvalidArgument, "bad name for the exceptional variable");
  const Integer& ak = a_k();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 1) fail(ErrorKind::InvalidArgument, "exceptional weights must be positive");
    if (i == k) {
      if (!divides(ak, b[i])) fail(ErrorKind::InvalidArgument, "b_k must be a multiple of a_k");
    } else if (floor_mod(Integer(b[i] - fiber_weights[i]), ak) != 0) {
      fail(ErrorKind::InvalidArgument,
           "b_" + std::to_string(i) + " must be congruent to a_" + std::to_string(i) + " mod a_k");
    }
  }
}

BlowupSpec make_blowup_spec(const CoxPresentation& bundle, std::size_t center_base, std::size_t k,
                            std::vector<Integer> b, std::string new_var) {
  BlowupSpec s{center_base, k, std::move(b), std::move(new_var), bundle_fiber_weights(bundle)};
  s.validate();
  return s;
}

IntVector blowup_ray(const IntMatrix& rays, const std::vector<Integer>& variable_weights,
                     const Integer& a_k) {
  if (static_cast<Index>(variable_weights.size()) != rays.rows())
    fail(ErrorKind::InvalidArgument, "one weight per ray needed");
  IntVector sum = IntVector::Zero(rays.cols());
  for (Index v = 0; v < rays.rows(); ++v) sum += variable_weights[static_cast<std::size_t>(v)] * rays.row(v).transpose();
  for (Index i = 0; i < sum.size(); ++i) {
    if (!divides(a_k, sum(i))) fail(ErrorKind::InvalidArgument, "the new ray is not integral");
    sum(i) /= a_k;
  }
  return sum;
}

CoxPresentation blow_up_weighted_bundle(const CoxPresentation& bundle, const BlowupSpec& spec) {
  std::vector<Integer> a = bundle_fiber_weights(bundle);
  if (a != spec.fiber_weights) fail(ErrorKind::InvalidArgument, "spec was built for a different bundle");
  spec.validate();
  if (std::find(bundle.variables.begin(), bundle.variables.end(), spec.new_var) != bundle.variables.end())
    fail(ErrorKind::InvalidArgument, "exceptional variable name already in use");
  const std::vector<Integer> w = spec.variable_weights();
  const Index n = static_cast<Index>(bundle.size());
  if (!is_standard(bundle.weights)) fail(ErrorKind::MustStandardizeFirst, "bundle weights are not standard");
  blowup_ray(gale_dual(bundle.weights), w, spec.a_k());

  IntMatrix weights = IntMatrix::Zero(3, n + 1);
  weights.topLeftCorner(2, n) = bundle.weights;
  for (Index v = 0; v < n; ++v) weights(2, v) = w[static_cast<std::size_t>(v)];
  weights(2, n) = -spec.a_k();

  std::vector<std::string> names = bundle.variables;
  names.push_back(spec.new_var);
  const std::size_t xi = static_cast<std::size_t>(n);
  const std::size_t x_center = spec.center_base, x_other = 1 - spec.center_base;
  const std::size_t y_k = 2 + spec.k;
  IndexSet fiber, other_side{x_other};
  for (std::size_t i = 2; i < xi; ++i) {
    fiber.push_back(i);
    if (i != y_k) other_side.push_back(i);
  }
  std::vector<IndexSet> comps{{0, 1}, fiber, other_side, {x_center, xi}, {y_k, xi}};
  bool wf = is_standard(weights) && is_well_formed(weights);
  return make_presentation(std::move(names), std::move(weights), std::move(comps), !wf);
}

CoxPresentation blow_up_wps(const std::vector<Integer>& a, std::size_t k, const Integer& alpha,
                            const std::vector<Integer>& b, std::vector<std::string> names) {
  const std::size_t n1 = a.size();
  if (n1 < 2) fail(ErrorKind::InvalidArgument, "need at least two weights");
  if (k + 1 >= n1) fail(ErrorKind::InvalidArgument, "split index k out of range");
  if (alpha < 1) fail(ErrorKind::InvalidArgument, "alpha must be positive");
  if (b.size() != n1 - k - 1) fail(ErrorKind::InvalidArgument, "b must list b_{k+1}..b_n");
  for (const Integer& v : a)
    if (v < 1) fail(ErrorKind::InvalidArgument, "weights must be positive");
  for (const Integer& v : b)
    if (v < 1) fail(ErrorKind::InvalidArgument, "b entries must be positive");
  IntMatrix w = IntMatrix::Zero(2, static_cast<Index>(n1 + 1));
  w(0, 0) = alpha;
  for (std::size_t i = 0; i < n1; ++i) {
    w(1, static_cast<Index>(i + 1)) = a[i];
    if (i > k) w(0, static_cast<Index>(i + 1)) = -b[i - k - 1];
  }
  if (names.empty()) {
    names.push_back("y");
    for (const std::string& s : default_names("x", n1)) names.push_back(s);
  }
  if (names.size() != n1 + 1) fail(ErrorKind::InvalidArgument, "need n+2 variable names");
  IndexSet first{0}, second;
  for (std::size_t i = 0; i < n1; ++i) (i <= k ? first : second).push_back(i + 1);
  bool wf = is_standard(w) && is_well_formed(w);
  return make_presentation(std::move(names), std::move(w), {first, second}, !wf);
}

std::string Substitution::format() const {
  if (exponent == 0) return variable;
  std::string e = exponent == 1 ? exceptional
                                : exceptional + "^" + (exponent.get_den() == 1 ? to_string(exponent)
                                                                               : "(" + to_string(exponent) + ")");
  return variable + "*" + e;
}

std::vector<Substitution> blowup_map_description(const CoxPresentation& p, std::size_t e) {
  if (e >= p.size()) fail(ErrorKind::InvalidArgument, "exceptional variable index out of range");
  Index row = -1;
  for (Index i = 0; i < p.rank(); ++i) {
    if (p.weights(i, static_cast<Index>(e)) == 0) continue;
    if (row >= 0) fail(ErrorKind::InvalidArgument, "exceptional column has more than one nonzero weight");
    row = i;
  }
  ensure(row >= 0, "blowup_map_description: zero column");
  std::vector<Substitution> out;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (v == e) continue;
    Rational q = make_rational(Integer(-p.weights(row, static_cast<Index>(v))), p.weights(row, static_cast<Index>(e)));
    out.push_back({p.variables[v], p.variables[e], q});
  }
  return out;
}

std::vector<Substitution> blowup_map_description(const CoxPresentation& p, const BlowupSpec& spec) {
  return blowup_map_description(p, p.index_of(spec.new_var));
}

Integer pullback_order(const BlowupSpec& spec, const std::vector<Exponents>& support) {
  if (support.empty()) fail(ErrorKind::InvalidArgument, "empty support");
  const std::vector<Integer> w = spec.variable_weights();
  std::optional<Integer> best;
  for (const Exponents& e : support) {
    if (e.size() != w.size()) fail(ErrorKind::InvalidArgument, "exponent vector has the wrong length");
    Integer v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += w[i] * e[i];
    if (!best || v < *best) best = v;
  }
  return *best;
}

Rational discrepancy(const BlowupSpec& spec, const CIData& ci) {
  spec.validate();
  Integer total = 0;
  for (const Integer& v : spec.variable_weights()) total += v;
  for (const Equation& eq : ci.equations) {
    if (eq.order) total -= *eq.order;
    else if (!eq.support.empty()) total -= pullback_order(spec, eq.support);
    else fail(ErrorKind::InvalidArgument, "equation has neither a support nor an explicit order");
  }
  return make_rational(total, spec.a_k()) - 1;
}

Integer solve_exceptional_weight(const BlowupSpec& pattern, std::size_t unknown, const CIData& ci,
                                 const Rational& target, const Integer& bound) {
  if (unknown >= pattern.b.size() || unknown == pattern.k)
    fail(ErrorKind::InvalidArgument, "unknown must be a fiber index other than k");
  const Integer& ak = pattern.a_k();
  Integer cand = floor_mod(pattern.fiber_weights[unknown], ak);
  if (cand == 0) cand = ak;
  BlowupSpec s = pattern;
  for (; cand <= bound; cand += ak) {
    s.b[unknown] = cand;
    if (discrepancy(s, ci) == target) return cand;
  }
  fail(ErrorKind::NotFound, "no exceptional weight up to " + to_string(bound) + " gives discrepancy " +
                                to_string(target));
}

}  // namespace coxforge
