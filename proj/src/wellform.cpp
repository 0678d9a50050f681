#include "coxforge/coxpres.hpp"

#include <numeric>

namespace coxforge {

namespace {

std::vector<Integer> column_deleted_gcds(const IntMatrix& m) {
  std::vector<Integer> d;
  for (Index k = 0; k < m.cols(); ++k) d.push_back(minor_gcd(delete_column(m, k), m.rows()));
  return d;
}

bool is_identity(const IntMatrix& m) {
  return same_matrix(m, IntMatrix::Identity(m.rows(), m.cols()));
}

}  // namespace

bool is_well_formed(const IntMatrix& a) {
  if (!is_standard(a)) fail(ErrorKind::MustStandardizeFirst, "matrix is not standard");
  if (a.cols() <= a.rows()) return false;
  for (Index k = 0; k < a.cols(); ++k)
    if (!is_standard(delete_column(a, k))) return false;
  return true;
}

WellFormedMatrix well_form_matrix(const IntMatrix& a) {
  const Index r = a.rows();
  if (r == 0 || rank(a) != r) fail(ErrorKind::RankError, "weight matrix does not have full row rank");
  if (a.cols() <= r)
    fail(ErrorKind::InvalidArgument, "well-forming needs more variables than the rank");
  WellFormedMatrix out{a, {}};
  IntMatrix& m = out.matrix;
  auto& steps = out.certificate.steps;

  // Standardize, one prime at a time.
  for (;;) {
    Integer d = minor_gcd(m, r);
    if (d == 1) break;
    Integer p = smallest_prime_factor(d);
    ModPEchelon e = echelon_mod_prime(m, p);
    ensure(e.rank_mod_p < r, "well_form: rank mod p is full although p divides d");
    if (!is_identity(e.transform.matrix)) {
      m = e.transform.matrix * m;
      steps.push_back(RowTransform{e.transform});
    }
    for (Index j = 0; j < m.cols(); ++j) m(r - 1, j) /= p;
    steps.push_back(RowDivide{r - 1, p});
  }

  // Column scalings until every A_k is standard.
  std::vector<Integer> d = column_deleted_gcds(m);
  for (std::size_t j = 0; j < d.size(); ++j)
    if (d[j] == 0)
      fail(ErrorKind::UnsupportedFeature,
           "column " + std::to_string(j) + " is not in the span of the other columns");
  for (;;) {
    Index k = 0;
    while (k < m.cols() && d[static_cast<std::size_t>(k)] == 1) ++k;
    if (k == m.cols()) break;
    const Integer dk = d[static_cast<std::size_t>(k)];
    Integer q = smallest_prime_factor(dk);
    ModPEchelon e = echelon_mod_prime(delete_column(m, k), q);
    ensure(e.rank_mod_p < r, "well_form: deleted matrix has full rank mod q");
    const Index row = r - 1;
    if (!is_identity(e.transform.matrix)) {
      m = e.transform.matrix * m;
      steps.push_back(RowTransform{e.transform});
    }
    ensure(!mpz_divisible_p(m(row, k).get_mpz_t(), q.get_mpz_t()),
           "well_form: whole row divisible, matrix was not standard");
    m.col(k) *= q;
    steps.push_back(ColumnScale{k, q, row});
    for (Index j = 0; j < m.cols(); ++j) m(row, j) /= q;
    steps.push_back(RowDivide{row, q});

    std::vector<Integer> next = column_deleted_gcds(m);
    ensure(next[static_cast<std::size_t>(k)] * q == dk, "well_form: d_k did not drop by q");
    Integer before = 1, after = 1;
    for (std::size_t j = 0; j < d.size(); ++j) {
      ensure(mpz_divisible_p(d[j].get_mpz_t(), next[j].get_mpz_t()) != 0,
             "well_form: d_j grew");
      before *= d[j];
      after *= next[j];
    }
    ensure(after < before, "well_form: no progress");
    ensure(is_standard(m), "well_form: lost standardness");
    d = std::move(next);
  }

  HermiteDecomposition h = hermite_decomposition(m);
  if (!is_identity(h.transform.matrix)) steps.push_back(RowTransform{h.transform});
  m = h.form;
  return out;
}

WellFormedPresentation well_form(const CoxPresentation& p) {
  CoxPresentation input = p;
  input.stacky = true;
  input.validate();
  WellFormedMatrix w = well_form_matrix(p.weights);
  CoxPresentation out{p.variables, w.matrix, p.irrelevant, false};
  out.validate();
  return {std::move(out), std::move(w.certificate)};
}

CoxPresentation coarse_moduli(const CoxPresentation& p) { return well_form(p).presentation; }

std::vector<Integer> wps_well_form(const std::vector<Integer>& weights) {
  if (weights.empty()) fail(ErrorKind::InvalidArgument, "empty weight list");
  for (const Integer& w : weights)
    if (w < 1) fail(ErrorKind::InvalidArgument, "weights must be positive");
  std::vector<Integer> w = weights;
  Integer g = 0;
  for (const Integer& v : w) g = gcd(g, v);
  for (Integer& v : w) v /= g;
  if (w.size() == 1) return w;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Integer h = 0;
      for (std::size_t j = 0; j < w.size(); ++j)
        if (j != i) h = gcd(h, w[j]);
      if (h == 1) continue;
      for (std::size_t j = 0; j < w.size(); ++j)
        if (j != i) w[j] /= h;
      changed = true;
    }
  }
  return w;
}

}  // namespace coxforge
