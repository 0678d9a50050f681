#include "coxforge/intlattice.hpp"

#include <algorithm>

namespace coxforge {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) fail(ErrorKind::InvalidArgument, "ragged matrix rows");
    Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntVector int_vector(std::initializer_list<long> entries) {
  IntVector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (long e : entries) v(i++) = e;
  return v;
}

IntVector int_vector(const std::vector<Integer>& entries) {
  IntVector v(static_cast<Index>(entries.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = entries[static_cast<std::size_t>(i)];
  return v;
}

std::vector<Integer> to_std_vector(const IntVector& v) {
  return std::vector<Integer>(v.data(), v.data() + v.size());
}

UnimodularWitness UnimodularWitness::identity(Index r) {
  return {IntMatrix::Identity(r, r), IntMatrix::Identity(r, r)};
}

bool UnimodularWitness::is_valid() const {
  if (matrix.rows() != matrix.cols() || inverse.rows() != matrix.rows() ||
      inverse.cols() != matrix.cols())
    return false;
  IntMatrix prod = matrix * inverse;
  return same_matrix(prod, IntMatrix::Identity(matrix.rows(), matrix.rows()));
}

std::vector<Integer> smith_invariants(const IntMatrix& m) {
  IntMatrix a = m;
  const Index rows = a.rows(), cols = a.cols();
  std::vector<Integer> out;
  for (Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      Index bi = -1, bj = -1;
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j)
          if (a(i, j) != 0 && (bi < 0 || abs(a(i, j)) < abs(a(bi, bj)))) bi = i, bj = j;
      if (bi < 0) return out;
      a.row(t).swap(a.row(bi));
      a.col(t).swap(a.col(bj));
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = floor_div(a(i, t), a(t, t));
        a.row(i) -= q * a.row(t);
        if (a(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = floor_div(a(t, j), a(t, t));
        a.col(j) -= q * a.col(t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility d_t | rest; otherwise fold an offending row in and retry.
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      a.row(t) += a.row(bad);
    }
    out.push_back(abs(a(t, t)));
  }
  return out;
}

Integer minor_gcd(const IntMatrix& m, Index r) {
  if (r <= 0 || r > std::min(m.rows(), m.cols()))
    fail(ErrorKind::InvalidArgument, "minor size out of range");
  std::vector<Integer> inv = smith_invariants(m);
  if (static_cast<Index>(inv.size()) < r) return Integer(0);
  Integer d = 1;
  for (Index i = 0; i < r; ++i) d *= inv[static_cast<std::size_t>(i)];
  return d;
}

bool is_standard(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() < m.rows()) return false;
  // The columns generate Z^r exactly when the Hermite form of m^T is [I; 0].
  HermiteDecomposition h = hermite_decomposition(m.transpose());
  if (h.rank != m.rows()) return false;
  return same_matrix(h.form.topRows(m.rows()), IntMatrix::Identity(m.rows(), m.rows()));
}

UnimodularWitness sl_lift_witness(const IntMatrix& g_bar, const Integer& p) {
  if (!is_probable_prime(p)) fail(ErrorKind::InvalidArgument, to_string(p) + " is not prime");
  if (g_bar.rows() != g_bar.cols() || g_bar.rows() == 0)
    fail(ErrorKind::InvalidArgument, "sl_lift_mod_p needs a nonempty square matrix");
  const Index r = g_bar.rows();
  IntMatrix g = g_bar.unaryExpr([&](const Integer& v) { return floor_mod(v, p); });
  if (floor_mod(determinant(g), p) != 1)
    fail(ErrorKind::InvalidArgument, "matrix does not have determinant 1 mod " + to_string(p));

  struct Transvection {
    Index target, source;
    Integer c;  // row target += c * row source
  };
  std::vector<Transvection> ops;
  auto apply = [&](Index target, Index source, const Integer& c) {
    Integer cc = floor_mod(c, p);
    if (cc == 0) return;
    g.row(target) += cc * g.row(source);
    for (Index j = 0; j < r; ++j) g(target, j) = floor_mod(g(target, j), p);
    ops.push_back({target, source, cc});
  };

  for (Index j = 0; j < r; ++j) {
    if (g(j, j) == 0) {
      Index k = j + 1;
      while (k < r && g(k, j) == 0) ++k;
      ensure(k < r, "sl lift: singular column");
      apply(j, k, 1);
    }
    if (g(j, j) != 1) {
      Index k = j + 1;
      while (k < r && g(k, j) == 0) ++k;
      if (k == r) {
        ensure(j + 1 < r, "sl lift: determinant mismatch");
        apply(j + 1, j, 1);
        k = j + 1;
      }
      Integer c = (1 - g(j, j)) * inverse_mod(g(k, j), p);
      apply(j, k, c);
    }
    for (Index i = 0; i < r; ++i)
      if (i != j && g(i, j) != 0) apply(i, j, -g(i, j));
  }
  ensure(same_matrix(g, IntMatrix::Identity(r, r)), "sl lift: reduction did not reach identity");

  // g_bar = E_1^{-1} ... E_t^{-1}; lift each inverse transvection over Z.
  UnimodularWitness w = UnimodularWitness::identity(r);
  for (const Transvection& op : ops) {
    w.matrix.col(op.source) -= op.c * w.matrix.col(op.target);
    w.inverse.row(op.target) += op.c * w.inverse.row(op.source);
  }
  return w;
}

IntMatrix sl_lift_mod_p(const IntMatrix& g_bar, const Integer& p) {
  return sl_lift_witness(g_bar, p).matrix;
}

ModPEchelon echelon_mod_prime(const IntMatrix& m, const Integer& p) {
  const Index r = m.rows();
  auto reduce = [&](IntMatrix& x) {
    x = x.unaryExpr([&](const Integer& v) { return floor_mod(v, p); });
  };
  IntMatrix a = m, g = IntMatrix::Identity(r, r);
  reduce(a);
  Index pr = 0;
  for (Index c = 0; c < a.cols() && pr < r; ++c) {
    Index i = pr;
    while (i < r && a(i, c) == 0) ++i;
    if (i == r) continue;
    if (i != pr) {
      // Signed swap keeps the determinant equal to 1.
      IntMatrix ta = a.row(pr), tg = g.row(pr);
      a.row(pr) = a.row(i);
      g.row(pr) = g.row(i);
      a.row(i) = -ta;
      g.row(i) = -tg;
      reduce(a);
      reduce(g);
    }
    Integer inv = inverse_mod(a(pr, c), p);
    for (Index j = pr + 1; j < r; ++j) {
      if (a(j, c) == 0) continue;
      Integer f = floor_mod(a(j, c) * inv, p);
      a.row(j) -= f * a.row(pr);
      g.row(j) -= f * g.row(pr);
    }
    reduce(a);
    reduce(g);
    ++pr;
  }
  ModPEchelon out{sl_lift_witness(g, p), pr};
  IntMatrix gm = out.transform.matrix * m;
  for (Index i = pr; i < r; ++i)
    for (Index j = 0; j < m.cols(); ++j)
      ensure(mpz_divisible_p(gm(i, j).get_mpz_t(), p.get_mpz_t()), "echelon mod p: row not divisible");
  return out;
}

Standardization standardize(const IntMatrix& m) {
  const Index r = m.rows();
  if (r == 0 || rank(m) != r) fail(ErrorKind::RankError, "matrix does not have full row rank");
  Standardization out{IntMatrix::Identity(r, r), m};
  for (;;) {
    Integer d = minor_gcd(out.standard, r);
    if (d == 1) break;
    Integer p = smallest_prime_factor(d);
    ModPEchelon e = echelon_mod_prime(out.standard, p);
    ensure(e.rank_mod_p < r, "standardize: rank mod p is full although p divides d");
    IntMatrix next = e.transform.matrix * out.standard;
    for (Index j = 0; j < next.cols(); ++j) next(r - 1, j) /= p;
    out.standard = next;
    out.transform = out.transform * e.transform.inverse;
    out.transform.col(r - 1) *= p;
    ensure(minor_gcd(out.standard, r) * p == d, "standardize: d did not drop by p");
  }
  return out;
}

IntMatrix delete_column(const IntMatrix& m, Index k) {
  if (k < 0 || k >= m.cols()) fail(ErrorKind::InvalidArgument, "column index out of range");
  if (m.cols() == 1) fail(ErrorKind::InvalidArgument, "cannot delete the only column");
  IntMatrix out(m.rows(), m.cols() - 1);
  out.leftCols(k) = m.leftCols(k);
  out.rightCols(m.cols() - k - 1) = m.rightCols(m.cols() - k - 1);
  return out;
}

HermiteDecomposition hermite_decomposition(const IntMatrix& m) {
  const Index rows = m.rows();
  HermiteDecomposition h{m, UnimodularWitness::identity(rows), 0};
  IntMatrix& a = h.form;
  IntMatrix& u = h.transform.matrix;
  IntMatrix& ui = h.transform.inverse;
  Index pr = 0;
  for (Index c = 0; c < a.cols() && pr < rows; ++c) {
    for (Index i = pr + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      Integer x = a(pr, c), y = a(i, c);
      ExtendedGcd e = xgcd(x, y);
      Integer xg = x / e.g, yg = y / e.g, myg = -yg, mey = -e.y;
      // [s t; -y/g x/g] has determinant 1.
      IntMatrix top = e.x * a.row(pr) + e.y * a.row(i);
      IntMatrix bot = myg * a.row(pr) + xg * a.row(i);
      a.row(pr) = top;
      a.row(i) = bot;
      top = e.x * u.row(pr) + e.y * u.row(i);
      bot = myg * u.row(pr) + xg * u.row(i);
      u.row(pr) = top;
      u.row(i) = bot;
      IntMatrix left = xg * ui.col(pr) + yg * ui.col(i);
      IntMatrix right = mey * ui.col(pr) + e.x * ui.col(i);
      ui.col(pr) = left;
      ui.col(i) = right;
    }
    if (a(pr, c) == 0) continue;
    if (a(pr, c) < 0) {
      a.row(pr) = -a.row(pr);
      u.row(pr) = -u.row(pr);
      ui.col(pr) = -ui.col(pr);
    }
    for (Index i = 0; i < pr; ++i) {
      Integer q = floor_div(a(i, c), a(pr, c));
      if (q == 0) continue;
      a.row(i) -= q * a.row(pr);
      u.row(i) -= q * u.row(pr);
      ui.col(pr) += q * ui.col(i);
    }
    ++pr;
  }
  h.rank = pr;
  return h;
}

IntMatrix hnf_canonical(const IntMatrix& m) { return hermite_decomposition(m).form; }

bool unimodular_row_equivalent(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return same_matrix(hnf_canonical(a), hnf_canonical(b));
}

IntMatrix integer_kernel(const IntMatrix& m) {
  HermiteDecomposition h = hermite_decomposition(m.transpose());
  const Index n = m.cols();
  return h.transform.matrix.bottomRows(n - h.rank).transpose();
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

IntVector primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) fail(ErrorKind::InvalidArgument, "zero vector has no primitive multiple");
  IntVector out = v;
  for (Index i = 0; i < out.size(); ++i) out(i) /= g;
  return out;
}

}  // namespace coxforge
