#pragma once

#include "coxforge/error.hpp"
#include "coxforge/integer.hpp"

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace coxforge {

// Builds an integer matrix from nested rows; all rows must have equal length.
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);
IntVector int_vector(std::initializer_list<long> entries);
IntVector int_vector(const std::vector<Integer>& entries);
std::vector<Integer> to_std_vector(const IntVector& v);

// Exact shape-and-entry comparison (Eigen's operator== asserts on shape).
template <typename A, typename B>
bool same_matrix(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

// Fraction-free (Bareiss) elimination. Every intermediate division is exact.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) fail(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  Matrix<Scalar> a = m;
  const Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar sign = 1, prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Scalar v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = v / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Scalar out = sign * a(n - 1, n - 1);
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = m;
  Index r = 0;
  Scalar prev = 1;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) a.row(r).swap(a.row(p));
    for (Index i = r + 1; i < a.rows(); ++i) {
      for (Index j = c + 1; j < a.cols(); ++j) {
        Scalar v = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        a(i, j) = v / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

// A unimodular integer matrix together with its integer inverse.
struct UnimodularWitness {
  IntMatrix matrix;
  IntMatrix inverse;

  static UnimodularWitness identity(Index r);
  bool is_valid() const;  // square, matching shapes, matrix * inverse = I
};

// Nonzero invariant factors d1 | d2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(const IntMatrix& m);

// gcd of all r x r minors; 0 when rank < r.
Integer minor_gcd(const IntMatrix& m, Index r);

// Full row rank and all maximal minors coprime; decided via surjectivity Z^n -> Z^r.
bool is_standard(const IntMatrix& m);

// Integer matrix of determinant 1 reducing to g_bar mod p.
IntMatrix sl_lift_mod_p(const IntMatrix& g_bar, const Integer& p);
UnimodularWitness sl_lift_witness(const IntMatrix& g_bar, const Integer& p);

// Row echelon form of m mod p built from transvections and signed swaps, lifted
// to SL_r(Z). Rows of transform.matrix * m from rank_mod_p on are divisible by p.
struct ModPEchelon {
  UnimodularWitness transform;
  Index rank_mod_p = 0;
};
ModPEchelon echelon_mod_prime(const IntMatrix& m, const Integer& p);

struct Standardization {
  IntMatrix transform;  // m = transform * standard
  IntMatrix standard;
};
Standardization standardize(const IntMatrix& m);

IntMatrix delete_column(const IntMatrix& m, Index k);

// Row-style Hermite normal form: positive pivots, entries above a pivot in
// [0, pivot), zero rows last. transform.matrix * m = form.
struct HermiteDecomposition {
  IntMatrix form;
  UnimodularWitness transform;
  Index rank = 0;
};
HermiteDecomposition hermite_decomposition(const IntMatrix& m);
IntMatrix hnf_canonical(const IntMatrix& m);
bool unimodular_row_equivalent(const IntMatrix& a, const IntMatrix& b);

// Columns form a lattice basis of {v in Z^n : m v = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

Integer content(const IntVector& v);  // gcd of entries
IntVector primitive(const IntVector& v);

}  // namespace coxforge
