#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 300,
    MulCost = 300
  };
};

}  // namespace Eigen

namespace coxforge {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;
using Index = Eigen::Index;

// Floor division and the matching nonnegative remainder (for b > 0).
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g, x, y;  // g = x*a + y*b, g >= 0
};
ExtendedGcd xgcd(const Integer& a, const Integer& b);

// Modular inverse of a mod p; requires gcd(a, p) = 1.
Integer inverse_mod(const Integer& a, const Integer& p);

bool is_probable_prime(const Integer& n);
Integer smallest_prime_factor(const Integer& n);
// Distinct prime factors in increasing order (|n| >= 1).
std::vector<Integer> prime_factors(const Integer& n);

Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

// Parses a decimal integer; throws Error(parse) on junk.
Integer parse_integer(const std::string& text);
// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

}  // namespace coxforge
