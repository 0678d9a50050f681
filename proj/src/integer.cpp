#include "coxforge/integer.hpp"

#include "coxforge/error.hpp"

#include <cctype>

namespace coxforge {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::RankError: return "rank-error";
    case ErrorKind::MustStandardizeFirst: return "must-standardize-first";
    case ErrorKind::UnsupportedFeature: return "unsupported-feature";
    case ErrorKind::NotQuasiProjective: return "not-quasi-projective";
    case ErrorKind::NotFound: return "not-found";
    case ErrorKind::Parse: return "parse-error";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

InvariantViolation::InvariantViolation(const std::string& message)
    : std::logic_error("internal invariant violated: " + message) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

ExtendedGcd xgcd(const Integer& a, const Integer& b) {
  ExtendedGcd out;
  mpz_gcdext(out.g.get_mpz_t(), out.x.get_mpz_t(), out.y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return out;
}

Integer inverse_mod(const Integer& a, const Integer& p) {
  Integer inv;
  Integer r = floor_mod(a, p);
  if (mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t()) == 0)
    fail(ErrorKind::InvalidArgument, "value " + to_string(a) + " is not invertible mod " +
                                         to_string(p));
  return inv;
}

bool is_probable_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

// Brent's variant of Pollard rho; n odd composite.
Integer pollard_factor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 64;
    auto step = [&](const Integer& v) {
      Integer w = v * v + c;
      return floor_mod(w, n);
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          Integer d = abs(x - y);
          q = floor_mod(q * d, n);
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(Integer(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace

Integer smallest_prime_factor(const Integer& n_in) {
  Integer n = abs(n_in);
  if (n < 2) fail(ErrorKind::InvalidArgument, "no prime factor of " + to_string(n_in));
  for (unsigned long p = 2; p < 10000; ++p) {
    if (Integer(p) * p > n) return n;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Integer(p);
  }
  if (is_probable_prime(n)) return n;
  // Split completely and take the least prime.
  std::vector<Integer> stack{n};
  Integer best = n;
  while (!stack.empty()) {
    Integer v = stack.back();
    stack.pop_back();
    if (is_probable_prime(v)) {
      if (v < best) best = v;
      continue;
    }
    Integer d = pollard_factor(v);
    stack.push_back(d);
    stack.push_back(Integer(v / d));
  }
  return best;
}

std::vector<Integer> prime_factors(const Integer& n_in) {
  std::vector<Integer> out;
  Integer n = abs(n_in);
  while (n > 1) {
    Integer p = smallest_prime_factor(n);
    out.push_back(p);
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
  }
  return out;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) fail(ErrorKind::Parse, "expected an integer, got '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      fail(ErrorKind::Parse, "expected an integer, got '" + text + "'");
  Integer v;
  v.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return v;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

}  // namespace coxforge
