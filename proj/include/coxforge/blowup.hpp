#pragma once

#include "coxforge/coxpres.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coxforge {

// Weighted blow-up of a torus-fixed point of a weighted bundle over P^1 with
// variables X_0, X_1, Y_0..Y_m (in that order) and ideal (X)∩(Y). The centre
// is the point where X_{center_base} and Y_k are the nonzero coordinates.
struct BlowupSpec {
  std::size_t center_base = 1;
  std::size_t k = 0;
  std::vector<Integer> b;  // b_0..b_m; b_k = r * a_k
  std::string new_var = "xi";
  std::vector<Integer> fiber_weights;  // a_0..a_m, read off the bundle

  const Integer& a_k() const { return fiber_weights.at(k); }
  // Exceptional weight of every bundle variable: b_k on the other base
  // variable, 0 on X_{center_base} and Y_k, b_i on Y_i.
  std::vector<Integer> variable_weights() const;
  void validate() const;
};

// Fiber weights a_0..a_m of a bundle in variable order X_0, X_1, Y_0..Y_m.
std::vector<Integer> bundle_fiber_weights(const CoxPresentation& bundle);

// Reads a_0..a_m from the bundle and checks b_i = a_i mod a_k, a_k | b_k.
BlowupSpec make_blowup_spec(const CoxPresentation& bundle, std::size_t center_base,
                            std::size_t k, std::vector<Integer> b, std::string new_var = "xi");

// Appends the exceptional row and the variable new_var (column (0,0,-a_k)).
CoxPresentation blow_up_weighted_bundle(const CoxPresentation& bundle, const BlowupSpec& spec);

// New ray sum_v w_v rho_v / a_k for ray matrix rows rho_v; throws if not integral.
IntVector blowup_ray(const IntMatrix& rays, const std::vector<Integer>& variable_weights,
                     const Integer& a_k);

// Blow-up of P(a_0..a_n) along x_{k+1} = .. = x_n = 0: variables y, x_0..x_n,
// weights [[alpha, 0..0, -b_{k+1}..-b_n],[0, a_0..a_n]].
CoxPresentation blow_up_wps(const std::vector<Integer>& a, std::size_t k, const Integer& alpha,
                            const std::vector<Integer>& b, std::vector<std::string> names = {});

struct Substitution {
  std::string variable;
  std::string exceptional;
  Rational exponent;  // variable -> variable * exceptional^exponent

  std::string format() const;
};

// The exceptional variable must have exactly one nonzero weight.
std::vector<Substitution> blowup_map_description(const CoxPresentation& blowup,
                                                 std::size_t exceptional);
std::vector<Substitution> blowup_map_description(const CoxPresentation& blowup,
                                                 const BlowupSpec& spec);

using Exponents = std::vector<unsigned long>;

struct Equation {
  IntVector degree;
  std::vector<Exponents> support;
  std::optional<Integer> order;  // explicit vanishing order along E, units of 1/a_k
};

struct CIData {
  std::vector<Equation> equations;
};

// min over the support of sum_i w_i e_i (units of 1/a_k).
Integer pullback_order(const BlowupSpec& spec, const std::vector<Exponents>& support);

// (sum of exceptional weights)/a_k - 1 - (sum of equation orders)/a_k.
Rational discrepancy(const BlowupSpec& spec, const CIData& ci);

// Least b_unknown in the class a_unknown mod a_k with discrepancy = target.
Integer solve_exceptional_weight(const BlowupSpec& pattern, std::size_t unknown, const CIData& ci,
                                 const Rational& target, const Integer& bound = Integer(1000));

}  // namespace coxforge
