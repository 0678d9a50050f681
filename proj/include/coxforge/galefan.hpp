#pragma once

#include "coxforge/coxpres.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coxforge {

// Simplicial fan in N = Z^d. rays is k x d (one ray per row).
struct Fan {
  Index lattice_dim = 0;
  IntMatrix rays;
  std::vector<IndexSet> max_cones;

  std::size_t num_rays() const { return static_cast<std::size_t>(rays.rows()); }
  IntVector ray(std::size_t i) const { return rays.row(static_cast<Index>(i)).transpose(); }
  // Throws Error on any broken invariant.
  void validate() const;
};

Fan make_fan(IntMatrix rays, std::vector<IndexSet> max_cones);

// Rays of the dual: an n x (n - r) matrix whose columns span ker A.
IntMatrix gale_dual(const IntMatrix& a);
// All integer relations among the rows of b, in Hermite form.
IntMatrix weights_from_rays(const IntMatrix& b);

struct WeightedBundleSpec {
  Index n = 1;                 // base P^n
  std::vector<Integer> omega;  // omega_0 .. omega_m
  std::vector<Integer> a;      // a_1 .. a_m  (a_0 = 1)
  std::vector<std::string> base_names;   // x_0 .. x_n; defaults to x0..
  std::vector<std::string> fiber_names;  // y_0 .. y_m; defaults to y0..

  Index m() const { return static_cast<Index>(omega.size()) - 1; }
  std::vector<Integer> fiber_weights() const;  // (1, a_1, ..., a_m)
  void validate() const;
};

// Accepts a of length m, or m + 1 with a leading 1.
WeightedBundleSpec weighted_bundle(Index n, const std::vector<long>& omega,
                                   const std::vector<long>& a);

// Weight matrix [[1..1, -omega],[0..0, 1, a_1..a_m]], ideal (x)∩(y).
CoxPresentation weighted_bundle_presentation(const WeightedBundleSpec& spec);

struct BundleModel {
  Fan fan;
  CoxPresentation presentation;
};
// Lattice basis: beta_1..beta_m, then alpha_1..alpha_n. Rays listed in
// variable order x_0..x_n, y_0..y_m.
BundleModel weighted_bundle_fan(const WeightedBundleSpec& spec);

MonomialIdeal irrelevant_ideal_from_fan(const Fan& fan);
Fan fan_from_presentation(const CoxPresentation& p);
// Presentation with weights_from_rays and the Cox recipe ideal.
CoxPresentation presentation_from_fan(const Fan& fan, std::vector<std::string> names = {});

// Coefficients c with sum c_i rays[cone_i] = w when w lies in the cone.
std::optional<std::vector<Rational>> cone_coordinates(const Fan& fan, const IndexSet& cone,
                                                      const IntVector& w);
Fan star_subdivision(const Fan& fan, const IntVector& w);

// Rational row reduction: solves m x = b, returns nullopt if inconsistent.
std::optional<RatVector> solve_rational(const RatMatrix& m, const RatVector& b);

}  // namespace coxforge
