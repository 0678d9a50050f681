#pragma once

#include "coxforge/coxpres.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace coxforge {

// Integer vectors in the rank-2 character lattice are IntVector of size 2.
IntVector ray2(long x, long y);

struct Chamber {
  IntVector left, right;  // primitive, in sweep order
  std::size_t index = 0;
};

// Walls are the distinct primitive column directions in sweep order; the
// sweep runs counterclockwise (orientation +1) or clockwise (-1), chosen so
// that the first irrelevant component of the input is the side swept first.
struct ChamberDecomposition {
  std::vector<IntVector> walls;
  std::vector<Chamber> chambers;
  int orientation = 1;
  std::optional<std::size_t> input_chamber;  // chamber whose model is the input
};

ChamberDecomposition chambers_rank2(const CoxPresentation& p);
// Matrix-only variant: orientation fixed so that column 0 starts the sweep when
// possible. Accepts rank-1 matrices whose columns all point the same way.
ChamberDecomposition chambers_rank2(const IntMatrix& weights);

CoxPresentation model_at_chamber(const CoxPresentation& p, const Chamber& chamber);

enum class CrossingKind { Flip, AntiFlip, Flop };
const char* crossing_name(CrossingKind k);

struct WallCrossing {
  IntVector wall;
  std::vector<std::size_t> off_wall_vars;
  std::vector<Integer> type_vector;  // one entry per off-wall variable
  CrossingKind classification = CrossingKind::Flop;
  std::vector<std::size_t> base_vars;
  std::vector<Integer> base_weights;
};

WallCrossing wall_crossing(const CoxPresentation& p, const IntVector& wall);

struct Monomial {
  std::vector<unsigned long> exponents;

  std::string format(const std::vector<std::string>& names) const;
  bool divides(const Monomial& other) const;
  bool operator==(const Monomial&) const = default;
};

// Minimal generators of the ring of sections of k*chi, 1 <= k <= degree_bound,
// over the degree-zero part: monomials not divisible by a degree-zero monomial
// nor by a generator of lower degree. Ordered by k, then lexicographically.
std::vector<Monomial> graded_ring_generators(const CoxPresentation& p, const IntVector& chi,
                                             unsigned degree_bound);

struct Fibration {
  std::vector<Monomial> target_generators;
};
struct DivisorialContraction {
  std::size_t variable;
  std::vector<Monomial> target_generators;
};
struct Unclassified {
  std::size_t beyond;
};
using EndKind = std::variant<Fibration, DivisorialContraction, Unclassified>;

struct EndBehavior {
  IntVector ray;
  EndKind kind;
  unsigned degree_bound = 0;
};

// Default bound: max(1, largest column multiple on the ray) + 1.
EndBehavior end_behavior(const CoxPresentation& p, const IntVector& ray,
                         std::optional<unsigned> degree_bound = std::nullopt);

struct Rank2Cones {
  std::array<IntVector, 2> effective;
  std::array<IntVector, 2> moving;
};
Rank2Cones cones_rank2(const CoxPresentation& p);

// -K = sum of columns - sum of equation degrees, strictly inside Mov.
bool anticanonical_in_moving_interior(const CoxPresentation& p,
                                      const std::vector<IntVector>& equation_degrees);

// Chambers inside the moving cone, their models, the interior wall crossings
// and the two ends at the moving-cone boundary rays.
struct GameDiagram {
  std::vector<Chamber> chambers;
  std::vector<CoxPresentation> models;
  std::vector<WallCrossing> crossings;
  std::array<EndBehavior, 2> ends;
  int orientation = 1;
  std::optional<std::size_t> input_model;
};

GameDiagram two_ray_game(const CoxPresentation& p,
                         std::optional<unsigned> degree_bound = std::nullopt);

std::string format_vector(const IntVector& v);
std::string format_game(const GameDiagram& game, const CoxPresentation& p);
std::string game_to_dot(const GameDiagram& game, const CoxPresentation& p);

}  // namespace coxforge
