#pragma once

#include "coxforge/galefan.hpp"

#include <string>
#include <vector>

namespace coxforge {

// Cyclic quotient type 1/r(w_1, ..., w_k); zero weights are trivial A^1 factors.
struct QuotientSingularity {
  Integer index = 1;
  std::vector<Integer> weights;

  bool is_smooth() const { return index == 1; }
  std::string format() const;  // "1/r(w1,...,wk)"
  bool operator==(const QuotientSingularity&) const = default;
};

// Reduces weights mod r, divides out gcd(r, all weights), sorts ascending.
QuotientSingularity normalize_type(const QuotientSingularity& q);

// Drops the zero slots.
QuotientSingularity transverse_part(const QuotientSingularity& q);

// Reid-Tai: sum_i ((j w_i) mod r) > r for all 0 < j < r. Zero slots are
// stripped first; a weight sharing a factor with r is unsupported.
bool is_terminal_cyclic(const QuotientSingularity& q);

enum class ChartVerdict { Smooth, Terminal, NonTerminal, Undecided };
ChartVerdict classify(const QuotientSingularity& q);
const char* verdict_name(ChartVerdict v);

struct ChartReport {
  std::size_t base;   // i: x_i != 0
  std::size_t fiber;  // j: y_j != 0
  QuotientSingularity type;
};

QuotientSingularity fixed_point_type(const WeightedBundleSpec& spec, std::size_t i, std::size_t j);
std::vector<ChartReport> weighted_bundle_charts(const WeightedBundleSpec& spec);

}  // namespace coxforge
