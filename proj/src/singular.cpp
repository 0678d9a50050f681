#include "coxforge/singular.hpp"

#include <algorithm>

namespace coxforge {

std::string QuotientSingularity::format() const {
  std::string out = "1/" + to_string(index) + "(";
  for (std::size_t i = 0; i < weights.size(); ++i) out += (i ? "," : "") + to_string(weights[i]);
  return out + ")";
}

QuotientSingularity normalize_type(const QuotientSingularity& q) {
  if (q.index < 1) fail(ErrorKind::InvalidArgument, "index must be positive");
  QuotientSingularity out{q.index, {}};
  Integer g = q.index;
  for (const Integer& w : q.weights) g = gcd(g, w);
  out.index = q.index / g;
  for (const Integer& w : q.weights) out.weights.push_back(floor_mod(Integer(w / g), out.index));
  std::sort(out.weights.begin(), out.weights.end());
  return out;
}

QuotientSingularity transverse_part(const QuotientSingularity& q) {
  QuotientSingularity out{q.index, {}};
  for (const Integer& w : q.weights)
    if (floor_mod(w, q.index) != 0) out.weights.push_back(w);
  return out;
}

bool is_terminal_cyclic(const QuotientSingularity& q_in) {
  QuotientSingularity q = transverse_part(normalize_type(q_in));
  if (q.index == 1) return true;
  for (const Integer& w : q.weights)
    if (gcd(w, q.index) != 1)
      fail(ErrorKind::UnsupportedFeature, "type " + q.format() + " is not isolated");
  for (Integer j = 1; j < q.index; ++j) {
    Integer sum = 0;
    for (const Integer& w : q.weights) sum += floor_mod(Integer(j * w), q.index);
    if (sum <= q.index) return false;
  }
  return true;
}

ChartVerdict classify(const QuotientSingularity& q) {
  QuotientSingularity n = normalize_type(q);
  if (n.is_smooth()) return ChartVerdict::Smooth;
  try {
    return is_terminal_cyclic(n) ? ChartVerdict::Terminal : ChartVerdict::NonTerminal;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedFeature) throw;
    return ChartVerdict::Undecided;
  }
}

const char* verdict_name(ChartVerdict v) {
  switch (v) {
    case ChartVerdict::Smooth: return "smooth";
    case ChartVerdict::Terminal: return "terminal";
    case ChartVerdict::NonTerminal: return "non-terminal";
    case ChartVerdict::Undecided: return "undecided";
  }
  return "undecided";
}

QuotientSingularity fixed_point_type(const WeightedBundleSpec& spec, std::size_t i, std::size_t j) {
  spec.validate();
  if (i > static_cast<std::size_t>(spec.n) || j > static_cast<std::size_t>(spec.m()))
    fail(ErrorKind::InvalidArgument, "chart index out of range");
  std::vector<Integer> fw = spec.fiber_weights();
  // On x_i y_j != 0 the base coordinates are untouched by the residual mu_{a_j};
  // the remaining fiber coordinates carry their own weights.
  QuotientSingularity q{fw[j], std::vector<Integer>(static_cast<std::size_t>(spec.n), Integer(0))};
  for (std::size_t t = 0; t < fw.size(); ++t)
    if (t != j) q.weights.push_back(fw[t]);
  return normalize_type(q);
}

std::vector<ChartReport> weighted_bundle_charts(const WeightedBundleSpec& spec) {
  spec.validate();
  std::vector<ChartReport> out;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(spec.n); ++i)
    for (std::size_t j = 0; j <= static_cast<std::size_t>(spec.m()); ++j)
      out.push_back({i, j, fixed_point_type(spec, i, j)});
  return out;
}

}  // namespace coxforge
