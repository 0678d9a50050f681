#include "coxforge/coxpres.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace coxforge {

std::size_t CoxPresentation::index_of(const std::string& name) const {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) fail(ErrorKind::InvalidArgument, "unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - variables.begin());
}

void CoxPresentation::validate() const {
  if (variables.empty()) fail(ErrorKind::InvalidArgument, "presentation has no variables");
  std::set<std::string> seen;
  for (const std::string& v : variables) {
    if (v.empty() || v.find_first_of(" \t(),") != std::string::npos)
      fail(ErrorKind::InvalidArgument, "bad variable name '" + v + "'");
    if (!seen.insert(v).second) fail(ErrorKind::InvalidArgument, "duplicate variable '" + v + "'");
  }
  if (weights.rows() < 1 || weights.cols() != static_cast<Index>(variables.size()))
    fail(ErrorKind::InvalidArgument, "weight matrix needs one column per variable");
  if (coxforge::rank(weights) != weights.rows())
    fail(ErrorKind::RankError, "weight matrix does not have full row rank");
  for (Index j = 0; j < weights.cols(); ++j)
    if (weights.col(j).isZero())
      fail(ErrorKind::InvalidArgument, "zero weight column for " + variables[static_cast<std::size_t>(j)]);
  if (irrelevant.num_vars() != variables.size())
    fail(ErrorKind::InvalidArgument, "irrelevant ideal lives on a different variable count");
  if (!stacky && !(is_standard(weights) && is_well_formed(weights)))
    fail(ErrorKind::InvalidArgument,
         "weights are not well-formed; mark the presentation stacky or well-form it");
}

CoxPresentation make_presentation(std::vector<std::string> variables, IntMatrix weights,
                                  std::vector<IndexSet> components, bool stacky) {
  const std::size_t n = variables.size();
  CoxPresentation p{std::move(variables), std::move(weights),
                    MonomialIdeal(std::move(components), n), stacky};
  p.validate();
  return p;
}

CoxPresentation make_presentation(std::vector<std::string> variables, IntMatrix weights,
                                  const std::vector<std::vector<std::string>>& components,
                                  bool stacky) {
  std::vector<IndexSet> comps;
  for (const auto& c : components) {
    IndexSet s;
    for (const std::string& name : c) {
      auto it = std::find(variables.begin(), variables.end(), name);
      if (it == variables.end()) fail(ErrorKind::InvalidArgument, "unknown variable '" + name + "'");
      s.push_back(static_cast<std::size_t>(it - variables.begin()));
    }
    comps.push_back(std::move(s));
  }
  return make_presentation(std::move(variables), std::move(weights), std::move(comps), stacky);
}

std::vector<std::string> default_names(const std::string& stem, std::size_t count,
                                       std::size_t first) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(stem + std::to_string(first + i));
  return out;
}

std::string WellFormingCertificate::summary() const {
  if (steps.empty()) return "identity certificate (no steps)";
  std::ostringstream out;
  out << steps.size() << " step" << (steps.size() == 1 ? "" : "s") << ":";
  for (const CertificateStep& s : steps) {
    out << "\n  ";
    std::visit(
        [&](const auto& step) {
          using T = std::decay_t<decltype(step)>;
          if constexpr (std::is_same_v<T, RowTransform>) {
            out << "row transform (det " << determinant(step.g.matrix) << ")";
          } else if constexpr (std::is_same_v<T, ColumnScale>) {
            out << "scale column " << step.column << " by " << step.factor << " (row " << step.row
                << " divisible off the column)";
          } else if constexpr (std::is_same_v<T, RowDivide>) {
            out << "divide row " << step.row << " by " << step.factor;
          } else {
            out << "rescale rows by (";
            for (std::size_t i = 0; i < step.factors.size(); ++i)
              out << (i ? "," : "") << to_string(step.factors[i]);
            out << ")";
          }
        },
        s);
  }
  return out.str();
}

namespace {

bool divides(const Integer& q, const Integer& v) {
  return mpz_divisible_p(v.get_mpz_t(), q.get_mpz_t()) != 0;
}

// Applies one step in place; false when its hypothesis fails.
bool replay(IntMatrix& m, const CertificateStep& step) {
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RowTransform>) {
          if (s.g.matrix.rows() != m.rows() || !s.g.is_valid()) return false;
          m = s.g.matrix * m;
          return true;
        } else if constexpr (std::is_same_v<T, ColumnScale>) {
          if (s.column < 0 || s.column >= m.cols() || s.row < 0 || s.row >= m.rows()) return false;
          if (!is_probable_prime(s.factor)) return false;
          for (Index j = 0; j < m.cols(); ++j)
            if (j != s.column && !divides(s.factor, m(s.row, j))) return false;
          m.col(s.column) *= s.factor;
          return true;
        } else if constexpr (std::is_same_v<T, RowDivide>) {
          if (s.row < 0 || s.row >= m.rows() || !is_probable_prime(s.factor)) return false;
          for (Index j = 0; j < m.cols(); ++j)
            if (!divides(s.factor, m(s.row, j))) return false;
          for (Index j = 0; j < m.cols(); ++j) m(s.row, j) /= s.factor;
          return true;
        } else {
          if (static_cast<Index>(s.factors.size()) != m.rows()) return false;
          for (Index i = 0; i < m.rows(); ++i) {
            const Rational& f = s.factors[static_cast<std::size_t>(i)];
            if (f == 0) return false;
            for (Index j = 0; j < m.cols(); ++j) {
              Rational v = f * Rational(m(i, j));
              if (v.get_den() != 1) return false;
              m(i, j) = v.get_num();
            }
          }
          return true;
        }
      },
      step);
}

}  // namespace

bool verify_certificate(const IntMatrix& input, const WellFormingCertificate& cert,
                        const IntMatrix& output) {
  IntMatrix m = input;
  for (const CertificateStep& s : cert.steps)
    if (!replay(m, s)) return false;
  return same_matrix(m, output);
}

}  // namespace coxforge
