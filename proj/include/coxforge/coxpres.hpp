#pragma once

#include "coxforge/ideal.hpp"
#include "coxforge/intlattice.hpp"

#include <string>
#include <variant>
#include <vector>

namespace coxforge {

// Cox data (I, A): variables, a full-rank weight matrix (one column per
// variable) and the irrelevant ideal. stacky = true allows a matrix that is
// not well-formed, i.e. the stack [I, A].
struct CoxPresentation {
  std::vector<std::string> variables;
  IntMatrix weights;
  MonomialIdeal irrelevant;
  bool stacky = false;

  Index rank() const { return weights.rows(); }
  std::size_t size() const { return variables.size(); }
  std::size_t index_of(const std::string& name) const;
  IntVector column(std::size_t i) const { return weights.col(static_cast<Index>(i)); }

  // Throws Error on any broken invariant.
  void validate() const;
};

CoxPresentation make_presentation(std::vector<std::string> variables, IntMatrix weights,
                                  std::vector<IndexSet> components, bool stacky = false);
// Components given by variable name.
CoxPresentation make_presentation(std::vector<std::string> variables, IntMatrix weights,
                                  const std::vector<std::vector<std::string>>& components,
                                  bool stacky = false);

std::vector<std::string> default_names(const std::string& stem, std::size_t count,
                                       std::size_t first = 0);

struct RowTransform {
  UnimodularWitness g;  // matrix <- g.matrix * matrix
};
struct ColumnScale {
  Index column;
  Integer factor;
  Index row;  // factor divides every entry of this row except the one in `column`
};
struct RowDivide {
  Index row;
  Integer factor;
};
struct RowRescaleRational {
  std::vector<Rational> factors;  // row i <- factors[i] * row i
};
using CertificateStep = std::variant<RowTransform, ColumnScale, RowDivide, RowRescaleRational>;

struct WellFormingCertificate {
  std::vector<CertificateStep> steps;

  bool empty() const { return steps.empty(); }
  std::string summary() const;
};

// Replays the steps; false on any failed hypothesis or mismatch.
bool verify_certificate(const IntMatrix& input, const WellFormingCertificate& cert,
                        const IntMatrix& output);

// Every column-deleted submatrix is standard. Throws must-standardize-first.
bool is_well_formed(const IntMatrix& a);

struct WellFormedMatrix {
  IntMatrix matrix;
  WellFormingCertificate certificate;
};
// Standardizes if needed, scales columns until well-formed, then takes the
// Hermite form.
WellFormedMatrix well_form_matrix(const IntMatrix& a);

struct WellFormedPresentation {
  CoxPresentation presentation;
  WellFormingCertificate certificate;
};
WellFormedPresentation well_form(const CoxPresentation& p);
CoxPresentation coarse_moduli(const CoxPresentation& p);

std::vector<Integer> wps_well_form(const std::vector<Integer>& weights);

bool presentations_equivalent(const CoxPresentation& p, const CoxPresentation& q);

}  // namespace coxforge
