#pragma once

#include "coxforge/blowup.hpp"
#include "coxforge/galefan.hpp"

#include <optional>
#include <string>
#include <utility>

namespace coxforge {

// All parsers skip blank lines and lines starting with '#', and throw
// Error(Parse) with a line number on malformed input.

// "r n" then r rows of n integers.
IntMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntMatrix& m);

// rank r / vars ... / r weight rows / irrelevant (a,b)(c,d) / [stacky true]
CoxPresentation parse_presentation(const std::string& text);
std::string format_presentation(const CoxPresentation& p);

// dim d / rays k + k rows / cones m + m rows of 1-based ray indices
Fan parse_fan(const std::string& text);
std::string format_fan(const Fan& f);

// Input of the discrepancy command:
//   presentation FILE         bundle presentation, relative to the spec file
//   center BASE FIBER         0-based
//   b B0 .. Bm
//   newvar NAME               optional
//   equation DEG.. [; EXP..]* one per equation
//   order C                   optional explicit order for the previous equation
//   solve INDEX TARGET [BOUND] optional; replaces b_INDEX by the least solution
struct DiscrepancySpec {
  std::string presentation_path;
  std::size_t center_base = 1;
  std::size_t k = 0;
  std::vector<Integer> b;
  std::string new_var = "xi";
  CIData ci;
  struct Solve {
    std::size_t unknown;
    Rational target;
    Integer bound{1000};
  };
  std::optional<Solve> solve;
};
DiscrepancySpec parse_discrepancy_spec(const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace coxforge
