#pragma once

// Shipped example inputs and small builders for the unit tests.

#include "coxforge/coxpres.hpp"
#include "coxforge/textio.hpp"

#include <string>
#include <vector>

namespace fixture {

using namespace coxforge;

inline std::string data_path(const std::string& name) { return std::string(COXFORGE_DATA_DIR) + "/" + name; }

inline CoxPresentation load(const std::string& name) { return parse_presentation(read_text_file(data_path(name))); }

inline MonomialIdeal ideal(const CoxPresentation& p, const std::vector<std::vector<std::string>>& comps) {
  std::vector<IndexSet> out;
  for (const auto& c : comps) {
    IndexSet s;
    for (const std::string& v : c) s.push_back(p.index_of(v));
    std::sort(s.begin(), s.end());
    out.push_back(s);
  }
  return MonomialIdeal(out, p.size());
}

// The non-standard rank-2 example and its well-formed form, on x,y,z,t,u.
inline IntMatrix f2_raw() { return int_matrix({{3, 3, 3, 0, -2}, {1, 1, 1, 2, 0}}); }
inline IntMatrix f2_final() { return int_matrix({{1, 1, 1, 0, -2}, {0, 0, 0, 1, 1}}); }

inline CoxPresentation f2_presentation(const IntMatrix& w, bool stacky) {
  return make_presentation({"x", "y", "z", "t", "u"}, w,
                           std::vector<std::vector<std::string>>{{"x", "y", "z"}, {"t", "u"}}, stacky);
}

}  // namespace fixture
