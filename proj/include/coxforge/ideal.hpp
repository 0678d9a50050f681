#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace coxforge {

using IndexSet = std::vector<std::size_t>;  // sorted, duplicate-free

// Minimal sets meeting every member of `family` (the hitting sets). The empty
// family has the single transversal {}; a family containing {} has none.
std::vector<IndexSet> minimal_transversals(const std::vector<IndexSet>& family);

// Squarefree monomial ideal stored as an intersection of coordinate primes.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  // Sorts each component, drops non-minimal ones, rejects empty components and
  // indices >= num_vars. Component order is kept (first occurrence wins).
  MonomialIdeal(std::vector<IndexSet> components, std::size_t num_vars);

  static MonomialIdeal from_generators(const std::vector<IndexSet>& generators,
                                       std::size_t num_vars);

  const std::vector<IndexSet>& components() const { return components_; }
  std::size_t num_vars() const { return num_vars_; }

  // Minimal squarefree generators, as index sets, in lexicographic order.
  std::vector<IndexSet> generators() const;

  // Same set of components, order ignored.
  bool same_ideal(const MonomialIdeal& other) const;
  bool operator==(const MonomialIdeal& other) const = default;

  // Relabels variable i as perm[i].
  MonomialIdeal permuted(const std::vector<std::size_t>& perm) const;

  std::string format(const std::vector<std::string>& names) const;

 private:
  std::vector<IndexSet> components_;
  std::size_t num_vars_ = 0;
};

IndexSet complement(const IndexSet& s, std::size_t n);

}  // namespace coxforge
