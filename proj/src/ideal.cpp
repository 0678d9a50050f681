#include "coxforge/ideal.hpp"

#include "coxforge/error.hpp"

#include <algorithm>
#include <bit>

namespace coxforge {

namespace {

using Mask = std::uint64_t;

Mask to_mask(const IndexSet& s) {
  Mask m = 0;
  for (std::size_t i : s) {
    if (i >= 64) fail(ErrorKind::UnsupportedFeature, "more than 64 variables");
    m |= Mask{1} << i;
  }
  return m;
}

IndexSet to_set(Mask m) {
  IndexSet s;
  while (m != 0) {
    s.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return s;
}

void keep_minimal(std::vector<Mask>& sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets) {
    bool dominated = false;
    for (Mask t : out)
      if ((t & s) == t) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  sets.swap(out);
}

bool lex_less(const IndexSet& a, const IndexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<IndexSet> minimal_transversals(const std::vector<IndexSet>& family) {
  std::vector<Mask> edges;
  for (const IndexSet& e : family) edges.push_back(to_mask(e));
  keep_minimal(edges);
  std::vector<Mask> current{0};
  for (Mask e : edges) {
    if (e == 0) return {};
    std::vector<Mask> next;
    for (Mask t : current) {
      if (t & e) {
        next.push_back(t);
        continue;
      }
      for (Mask rest = e; rest != 0; rest &= rest - 1) next.push_back(t | (rest & -rest));
    }
    keep_minimal(next);
    current.swap(next);
  }
  std::vector<IndexSet> out;
  for (Mask t : current) out.push_back(to_set(t));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

MonomialIdeal::MonomialIdeal(std::vector<IndexSet> components, std::size_t num_vars)
    : num_vars_(num_vars) {
  for (IndexSet& c : components) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty()) fail(ErrorKind::InvalidArgument, "empty ideal component");
    if (c.back() >= num_vars) fail(ErrorKind::InvalidArgument, "ideal index out of range");
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < components.size() && keep; ++j) {
      if (i == j) continue;
      const IndexSet& a = components[i];
      const IndexSet& b = components[j];
      bool sub = std::includes(a.begin(), a.end(), b.begin(), b.end());
      // b inside a: a is redundant; equal sets keep the first copy.
      if (sub && (a.size() > b.size() || j < i)) keep = false;
    }
    if (keep) components_.push_back(components[i]);
  }
}

MonomialIdeal MonomialIdeal::from_generators(const std::vector<IndexSet>& generators,
                                             std::size_t num_vars) {
  std::vector<IndexSet> comps = minimal_transversals(generators);
  return MonomialIdeal(std::move(comps), num_vars);
}

std::vector<IndexSet> MonomialIdeal::generators() const {
  return minimal_transversals(components_);
}

bool MonomialIdeal::same_ideal(const MonomialIdeal& other) const {
  if (num_vars_ != other.num_vars_) return false;
  std::vector<IndexSet> a = components_, b = other.components_;
  std::sort(a.begin(), a.end(), lex_less);
  std::sort(b.begin(), b.end(), lex_less);
  return a == b;
}

MonomialIdeal MonomialIdeal::permuted(const std::vector<std::size_t>& perm) const {
  std::vector<IndexSet> comps;
  for (const IndexSet& c : components_) {
    IndexSet d;
    for (std::size_t i : c) d.push_back(perm.at(i));
    comps.push_back(std::move(d));
  }
  return MonomialIdeal(std::move(comps), num_vars_);
}

std::string MonomialIdeal::format(const std::vector<std::string>& names) const {
  std::string out;
  for (const IndexSet& c : components_) {
    out += "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ",";
      out += c[k] < names.size() ? names[c[k]] : std::to_string(c[k]);
    }
    out += ")";
  }
  return out;
}

IndexSet complement(const IndexSet& s, std::size_t n) {
  IndexSet out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (k < s.size() && s[k] == i) {
      ++k;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

}  // namespace coxforge
