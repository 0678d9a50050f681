#include "coxforge/coxpres.hpp"

#include <algorithm>
#include <map>

namespace coxforge {

namespace {

// Subsets of {0..limit-1} of the given size, each sorted.
void subsets(std::size_t limit, std::size_t size, std::vector<IndexSet>& out) {
  IndexSet cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < limit; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

Integer minor(const IntMatrix& m, const IndexSet& cols) {
  IntMatrix sub(m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) sub.col(static_cast<Index>(k)) = m.col(static_cast<Index>(cols[k]));
  return determinant(sub);
}

class PermutationSearch {
 public:
  PermutationSearch(const CoxPresentation& p, const CoxPresentation& q)
      : a_(p.weights), b_(q.weights), p_(p), q_(q), n_(p.size()), r_(static_cast<std::size_t>(p.rank())) {
    for (std::size_t j = 0; j < n_; ++j) {
      sig_p_.push_back(signature(p.irrelevant, j));
      sig_q_.push_back(signature(q.irrelevant, j));
    }
    // Targets with equal columns and equal ideal membership are interchangeable.
    for (std::size_t c = 0; c < n_; ++c) {
      class_of_.push_back(c);
      for (std::size_t e = 0; e < c; ++e)
        if (class_of_[e] == e && same_matrix(b_.col(static_cast<Index>(e)), b_.col(static_cast<Index>(c))) &&
            membership(q.irrelevant, e) == membership(q.irrelevant, c)) {
          class_of_[c] = e;
          break;
        }
    }
    restrict_columns_ = n_ > 12;
    perm_.assign(n_, 0);
    used_.assign(n_, false);
  }

  bool run() { return extend(0); }

 private:
  static std::vector<std::size_t> signature(const MonomialIdeal& ideal, std::size_t j) {
    std::vector<std::size_t> sizes;
    for (const IndexSet& c : ideal.components())
      if (std::binary_search(c.begin(), c.end(), j)) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }

  static std::vector<bool> membership(const MonomialIdeal& ideal, std::size_t j) {
    std::vector<bool> m;
    for (const IndexSet& c : ideal.components()) m.push_back(std::binary_search(c.begin(), c.end(), j));
    return m;
  }

  // Minors through column j must agree up to one global sign.
  bool minors_consistent(std::size_t j) {
    if (j + 1 < r_) return true;
    std::vector<IndexSet> heads;
    subsets(j, r_ - 1, heads);
    for (IndexSet s : heads) {
      s.push_back(j);
      IndexSet t;
      for (std::size_t i : s) t.push_back(perm_[i]);
      Integer dp = minor(a_, s), dq = minor(b_, t);
      if (dp == 0 || dq == 0) {
        if (dp != dq) return false;
        continue;
      }
      int sign;
      if (dp == dq) sign = 1;
      else if (dp == -dq) sign = -1;
      else return false;
      if (sign_ == 0) sign_ = sign;
      else if (sign_ != sign) return false;
    }
    return true;
  }

  bool extend(std::size_t j) {
    if (j == n_) return accept();
    std::vector<bool> tried(n_, false);
    for (std::size_t c = 0; c < n_; ++c) {
      if (used_[c] || tried[class_of_[c]]) continue;
      tried[class_of_[c]] = true;
      if (sig_p_[j] != sig_q_[c]) continue;
      if (restrict_columns_ && !same_matrix(a_.col(static_cast<Index>(j)), b_.col(static_cast<Index>(c)))) continue;
      perm_[j] = c;
      used_[c] = true;
      int saved = sign_;
      if (minors_consistent(j) && extend(j + 1)) return true;
      sign_ = saved;
      used_[c] = false;
    }
    return false;
  }

  bool accept() {
    IntMatrix permuted(b_.rows(), b_.cols());
    for (std::size_t j = 0; j < n_; ++j) permuted.col(static_cast<Index>(j)) = b_.col(static_cast<Index>(perm_[j]));
    if (!same_matrix(hnf_canonical(permuted), hnf_canonical(a_))) return false;
    return p_.irrelevant.permuted(perm_).same_ideal(q_.irrelevant);
  }

  IntMatrix a_, b_;
  const CoxPresentation& p_;
  const CoxPresentation& q_;
  std::size_t n_, r_;
  std::vector<std::vector<std::size_t>> sig_p_, sig_q_;
  std::vector<std::size_t> class_of_;
  bool restrict_columns_ = false;
  std::vector<std::size_t> perm_;
  std::vector<bool> used_;
  int sign_ = 0;
};

}  // namespace

bool presentations_equivalent(const CoxPresentation& p, const CoxPresentation& q) {
  if (p.size() != q.size() || p.rank() != q.rank()) return false;
  if (p.irrelevant.components().size() != q.irrelevant.components().size()) return false;
  CoxPresentation wp = well_form(p).presentation;
  CoxPresentation wq = well_form(q).presentation;
  return PermutationSearch(wp, wq).run();
}

}  // namespace coxforge
