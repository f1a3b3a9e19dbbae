#include "icphi/analysis.hpp"

#include "icphi/classify.hpp"
#include "icphi/series.hpp"

namespace icphi {

Analysis::Analysis(const Group& g)
    : g_(&g),
      l_(g),
      qss_(static_cast<size_t>(l_.size()), -1),
      fstar_(static_cast<size_t>(l_.size())) {
  Subgroup whole = full_subgroup(g);
  icphi_.resize(l_.size());
  for (int i = 0; i < l_.size(); ++i) {
    Subgroup h = l_.subgroup(i);
    Subgroup hg = commutator_subgroup(g, h, whole);
    const ElemMask& phi = l_.mask(l_.frattini_of(i));
    icphi_[i] = (h.mask & hg.mask).subset_of(phi) ? 1 : 0;
  }
}

bool Analysis::nilpotent() const {
  if (!nilpotent_) nilpotent_ = is_nilpotent(*g_, l_);
  return *nilpotent_;
}

bool Analysis::solvable() const {
  if (!solvable_) solvable_ = is_solvable(*g_);
  return *solvable_;
}

bool Analysis::supersolvable() const {
  if (!supersolvable_) supersolvable_ = is_supersolvable(*g_, l_);
  return *supersolvable_;
}

bool Analysis::entry_q8_free(int i) const {
  if (q8f_.empty()) {
    // One ascending pass settles every entry.  A proper subgroup with a
    // quaternion section lies in some maximal subgroup, so an entry is
    // Q8-free exactly when all its maximal subgroups are and none of its
    // own index-8 normal subgroups gives a quaternion quotient.  The
    // entries are sorted by order, so maximal subgroups come first.
    q8f_.assign(l_.size(), 1);
    for (int e = 0; e < l_.size(); ++e) {
      for (int m : l_.maximal_subgroups_of(e)) {
        if (!q8f_[m]) {
          q8f_[e] = 0;
          break;
        }
      }
      if (!q8f_[e] || l_.order_of(e) % 8 != 0) continue;
      int want = l_.order_of(e) / 8;
      for (int n = 0; n < l_.size() && q8f_[e]; ++n) {
        if (l_.order_of(n) != want || !l_.contains(n, e)) continue;
        if (!entry_normal_in(l_, n, e)) continue;
        if (section_is_q8(*g_, l_.mask(e), l_.mask(n))) q8f_[e] = 0;
      }
    }
  }
  return q8f_[i] != 0;
}

const ElemMask& Analysis::derived_mask() const {
  if (!derived_) {
    Subgroup whole = full_subgroup(*g_);
    derived_ = commutator_subgroup(*g_, whole, whole).mask;
  }
  return *derived_;
}

const ElemMask& Analysis::hypercenter_mask() const {
  if (!hyper_) hyper_ = hypercenter(*g_).mask;
  return *hyper_;
}

const ElemMask& Analysis::u_hypercenter_mask() const {
  if (!uhyper_) uhyper_ = u_hypercenter(*g_, l_).mask;
  return *uhyper_;
}

bool Analysis::quotient_supersolvable(int i) const {
  require(l_.normal(i), "quotient_supersolvable: entry is not normal");
  if (qss_[i] >= 0) return qss_[i] != 0;
  bool result;
  if (i == l_.top() || supersolvable()) {
    // Quotients of supersolvable groups are supersolvable, so only a
    // non-supersolvable parent ever needs the quotient built.
    result = true;
  } else if (i == l_.bottom()) {
    result = false;  // supersolvable() above already said no
  } else {
    QuotientGroup q = quotient(*g_, l_.subgroup(i));
    SubgroupLattice ql(q.group);
    result = is_supersolvable(q.group, ql);
  }
  qss_[i] = result ? 1 : 0;
  return result;
}

const ElemMask& Analysis::fstar_of(int i) const {
  if (fstar_[i]) return *fstar_[i];
  if (i == l_.top()) {
    fstar_[i] = generalized_fitting(*g_, l_).mask;
  } else if (is_nilpotent_entry(l_, i)) {
    // A nilpotent group is its own Fitting subgroup, hence its own
    // generalized Fitting subgroup.  This skips the standalone lattice for
    // the vast majority of entries.
    fstar_[i] = l_.mask(i);
  } else {
    Group eg = as_group(l_.subgroup(i));
    SubgroupLattice el(eg);
    Subgroup fs = generalized_fitting(eg, el);
    ElemMask m;
    fs.mask.for_each([&](int r) { m.set(g_->rank_of(eg.element(r))); });
    fstar_[i] = m;
  }
  return *fstar_[i];
}

bool Analysis::entry_p_nilpotent(int i, int p) const {
  require(is_prime(p), "entry_p_nilpotent: p must be prime");
  int want = l_.order_of(i) / p_part(l_.order_of(i), p);
  for (int k = 0; k < l_.size(); ++k) {
    if (l_.order_of(k) != want) continue;
    if (!l_.contains(k, i)) continue;
    if (entry_normal_in(l_, k, i)) return true;
  }
  return false;
}

}  // namespace icphi
