#include "icphi/verify.hpp"

#include <algorithm>
#include <string>

#include "icphi/classify.hpp"
#include "icphi/construct.hpp"
#include "icphi/series.hpp"

namespace icphi {

namespace {

struct StatementInfo {
  StatementId id;
  const char* name;
  const char* summary;
};

const StatementInfo kCatalogue[] = {
    {StatementId::T11,
     "T11",
     "a Sylow p-subgroup with a qualifying order forces p-nilpotence"},
    {StatementId::T12,
     "T12",
     "Q8-free with every order-2 subgroup ICPhi forces 2-nilpotence"},
    {StatementId::T13,
     "T13",
     "normal E, supersolvable quotient, ICPhi maximals in E's Sylows force "
     "supersolvability"},
    {StatementId::T14,
     "T14",
     "normal E, supersolvable quotient, cyclic-or-qualifying Sylows of E "
     "force supersolvability"},
    {StatementId::T15,
     "T15",
     "normal E, supersolvable quotient, cyclic-or-qualifying Sylows of "
     "F*(E) force supersolvability"},
    {StatementId::T16,
     "T16",
     "abelian iff Q8-free with all subgroups ICPhi iff Q8-free with all "
     "primary subgroups ICPhi"},
    {StatementId::T17, "T17",
     "every maximal subgroup ICPhi forces nilpotence"},
    {StatementId::T18, "T18",
     "every second-maximal subgroup ICPhi forces nilpotence"},
    {StatementId::T19,
     "T19",
     "every third-maximal subgroup ICPhi forces nilpotence or SL(2,3)"},
    {StatementId::L01,
     "L01",
     "ICPhi persists in intermediate subgroups and passes to quotients"},
    {StatementId::L02,
     "L02",
     "a proper nontrivial ICPhi subgroup rules out simplicity"},
    {StatementId::L03,
     "L03",
     "an ICPhi subgroup containing the derived subgroup is nilpotent"},
    {StatementId::L04,
     "L04",
     "minimal non-nilpotent groups split as P Q with P/Phi(P) a chief "
     "factor"},
    {StatementId::L05,
     "L05",
     "Q8-free minimal non-2-nilpotent groups have elementary abelian "
     "Sylow 2-subgroups"},
    {StatementId::L06,
     "L06",
     "p-power normalizer-over-centralizer quotients force p-nilpotence"},
    {StatementId::L07,
     "L07",
     "a cyclic Sylow subgroup for the smallest prime forces p-nilpotence"},
    {StatementId::L08,
     "L08",
     "a normal p-subgroup centralized up to p-power index lies in the "
     "hypercenter"},
    {StatementId::L09,
     "L09",
     "normal E with supersolvable quotient inside the U-hypercenter forces "
     "supersolvability"},
    {StatementId::L10,
     "L10",
     "F*(E) inside the U-hypercenter pulls the normal subgroup E in too"},
    {StatementId::L11,
     "L11",
     "a unique order-p subgroup forces cyclic or generalized quaternion"},
    {StatementId::L12,
     "L12",
     "only the trivial second-maximal subgroup forces order pq"},
    {StatementId::L13,
     "L13",
     "only the trivial third-maximal subgroup forces order pqr"},
    {StatementId::L14,
     "L14",
     "maximal subgroups of solvable groups have prime-power index"},
    {StatementId::L15, "L15", "the automorphism group of Q8 is S4"},
    {StatementId::L16,
     "L16",
     "2-closed order-24 groups with quaternion Sylow 2-subgroup are Q8 x C3 "
     "or SL(2,3)"},
    {StatementId::L17,
     "L17",
     "a normal p-subgroup with a qualifying order lies in the hypercenter"},
    {StatementId::L18,
     "L18",
     "p-groups with all subgroups ICPhi, Q8-free when p = 2, are abelian"},
};

std::string num(long long n) { return std::to_string(n); }

std::string entry_desc(const SubgroupLattice& l, int i) {
  return "order-" + num(l.order_of(i)) + " subgroup (lattice entry " +
         num(i) + ")";
}

int prime_omega(int n) {
  int c = 0;
  for (int p : prime_divisors(n)) {
    while (n % p == 0) {
      n /= p;
      ++c;
    }
  }
  return c;
}

// First lattice entry that is a Sylow p-subgroup of entry #e.  One
// representative is enough everywhere this is used: the Sylow p-subgroups
// of E are conjugate, conjugation permutes the subgroups of each order, and
// both the ICPhi property and cyclicity are conjugation-invariant.
int sylow_in_entry(const SubgroupLattice& l, int e, int p) {
  int want = p_part(l.order_of(e), p);
  for (int k = 0; k < l.size(); ++k)
    if (l.order_of(k) == want && l.contains(k, e)) return k;
  check(false, "sylow_in_entry: no candidate of the right order");
  return -1;
}

bool all_of_order_icphi(const Analysis& a, int p_entry, int d) {
  const SubgroupLattice& l = a.lattice();
  for (int k = 0; k < l.size(); ++k)
    if (l.order_of(k) == d && l.contains(k, p_entry) && !a.icphi(k))
      return false;
  return true;
}

bool cyclic4_all_icphi(const Analysis& a, int p_entry) {
  const SubgroupLattice& l = a.lattice();
  for (int k = 0; k < l.size(); ++k)
    if (l.order_of(k) == 4 && l.cyclic(k) && l.contains(k, p_entry) &&
        !a.icphi(k))
      return false;
  return true;
}

// Smallest d with 1 < d <= |P| such that every order-d subgroup of the
// p-group at p_entry is ICPhi in G, honoring the order-4 rider attached to
// d = 2.  The rider triggers for |P| >= 8 outright, or only when P has a
// quaternion section, depending on the statement.  Returns 0 when no order
// qualifies.
int qualifying_order(const Analysis& a, int p_entry, int p,
                     bool q8_conditional) {
  const SubgroupLattice& l = a.lattice();
  int top_order = l.order_of(p_entry);
  for (int d = p; d <= top_order; d *= p) {
    if (!all_of_order_icphi(a, p_entry, d)) continue;
    if (p == 2 && d == 2) {
      bool rider = q8_conditional ? !a.entry_q8_free(p_entry)
                                  : top_order >= 8;
      if (rider && !cyclic4_all_icphi(a, p_entry)) continue;
    }
    return d;
  }
  return 0;
}

// H n [H,K] <= Phi(H) for lattice entries h <= k.
bool icphi_within(const Analysis& a, int h, int k) {
  const Group& g = a.group();
  const SubgroupLattice& l = a.lattice();
  Subgroup hs = l.subgroup(h);
  Subgroup c = commutator_subgroup(g, hs, l.subgroup(k));
  return (hs.mask & c.mask).subset_of(l.mask(l.frattini_of(h)));
}

// Whether the image of entry #h is ICPhi in G/N, for N the normal entry #n
// contained in h.  Phi of the image comes from the subgroup correspondence:
// the maximal subgroups of H/N are exactly the images of the maximal
// subgroups of H that contain N.
bool image_icphi(const SubgroupLattice& l, const QuotientGroup& q, int h,
                 int n) {
  const Group& qg = q.group;
  ElemMask himg = q.project_mask(l.mask(h));
  if (himg.count() == 1) return true;
  Subgroup hq = subgroup_from_mask(qg, himg);
  Subgroup c = commutator_subgroup(qg, hq, full_subgroup(qg));
  ElemMask meet = himg & c.mask;
  ElemMask phi;
  bool first = true;
  for (int m : l.maximal_subgroups_of(h)) {
    if (!l.contains(n, m)) continue;
    ElemMask mm = q.project_mask(l.mask(m));
    if (first) {
      phi = mm;
      first = false;
    } else {
      phi &= mm;
    }
  }
  check(!first, "image_icphi: nontrivial quotient without maximal subgroups");
  return meet.subset_of(phi);
}

const Group& ref_sl23() {
  static const Group g = construct::sl23();
  return g;
}

const Group& ref_s4() {
  static const Group g = construct::symmetric(4);
  return g;
}

const Group& ref_q8xc3() {
  static const Group g =
      construct::direct_product(construct::quaternion8(), construct::cyclic(3));
  return g;
}

Verdict check_t11(const Analysis& a) {
  Verdict v{StatementId::T11};
  const Group& g = a.group();
  const SubgroupLattice& l = a.lattice();
  if (g.order() == 1) {
    v.witness = "trivial group has no prime divisors";
    return v;
  }
  bool any = false;
  bool ok = true;
  std::string w;
  for (int p : prime_divisors(g.order())) {
    int pe = l.sylow_index(p);
    int d = qualifying_order(a, pe, p, /*q8_conditional=*/false);
    if (d == 0) continue;
    any = true;
    if (!w.empty()) w += "; ";
    w += "p=" + num(p) + " d=" + num(d);
    if (!is_p_nilpotent(g, l, p)) {
      ok = false;
      w += " but not " + num(p) + "-nilpotent";
      break;
    }
  }
  if (!any) {
    v.witness = "no Sylow subgroup has a qualifying order";
    return v;
  }
  v.hypothesis = Hypothesis::Satisfied;
  v.conclusion = ok ? Conclusion::Verified : Conclusion::Violated;
  v.witness = w;
  return v;
}

Verdict check_t12(const Analysis& a) {
  Verdict v{StatementId::T12};
  const Group& g = a.group();
  const SubgroupLattice& l = a.lattice();
  if (!a.q8_free()) {
    v.witness = "a section is the quaternion group";
    return v;
  }
  for (int i = 0; i < l.size(); ++i) {
    if (l.order_of(i) == 2 && !a.icphi(i)) {
      v.witness = entry_desc(l, i) + " is not ICPhi";
      return v;
    }
  }
  v.hypothesis = Hypothesis::Satisfied;
  bool ok = is_p_nilpotent(g, l, 2);
  v.conclusion = ok ? Conclusion::Verified : Conclusion::Violated;
  v.witness = ok ? "Q8-free, order-2 subgroups ICPhi, 2-nilpotent"
                 : "hypothesis holds but the group is not 2-nilpotent";
  return v;
}

Verdict check_t13(const Analysis& a) {
  Verdict v{StatementId::T13};
  const SubgroupLattice& l = a.lattice();
  for (int e : l.normal_indices()) {
    if (!a.quotient_supersolvable(e)) continue;
    bool ok = true;
    for (int p : prime_divisors(l.order_of(e))) {
      int pe = sylow_in_entry(l, e, p);
      for (int m : l.maximal_subgroups_of(pe)) {
        if (!a.icphi(m)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) {
      v.hypothesis = Hypothesis::Satisfied;
      v.witness = "E = " + entry_desc(l, e);
      break;
    }
  }
  if (v.hypothesis != Hypothesis::Satisfied) {
    v.witness = "no normal subgroup qualifies";
    return v;
  }
  v.conclusion =
      a.supersolvable() ? Conclusion::Verified : Conclusion::Violated;
  return v;
}

// Shared by T14 and T15: do the Sylow subgroups of the entry at #scope all
// pass "cyclic or some order qualifies"?
bool sylows_cyclic_or_qualifying(const Analysis& a, int scope) {
  const SubgroupLattice& l = a.lattice();
  for (int p : prime_divisors(l.order_of(scope))) {
    int pe = sylow_in_entry(l, scope, p);
    if (l.cyclic(pe)) continue;
    if (qualifying_order(a, pe, p, /*q8_conditional=*/true) == 0) return false;
  }
  return true;
}

Verdict check_t14(const Analysis& a) {
  Verdict v{StatementId::T14};
  const SubgroupLattice& l = a.lattice();
  for (int e : l.normal_indices()) {
    if (l.order_of(e) == 1) continue;
    if (!a.quotient_supersolvable(e)) continue;
    if (!sylows_cyclic_or_qualifying(a, e)) continue;
    v.hypothesis = Hypothesis::Satisfied;
    v.witness = "E = " + entry_desc(l, e);
    break;
  }
  if (v.hypothesis != Hypothesis::Satisfied) {
    v.witness = "no nontrivial normal subgroup qualifies";
    return v;
  }
  v.conclusion =
      a.supersolvable() ? Conclusion::Verified : Conclusion::Violated;
  return v;
}

Verdict check_t15(const Analysis& a) {
  Verdict v{StatementId::T15};
  const SubgroupLattice& l = a.lattice();
  for (int e : l.normal_indices()) {
    if (l.order_of(e) == 1) continue;
    if (!a.quotient_supersolvable(e)) continue;
    int fe = l.index_of(a.fstar_of(e));
    if (!sylows_cyclic_or_qualifying(a, fe)) continue;
    v.hypothesis = Hypothesis::Satisfied;
    v.witness =
        "E = " + entry_desc(l, e) + ", F*(E) = " + entry_desc(l, fe);
    break;
  }
  if (v.hypothesis != Hypothesis::Satisfied) {
    v.witness = "no nontrivial normal subgroup qualifies";
    return v;
  }
  v.conclusion =
      a.supersolvable() ? Conclusion::Verified : Conclusion::Violated;
  return v;
}

Verdict check_t16(const Analysis& a) {
  Verdict v{StatementId::T16, Hypothesis::Satisfied, Conclusion::Verified,
            ""};
  const SubgroupLattice& l = a.lattice();
  bool all_flags = true;
  bool primary_flags = true;
  for (int i = 0; i < l.size(); ++i) {
    if (a.icphi(i)) continue;
    all_flags = false;
    if (is_prime_power(l.order_of(i))) primary_flags = false;
  }
  bool c1 = is_abelian(a.group());
  bool c2 = a.q8_free() && all_flags;
  bool c3 = a.q8_free() && primary_flags;
  if (c1 == c2 && c2 == c3) {
    v.witness = c1 ? "abelian, and both ICPhi characterizations hold"
                   : "non-abelian, and both ICPhi characterizations fail";
  } else {
    v.conclusion = Conclusion::Violated;
    v.witness = std::string("abelian=") + (c1 ? "yes" : "no") +
                " all-ICPhi=" + (c2 ? "yes" : "no") +
                " primary-ICPhi=" + (c3 ? "yes" : "no");
  }
  return v;
}

Verdict check_maximal_level(const Analysis& a, StatementId id, int level) {
  Verdict v{id};
  const Group& g = a.group();
  const SubgroupLattice& l = a.lattice();
  const std::vector<int>& lvl = l.n_maximal(level);
  if (level >= 2) {
    bool nontrivial = false;
    for (int i : lvl)
      if (l.order_of(i) > 1) nontrivial = true;
    if (!nontrivial) {
      v.hypothesis = Hypothesis::Vacuous;
      v.witness = "no nontrivial " + num(level) + "-maximal subgroup";
      return v;
    }
  }
  for (int i : lvl) {
    if (!a.icphi(i)) {
      v.witness = entry_desc(l, i) + " is not ICPhi";
      return v;
    }
  }
  v.hypothesis = Hypothesis::Satisfied;
  bool ok = a.nilpotent();
  std::string extra;
  if (!ok && id == StatementId::T19) {
    ok = isomorphic(g, ref_sl23());
    if (ok) extra = " (isomorphic to SL(2,3))";
  }
  v.conclusion = ok ? Conclusion::Verified : Conclusion::Violated;
  v.witness = num(lvl.size()) + " subgroups at depth " + num(level) + extra;
  return v;
}

Verdict check_l01(const Analysis& a) {
  Verdict v{StatementId::L01, Hypothesis::Satisfied, Conclusion::Verified,
            ""};
  const Group& g = a.group();
  const SubgroupLattice& l = a.lattice();
  long long pairs = 0, images = 0, joins = 0;

  // An ICPhi subgroup of G is ICPhi in every intermediate subgroup.  The
  // case K = G restates the flag itself, so it is skipped.
  for (int h = 0; h < l.size(); ++h) {
    if (!a.icphi(h)) continue;
    for (int k = 0; k < l.size(); ++k) {
      if (k == l.top() || !l.contains(h, k)) continue;
      ++pairs;
      if (!icphi_within(a, h, k)) {
        v.conclusion = Conclusion::Violated;
        v.witness = entry_desc(l, h) + " stops being ICPhi inside " +
                    entry_desc(l, k);
        return v;
      }
    }
  }

  // The two quotient clauses share one quotient record per normal subgroup:
  // images of ICPhi overgroups of N stay ICPhi, and so do images HN/N for
  // ICPhi p-subgroups H when N is a p'-group.
  for (int n : l.normal_indices()) {
    QuotientGroup q = quotient(g, l.subgroup(n));
    for (int h = 0; h < l.size(); ++h) {
      if (!a.icphi(h)) continue;
      if (l.contains(n, h)) {
        ++images;
        if (!image_icphi(l, q, h, n)) {
          v.conclusion = Conclusion::Violated;
          v.witness = "image of " + entry_desc(l, h) + " modulo " +
                      entry_desc(l, n) + " is not ICPhi";
          return v;
        }
      }
      int ho = l.order_of(h);
      if (ho > 1 && is_prime_power(ho) &&
          l.order_of(n) % prime_divisors(ho)[0] != 0) {
        std::vector<uint16_t> seeds = l.gens(h);
        const std::vector<uint16_t>& ngens = l.gens(n);
        seeds.insert(seeds.end(), ngens.begin(), ngens.end());
        int hn = l.index_of(mask_closure(g, seeds));
        ++joins;
        if (!image_icphi(l, q, hn, n)) {
          v.conclusion = Conclusion::Violated;
          v.witness = "join of " + entry_desc(l, h) + " with " +
                      entry_desc(l, n) + " is not ICPhi modulo the latter";
          return v;
        }
      }
    }
  }
  v.witness = num(pairs) + " intermediate pairs, " + num(images) +
              " quotient images, " + num(joins) + " coprime joins";
  return v;
}

Verdict check_l02(const Analysis& a) {
  Verdict v{StatementId::L02};
  const SubgroupLattice& l = a.lattice();
  for (int i = 1; i < l.size() - 1; ++i) {
    if (a.icphi(i)) {
      v.hypothesis = Hypothesis::Satisfied;
      v.witness = entry_desc(l, i);
      v.conclusion =
          is_simple(a.group()) ? Conclusion::Violated : Conclusion::Verified;
      return v;
    }
  }
  v.witness = "no proper nontrivial ICPhi subgroup";
  return v;
}

Verdict check_l03(const Analysis& a) {
  Verdict v{StatementId::L03};
  const SubgroupLattice& l = a.lattice();
  const ElemMask& derived = a.derived_mask();
  bool any = false;
  for (int h = 0; h < l.size(); ++h) {
    if (!a.icphi(h) || !derived.subset_of(l.mask(h))) continue;
    if (!any) {
      any = true;
      v.hypothesis = Hypothesis::Satisfied;
      v.conclusion = Conclusion::Verified;
      v.witness = "first instance " + entry_desc(l, h);
    }
    if (!is_nilpotent_entry(l, h)) {
      v.conclusion = Conclusion::Violated;
      v.witness = entry_desc(l, h) + " is ICPhi above G' but not nilpotent";
      return v;
    }
  }
  if (!any) v.witness = "no ICPhi subgroup contains the derived subgroup";
  return v;
}

Verdict check_l04(const Analysis& a) {
  Verdict v{StatementId::L04};
  const Group& g = a.group();
  const SubgroupLattice& l = a.lattice();
  if (!is_minimal_non_nilpotent(g, l)) {
    v.witness = "not minimal non-nilpotent";
    return v;
  }
  v.hypothesis = Hypothesis::Satisfied;
  v.conclusion = Conclusion::Violated;  // until every clause passes
  std::vector<int> ps = prime_divisors(g.order());
  if (ps.size() != 2) {
    v.witness = "order has " + num(ps.size()) + " prime divisors";
    return v;
  }
  int s0 = l.sylow_index(ps[0]);
  int s1 = l.sylow_index(ps[1]);
  if (l.normal(s0) == l.normal(s1)) {
    v.witness = "expected exactly one normal Sylow subgroup";
    return v;
  }
  int sp = l.normal(s0) ? s0 : s1;  // the normal Sylow subgroup P
  int sq = l.normal(s0) ? s1 : s0;
  int p = l.normal(s0) ? ps[0] : ps[1];
  if (!l.cyclic(sq)) {
    v.witness = "complementing Sylow subgroup is not cyclic";
    return v;
  }
  int phi = l.frattini_of(sp);
  if (!l.normal(phi)) {
    v.witness = "Phi(P) is not normal in the whole group";
    return v;
  }
  for (int nn : l.normal_indices()) {
    if (nn != phi && nn != sp && l.contains(phi, nn) && l.contains(nn, sp)) {
      v.witness = "normal subgroup strictly between Phi(P) and P";
      return v;
    }
  }
  if (is_abelian_entry(l, sp)) {
    bool elem = true;
    l.mask(sp).for_each([&](int r) {
      if (r != g.id_rank() && g.elem_order(r) != p) elem = false;
    });
    if (!elem) {
      v.witness = "abelian P is not elementary abelian";
      return v;
    }
  }
  v.conclusion = Conclusion::Verified;
  v.witness = "P " + entry_desc(l, sp) + ", cyclic complement order " +
              num(l.order_of(sq));
  return v;
}

Verdict check_l05(const Analysis& a) {
  Verdict v{StatementId::L05};
  const Group& g = a.group();
  const SubgroupLattice& l = a.lattice();
  if (!a.q8_free()) {
    v.witness = "a section is the quaternion group";
    return v;
  }
  if (is_p_nilpotent(g, l, 2)) {
    v.witness = "already 2-nilpotent";
    return v;
  }
  for (int i = 0; i < l.size() - 1; ++i) {
    if (!a.entry_p_nilpotent(i, 2)) {
      v.witness = "proper " + entry_desc(l, i) + " is not 2-nilpotent";
      return v;
    }
  }
  v.hypothesis = Hypothesis::Satisfied;
  int s2 = l.sylow_index(2);
  bool elem = true;
  l.mask(s2).for_each([&](int r) {
    if (r != g.id_rank() && g.elem_order(r) != 2) elem = false;
  });
  v.conclusion = elem ? Conclusion::Verified : Conclusion::Violated;
  v.witness = "Sylow 2-subgroup " + entry_desc(l, s2);
  return v;
}

Verdict check_l06(const Analysis& a) {
  Verdict v{StatementId::L06};
  const Group& g = a.group();
  const SubgroupLattice& l = a.lattice();
  bool any = false;
  bool ok = true;
  std::string w;
  for (int p : prime_divisors(g.order())) {
    bool qualifies = true;
    for (int i = 0; i < l.size() && qualifies; ++i) {
      int o = l.order_of(i);
      if (o == 1 || !is_p_power(o, p)) continue;
      Subgroup hs = l.subgroup(i);
      int nn = normalizer(g, hs).order;
      int cc = centralizer(g, hs).order;
      if (!is_p_power(nn / cc, p)) qualifies = false;
    }
    if (!qualifies) continue;
    any = true;
    if (!w.empty()) w += "; ";
    w += "p=" + num(p);
    if (!is_p_nilpotent(g, l, p)) {
      ok = false;
      w += " but not " + num(p) + "-nilpotent";
      break;
    }
  }
  if (!any) {
    v.witness = g.order() == 1 ? "trivial group has no prime divisors"
                               : "no prime qualifies";
    return v;
  }
  v.hypothesis = Hypothesis::Satisfied;
  v.conclusion = ok ? Conclusion::Verified : Conclusion::Violated;
  v.witness = w;
  return v;
}

Verdict check_l07(const Analysis& a) {
  Verdict v{StatementId::L07};
  const Group& g = a.group();
  const SubgroupLattice& l = a.lattice();
  if (g.order() == 1) {
    v.witness = "trivial group";
    return v;
  }
  int p = prime_divisors(g.order()).front();
  int sp = l.sylow_index(p);
  if (!l.cyclic(sp)) {
    v.witness = "Sylow " + num(p) + "-subgroup is not cyclic";
    return v;
  }
  v.hypothesis = Hypothesis::Satisfied;
  bool ok = is_p_nilpotent(g, l, p);
  v.conclusion = ok ? Conclusion::Verified : Conclusion::Violated;
  v.witness = "smallest prime " + num(p) + ", cyclic " + entry_desc(l, sp);
  return v;
}

Verdict check_l08(const Analysis& a) {
  Verdict v{StatementId::L08};
  const Group& g = a.group();
  const SubgroupLattice& l = a.lattice();
  bool any = false;
  for (int i : l.normal_indices()) {
    int o = l.order_of(i);
    if (o == 1 || !is_prime_power(o)) continue;
    int p = prime_divisors(o)[0];
    int cc = centralizer(g, l.subgroup(i)).order;
    if (!is_p_power(g.order() / cc, p)) continue;
    if (!any) {
      any = true;
      v.hypothesis = Hypothesis::Satisfied;
      v.conclusion = Conclusion::Verified;
      v.witness = "first instance " + entry_desc(l, i);
    }
    if (!l.mask(i).subset_of(a.hypercenter_mask())) {
      v.conclusion = Conclusion::Violated;
      v.witness = entry_desc(l, i) + " escapes the hypercenter";
      return v;
    }
  }
  if (!any) v.witness = "no centrally bounded normal p-subgroup";
  return v;
}

Verdict check_l09(const Analysis& a) {
  Verdict v{StatementId::L09};
  const SubgroupLattice& l = a.lattice();
  for (int e : l.normal_indices()) {
    if (!l.mask(e).subset_of(a.u_hypercenter_mask())) continue;
    if (!a.quotient_supersolvable(e)) continue;
    v.hypothesis = Hypothesis::Satisfied;
    v.witness = "E = " + entry_desc(l, e);
    v.conclusion =
        a.supersolvable() ? Conclusion::Verified : Conclusion::Violated;
    return v;
  }
  v.witness = "no normal subgroup qualifies";
  return v;
}

Verdict check_l10(const Analysis& a) {
  Verdict v{StatementId::L10, Hypothesis::Satisfied, Conclusion::Verified,
            ""};
  const SubgroupLattice& l = a.lattice();
  int hits = 0;
  for (int e : l.normal_indices()) {
    if (!a.fstar_of(e).subset_of(a.u_hypercenter_mask())) continue;
    ++hits;
    if (!l.mask(e).subset_of(a.u_hypercenter_mask())) {
      v.conclusion = Conclusion::Violated;
      v.witness = entry_desc(l, e) +
                  " has F* in the U-hypercenter but escapes it itself";
      return v;
    }
  }
  v.witness = num(hits) + " qualifying normal subgroups";
  return v;
}

Verdict check_l11(const Analysis& a) {
  Verdict v{StatementId::L11};
  const Group& g = a.group();
  const SubgroupLattice& l = a.lattice();
  if (g.order() == 1 || !is_prime_power(g.order())) {
    v.witness = "not a nontrivial p-group";
    return v;
  }
  int p = prime_divisors(g.order())[0];
  int count = 0;
  for (int i = 0; i < l.size(); ++i)
    if (l.order_of(i) == p) ++count;
  if (count != 1) {
    v.witness = num(count) + " subgroups of order " + num(p);
    return v;
  }
  v.hypothesis = Hypothesis::Satisfied;
  bool ok = is_cyclic(g) || (p == 2 && is_generalized_quaternion(g));
  v.conclusion = ok ? Conclusion::Verified : Conclusion::Violated;
  v.witness = "unique subgroup of order " + num(p);
  return v;
}

Verdict check_only_trivial_level(const Analysis& a, StatementId id,
                                 int level) {
  Verdict v{id};
  const SubgroupLattice& l = a.lattice();
  const std::vector<int>& lvl = l.n_maximal(level);
  if (lvl.size() != 1 || lvl[0] != l.bottom()) {
    v.witness = "depth-" + num(level) +
                " subgroups are not exactly the trivial one";
    return v;
  }
  v.hypothesis = Hypothesis::Satisfied;
  int omega = prime_omega(a.group().order());
  bool ok = omega == level;
  v.conclusion = ok ? Conclusion::Verified : Conclusion::Violated;
  v.witness = "order has " + num(omega) + " prime factors with multiplicity";
  return v;
}

Verdict check_l14(const Analysis& a) {
  Verdict v{StatementId::L14};
  const Group& g = a.group();
  const SubgroupLattice& l = a.lattice();
  if (!a.solvable()) {
    v.witness = "not solvable";
    return v;
  }
  v.hypothesis = Hypothesis::Satisfied;
  v.conclusion = Conclusion::Verified;
  int count = 0;
  for (int m : l.maximal_subgroups_of(l.top())) {
    ++count;
    if (!is_prime_power(g.order() / l.order_of(m))) {
      v.conclusion = Conclusion::Violated;
      v.witness = entry_desc(l, m) + " has composite index";
      return v;
    }
  }
  v.witness = num(count) + " maximal subgroups checked";
  return v;
}

Verdict check_l15(const Analysis& a) {
  Verdict v{StatementId::L15};
  const Group& g = a.group();
  if (!is_q8(g)) {
    v.witness = "not the quaternion group";
    return v;
  }
  v.hypothesis = Hypothesis::Satisfied;
  Group aut = automorphism_group(g);
  bool ok = aut.order() == 24 && isomorphic(aut, ref_s4());
  v.conclusion = ok ? Conclusion::Verified : Conclusion::Violated;
  v.witness = "automorphism group has order " + num(aut.order());
  return v;
}

Verdict check_l16(const Analysis& a) {
  Verdict v{StatementId::L16};
  const Group& g = a.group();
  const SubgroupLattice& l = a.lattice();
  if (g.order() != 24) {
    v.witness = "order is not 24";
    return v;
  }
  if (!is_2_closed(g, l)) {
    v.witness = "Sylow 2-subgroup is not normal";
    return v;
  }
  int s2 = l.sylow_index(2);
  int invol = 0;
  l.mask(s2).for_each([&](int r) {
    if (g.elem_order(r) == 2) ++invol;
  });
  if (is_abelian_entry(l, s2) || invol != 1) {
    v.witness = "Sylow 2-subgroup is not the quaternion group";
    return v;
  }
  v.hypothesis = Hypothesis::Satisfied;
  bool q8c3 = isomorphic(g, ref_q8xc3());
  bool sl = !q8c3 && isomorphic(g, ref_sl23());
  v.conclusion =
      (q8c3 || sl) ? Conclusion::Verified : Conclusion::Violated;
  if (q8c3)
    v.witness = "isomorphic to Q8 x C3";
  else if (sl)
    v.witness = "isomorphic to SL(2,3)";
  else
    v.witness = "matches neither classification target";
  return v;
}

Verdict check_l17(const Analysis& a) {
  Verdict v{StatementId::L17};
  const SubgroupLattice& l = a.lattice();
  bool any = false;
  for (int i : l.normal_indices()) {
    int o = l.order_of(i);
    if (o == 1 || !is_prime_power(o)) continue;
    int p = prime_divisors(o)[0];
    int d = qualifying_order(a, i, p, /*q8_conditional=*/true);
    if (d == 0) continue;
    if (!any) {
      any = true;
      v.hypothesis = Hypothesis::Satisfied;
      v.conclusion = Conclusion::Verified;
      v.witness = "first instance " + entry_desc(l, i) + " with d=" + num(d);
    }
    if (!l.mask(i).subset_of(a.hypercenter_mask())) {
      v.conclusion = Conclusion::Violated;
      v.witness = entry_desc(l, i) + " qualifies with d=" + num(d) +
                  " but escapes the hypercenter";
      return v;
    }
  }
  if (!any) v.witness = "no normal p-subgroup qualifies";
  return v;
}

Verdict check_l18(const Analysis& a) {
  Verdict v{StatementId::L18};
  const Group& g = a.group();
  const SubgroupLattice& l = a.lattice();
  if (g.order() == 1 || !is_prime_power(g.order())) {
    v.witness = "not a nontrivial p-group";
    return v;
  }
  for (int i = 0; i < l.size(); ++i) {
    if (!a.icphi(i)) {
      v.witness = entry_desc(l, i) + " is not ICPhi";
      return v;
    }
  }
  if (prime_divisors(g.order())[0] == 2 && !a.q8_free()) {
    v.witness = "2-group with a quaternion section";
    return v;
  }
  v.hypothesis = Hypothesis::Satisfied;
  bool ok = is_abelian(g);
  v.conclusion = ok ? Conclusion::Verified : Conclusion::Violated;
  v.witness = "all " + num(l.size()) + " subgroups ICPhi";
  return v;
}

}  // namespace

const std::vector<StatementId>& all_statements() {
  static const std::vector<StatementId> ids = [] {
    std::vector<StatementId> v;
    for (const StatementInfo& s : kCatalogue) v.push_back(s.id);
    return v;
  }();
  return ids;
}

const char* to_string(StatementId s) {
  for (const StatementInfo& info : kCatalogue)
    if (info.id == s) return info.name;
  throw UsageError("to_string: unknown statement id");
}

std::optional<StatementId> statement_from_string(std::string_view name) {
  for (const StatementInfo& info : kCatalogue)
    if (name == info.name) return info.id;
  return std::nullopt;
}

const char* statement_summary(StatementId s) {
  for (const StatementInfo& info : kCatalogue)
    if (info.id == s) return info.summary;
  throw UsageError("statement_summary: unknown statement id");
}

const char* to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::Satisfied:
      return "satisfied";
    case Hypothesis::Vacuous:
      return "vacuous";
    case Hypothesis::NotSatisfied:
      return "not-satisfied";
  }
  throw UsageError("to_string: bad hypothesis value");
}

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Verified:
      return "verified";
    case Conclusion::Violated:
      return "violated";
    case Conclusion::NotEvaluated:
      return "not-evaluated";
  }
  throw UsageError("to_string: bad conclusion value");
}

bool is_icphi_subgroup(const Group& g, const Subgroup& h) {
  require(h.parent == &g, "is_icphi_subgroup: subgroup of a different group");
  Subgroup c = commutator_subgroup(g, h, full_subgroup(g));
  ElemMask meet = h.mask & c.mask;
  // Phi(H) from H's own lattice, independent of the ambient group.
  Group hg = as_group(h);
  SubgroupLattice hl(hg);
  ElemMask phi;
  hl.mask(hl.frattini_of(hl.top())).for_each([&](int r) {
    phi.set(g.rank_of(hg.element(r)));
  });
  return meet.subset_of(phi);
}

Verdict verify_statement(const Analysis& a, StatementId s) {
  try {
    switch (s) {
      case StatementId::T11:
        return check_t11(a);
      case StatementId::T12:
        return check_t12(a);
      case StatementId::T13:
        return check_t13(a);
      case StatementId::T14:
        return check_t14(a);
      case StatementId::T15:
        return check_t15(a);
      case StatementId::T16:
        return check_t16(a);
      case StatementId::T17:
        return check_maximal_level(a, StatementId::T17, 1);
      case StatementId::T18:
        return check_maximal_level(a, StatementId::T18, 2);
      case StatementId::T19:
        return check_maximal_level(a, StatementId::T19, 3);
      case StatementId::L01:
        return check_l01(a);
      case StatementId::L02:
        return check_l02(a);
      case StatementId::L03:
        return check_l03(a);
      case StatementId::L04:
        return check_l04(a);
      case StatementId::L05:
        return check_l05(a);
      case StatementId::L06:
        return check_l06(a);
      case StatementId::L07:
        return check_l07(a);
      case StatementId::L08:
        return check_l08(a);
      case StatementId::L09:
        return check_l09(a);
      case StatementId::L10:
        return check_l10(a);
      case StatementId::L11:
        return check_l11(a);
      case StatementId::L12:
        return check_only_trivial_level(a, StatementId::L12, 2);
      case StatementId::L13:
        return check_only_trivial_level(a, StatementId::L13, 3);
      case StatementId::L14:
        return check_l14(a);
      case StatementId::L15:
        return check_l15(a);
      case StatementId::L16:
        return check_l16(a);
      case StatementId::L17:
        return check_l17(a);
      case StatementId::L18:
        return check_l18(a);
    }
  } catch (const BudgetError& e) {
    Verdict v{s};
    v.witness = std::string("budget exceeded: ") + e.what();
    return v;
  }
  throw UsageError("verify_statement: unknown statement id");
}

std::vector<Verdict> verify_all(const Analysis& a) {
  std::vector<Verdict> out;
  out.reserve(all_statements().size());
  for (StatementId s : all_statements()) out.push_back(verify_statement(a, s));
  return out;
}

}  // namespace icphi
