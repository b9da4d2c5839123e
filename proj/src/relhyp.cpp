#include "coxrh/relhyp.hpp"

#include <algorithm>
#include <map>

namespace coxrh {

std::string to_string(RhStatus s) {
  switch (s) {
    case RhStatus::Hyperbolic: return "hyperbolic";
    case RhStatus::RelativelyHyperbolicProper: return "relatively-hyperbolic-proper";
    case RhStatus::NotRelativelyHyperbolic: return "not-relatively-hyperbolic";
  }
  return "?";
}

bool moussong_hyperbolic(const CoxeterMatrix& m) {
  SubsetTable table(m);
  const std::uint32_t full = m.all().mask();
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    GenSet j = GenSet::from_mask(mask);
    if (!table.connected(j)) continue;
    if (j.size() >= 3 && table.irreducible_affine(j)) return false;
    // Checking irreducible non-spherical J only is equivalent to checking
    // all non-spherical J: perp is antitone in J.
    if (!table.spherical(j) && !table.spherical(m.perp(j))) return false;
  }
  return true;
}

std::vector<Core> cores(const CoxeterMatrix& m) {
  SubsetTable table(m);
  std::map<std::uint32_t, Core> candidates;
  const std::uint32_t full = m.all().mask();
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    GenSet j = GenSet::from_mask(mask);
    if (!table.connected(j)) continue;
    if (j.size() >= 3 && table.irreducible_affine(j))
      candidates.try_emplace(mask, Core{j, Core::Kind::Affine, j, GenSet{}});
    if (!table.spherical(j)) {
      // Any irreducible non-spherical partner lies inside a non-spherical
      // component of perp(J); the component itself is the maximal choice.
      for (GenSet c : m.components(m.perp(j))) {
        if (table.spherical(c)) continue;
        GenSet u = j | c;
        candidates.try_emplace(u.mask(), Core{u, Core::Kind::Pair, j, c});
      }
    }
  }

  std::vector<Core> out;
  for (const auto& [mask, core] : candidates) {
    bool maximal = true;
    for (const auto& [mask2, other] : candidates) {
      if (mask2 != mask && core.members.subset_of(other.members)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(core);
  }
  return out;  // map iteration gives canonical (mask) order
}

VerifyReport verify_family(const CoxeterMatrix& m,
                           const std::vector<GenSet>& classes) {
  for (GenSet k : classes) m.check_subset(k);
  SubsetTable table(m);
  VerifyReport report;

  for (const Core& core : cores(m)) {
    Rh1Entry entry{core, std::nullopt};
    for (GenSet k : classes) {
      if (core.members.subset_of(k)) {
        entry.covering_class = k;
        break;
      }
    }
    if (!entry.covering_class) report.rh1 = false;
    report.coverage.push_back(std::move(entry));
  }

  for (std::size_t i = 0; i < classes.size() && report.rh2; ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (classes[i] == classes[j]) continue;
      GenSet inter = classes[i] & classes[j];
      if (!table.spherical(inter)) {
        report.rh2 = false;
        report.rh2_violation = Rh2Violation{classes[i], classes[j], inter};
        break;
      }
    }
  }
  return report;
}

std::vector<GenSet> merge_to_fixed_point(const CoxeterMatrix& m,
                                         std::vector<GenSet> classes,
                                         const MergePicker& pick) {
  SubsetTable table(m);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> mergeable;
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j)
        if (!table.spherical(classes[i] & classes[j]))
          mergeable.emplace_back(i, j);
    if (mergeable.empty()) break;
    auto [i, j] = mergeable[pick ? pick(mergeable.size()) : 0];
    classes[i] |= classes[j];
    classes.erase(classes.begin() + static_cast<std::ptrdiff_t>(j));
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  }

  std::vector<GenSet> out;
  for (GenSet k : classes) {
    bool contained = false;
    for (GenSet other : classes)
      if (other != k && k.subset_of(other)) contained = true;
    if (!contained) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PeripheralFamily minimal_family(const CoxeterMatrix& m) {
  std::vector<GenSet> classes;
  for (const Core& core : cores(m)) classes.push_back(core.members);
  PeripheralFamily family;
  family.classes = merge_to_fixed_point(m, std::move(classes));
  family.verification = verify_family(m, family.classes);
  return family;
}

Decision decide(const CoxeterMatrix& m) {
  Decision d;
  d.minimal_family = minimal_family(m);
  if (d.minimal_family.classes.empty()) {
    d.status = RhStatus::Hyperbolic;
    d.details = "no coverage obligations; the group is Gromov hyperbolic";
  } else if (d.minimal_family.contains(m.all())) {
    d.status = RhStatus::NotRelativelyHyperbolic;
    d.details =
        "the forced peripheral family contains the full generating set; no "
        "proper peripheral collection exists";
  } else {
    d.status = RhStatus::RelativelyHyperbolicProper;
    std::string classes;
    for (GenSet k : d.minimal_family.classes) {
      if (!classes.empty()) classes += ", ";
      classes += k.to_string();
    }
    d.details = "relatively hyperbolic with respect to the parabolic types " +
                classes;
  }
  return d;
}

PeripheralFamily maxparab(const CoxeterMatrix& m, int s0) {
  if (s0 < 0 || s0 >= m.rank())
    throw Error(ErrorCode::IndexOutOfRange, "generator index out of range");
  SubsetTable table(m);
  GenSet single = GenSet::of({s0});
  if (!table.spherical(m.perp(single)))
    throw Error(ErrorCode::HypothesisFailed,
                "{" + m.name(s0) + "}^perp is not spherical");

  std::vector<GenSet> classes;
  classes.push_back(m.all() - single);
  const std::uint32_t full = m.all().mask();
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    GenSet j = GenSet::from_mask(mask);
    if (!j.contains(s0) || !table.affine(j)) continue;
    bool rank_ok = true;
    for (GenSet c : m.components(j)) rank_ok &= c.size() >= 3;
    if (rank_ok) classes.push_back(j);
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  PeripheralFamily family;
  family.classes = std::move(classes);
  family.verification = verify_family(m, family.classes);
  return family;
}

IsolatedFlatsResult isolated_flats(const CoxeterMatrix& m) {
  SubsetTable table(m);
  IsolatedFlatsResult result;
  result.via = "minimal-hyperbolic-perps-spherical";
  result.holds = true;
  for (GenSet j : minimal_hyperbolic_subsets(m).sets) {
    if (!table.spherical(m.perp(j))) {
      result.holds = false;
      result.violating_subset = j;
      break;
    }
  }
  if (result.holds) {
    for (GenSet k : maximal_euclidean_subsets(m))
      if (!table.spherical(k)) result.family.classes.push_back(k);
  }
  return result;
}

LemmaAffEquivalence lemma_aff_equivalence(const CoxeterMatrix& m) {
  SubsetTable table(m);
  LemmaAffEquivalence eq{};

  VerifyReport report = verify_family(m, maximal_euclidean_subsets(m));
  eq.max_euclidean_family = report.rh1 && report.rh2;

  // For commuting J1, J2 the components of the union are the components of
  // the parts, so <J1 u J2> is of Euclidean type iff both parts are. The
  // quantifier over pairs therefore reduces to: no non-spherical
  // non-Euclidean J1 has a non-spherical perp (a non-spherical J2 inside
  // perp(J1) exists iff perp(J1) is non-spherical).
  eq.commuting_pairs_abelian = true;
  const std::uint32_t full = m.all().mask();
  for (std::uint32_t mask = 1; mask <= full && eq.commuting_pairs_abelian;
       ++mask) {
    GenSet j = GenSet::from_mask(mask);
    if (!table.spherical(j) && !table.euclidean(j) &&
        !table.spherical(m.perp(j)))
      eq.commuting_pairs_abelian = false;
  }

  eq.minimal_hyperbolic_perps = isolated_flats(m).holds;
  return eq;
}

}  // namespace coxrh
