#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coxrh/classify.hpp"
#include "coxrh/diagram.hpp"

namespace coxrh {

/// A forced coverage obligation: an irreducible affine set of rank >= 3, or
/// the union of a commuting pair of irreducible non-spherical sets.
struct Core {
  enum class Kind { Affine, Pair };
  GenSet members;
  Kind kind;
  GenSet part1;  // Affine: the set itself. Pair: first factor.
  GenSet part2;  // Pair: second factor; empty for Affine.
};

struct Rh1Entry {
  Core core;
  std::optional<GenSet> covering_class;  // empty iff the core is uncovered
};

struct Rh2Violation {
  GenSet class1;
  GenSet class2;
  GenSet intersection;
};

struct VerifyReport {
  bool rh1 = true;
  bool rh2 = true;
  std::vector<Rh1Entry> coverage;  // one entry per maximal core
  std::optional<Rh2Violation> rh2_violation;
};

struct PeripheralFamily {
  std::vector<GenSet> classes;
  std::optional<VerifyReport> verification;

  bool contains(GenSet k) const {
    for (GenSet c : classes)
      if (c == k) return true;
    return false;
  }
};

enum class RhStatus {
  Hyperbolic,
  RelativelyHyperbolicProper,
  NotRelativelyHyperbolic,
};

std::string to_string(RhStatus s);

struct Decision {
  RhStatus status;
  PeripheralFamily minimal_family;
  std::string details;
};

/// Gromov hyperbolicity: no irreducible affine subset of cardinality >= 3
/// and every irreducible non-spherical J has spherical J^perp.
bool moussong_hyperbolic(const CoxeterMatrix& m);

/// Inclusion-maximal coverage obligations in canonical (mask) order.
std::vector<Core> cores(const CoxeterMatrix& m);

/// Checks (RH1)/(RH2) for the family of types T.
VerifyReport verify_family(const CoxeterMatrix& m,
                           const std::vector<GenSet>& classes);

/// Picks which mergeable pair to merge next; receives the number of
/// candidate pairs and returns an index below it. Used to randomize the
/// merge schedule in the confluence tests.
using MergePicker = std::function<std::size_t(std::size_t)>;

/// Merge fixed point: repeatedly replace two members with non-spherical
/// intersection by their union, then drop members contained in others.
std::vector<GenSet> merge_to_fixed_point(const CoxeterMatrix& m,
                                         std::vector<GenSet> classes,
                                         const MergePicker& pick = {});

/// The canonical minimal peripheral family: merge fixed point of the
/// maximal cores. Satisfies RH2 by construction and RH1 by coverage.
PeripheralFamily minimal_family(const CoxeterMatrix& m);

Decision decide(const CoxeterMatrix& m);

/// { S \ {s0} } united with every affine subset containing s0 (components of
/// rank >= 3). Requires {s0}^perp spherical.
PeripheralFamily maxparab(const CoxeterMatrix& m, int s0);

struct IsolatedFlatsResult {
  bool holds = false;
  std::string via;  // condition tag
  PeripheralFamily family;
  std::optional<GenSet> violating_subset;  // minimal hyperbolic with non-spherical perp
};

IsolatedFlatsResult isolated_flats(const CoxeterMatrix& m);

struct LemmaAffEquivalence {
  bool max_euclidean_family;        // maximal Euclidean family passes RH1 and RH2
  bool commuting_pairs_abelian;     // commuting non-spherical pairs generate Euclidean type
  bool minimal_hyperbolic_perps;    // minimal hyperbolic perps all spherical
};

LemmaAffEquivalence lemma_aff_equivalence(const CoxeterMatrix& m);

}  // namespace coxrh
