#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "coxrh/diagram.hpp"
#include "coxrh/racg.hpp"

namespace coxrh {

struct GeneratorConfig {
  int n = 0;
  /// (order, weight) pairs; order may be kInfinity. Weights nonnegative,
  /// not all zero.
  std::vector<std::pair<int, double>> label_weights;
  std::uint64_t seed = 0;
};

GeneratorConfig uniform_config(int n, std::uint64_t seed,
                               std::vector<int> labels = {2, 3, 4, kInfinity});

/// Deterministic function of the seed; off-diagonal labels drawn
/// independently per unordered pair in row-major order.
CoxeterMatrix random_matrix(const GeneratorConfig& cfg);

/// Random simple graph; each pair is an edge independently with the given
/// probability. Deterministic function of the seed.
SimpleGraph random_graph(int n, std::uint64_t seed, double edge_prob = 0.5);

struct BruteForceDecision {
  bool exists_proper_family = false;
  /// Block unions of the unique finest valid partition of the maximal
  /// cores (the partition every other valid partition coarsens).
  std::vector<GenSet> coarsest;
};

/// Independent oracle for the decision procedure: enumerates every set
/// partition of the maximal cores and checks the per-block unions pairwise.
///
/// Reduction argument: any family satisfying (RH1) and (RH2) can be replaced
/// by the family of unions of the cores each class covers. Every core is
/// covered (RH1), two distinct classes cannot cover the same core (their
/// intersection would contain it, violating RH2), and shrinking classes only
/// shrinks pairwise intersections, so the shrunk family is a valid partition
/// of the cores with classes no larger than the originals. Hence a proper
/// family exists iff a valid all-proper partition exists.
BruteForceDecision brute_force_decide(const CoxeterMatrix& m);

std::uint64_t exhaustive_corpus_size(int n, int label_count);

/// Every matrix with off-diagonal labels from the list, in canonical
/// (odometer) order. Guarded at 10^7 instances.
void exhaustive_corpus(int n, const std::vector<int>& labels,
                       const std::function<void(const CoxeterMatrix&)>& fn);

}  // namespace coxrh
