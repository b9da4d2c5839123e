#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coxrh/diagram.hpp"

namespace coxrh {

/// Finite simple graph A over vertices {0,...,vertex_count-1}.
class SimpleGraph {
 public:
  SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edges,
              std::vector<std::string> vertex_names = {});

  static SimpleGraph cycle(int n);
  static SimpleGraph complete(int n);

  int vertex_count() const { return n_; }
  bool has_edge(int a, int b) const { return nbrs_[a].contains(b); }
  GenSet neighbors(int v) const { return nbrs_[v]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> names_;
  std::array<GenSet, CoxeterMatrix::kMaxRank> nbrs_{};
};

/// Right-angled Coxeter matrix of the graph: m = 2 on edges, infinity on
/// non-edges.
CoxeterMatrix from_graph(const SimpleGraph& a);

struct ConditionIiResult {
  bool holds = true;
  /// A non-triangle 3-subset whose common-neighbor set is not complete.
  std::optional<std::array<int, 3>> witness;
};

/// Graph form of the isolated-flats condition: every 3-subset that is not a
/// triangle has a complete common-neighbor subgraph.
ConditionIiResult condition_ii_graph(const SimpleGraph& a);

/// A join of pairwise-disjoint non-edges: every pair of members is an edge
/// except the listed pairs.
struct AffJoinSet {
  std::vector<std::pair<int, int>> pairs;
  GenSet members;
  bool maximal = false;
};

std::vector<AffJoinSet> enumerate_iaff(const SimpleGraph& a, int min_pairs = 2);

/// Renders the product-of-free-products shape of the subgroup generated by
/// the vertex groups of a join set: "(P1 * P2) x (P3 * P4)".
std::string gamma_structure(const SimpleGraph& a, const AffJoinSet& j,
                            const std::vector<std::string>& factor_names = {});

}  // namespace coxrh
