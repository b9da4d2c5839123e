#include "coxrh/racg.hpp"

#include <algorithm>

namespace coxrh {

SimpleGraph::SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edges,
                         std::vector<std::string> vertex_names)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0 || n_ > CoxeterMatrix::kMaxRank)
    throw Error(ErrorCode::TooLarge,
                "vertex count " + std::to_string(n_) + " exceeds the cap of " +
                    std::to_string(CoxeterMatrix::kMaxRank));
  for (auto& [a, b] : edges_) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      throw Error(ErrorCode::IndexOutOfRange, "edge endpoint out of range");
    if (a == b) throw Error(ErrorCode::ValidationError, "loop edge");
    if (a > b) std::swap(a, b);
    if (nbrs_[a].contains(b))
      throw Error(ErrorCode::ValidationError, "duplicate edge");
    nbrs_[a].add(b);
    nbrs_[b].add(a);
  }
  std::sort(edges_.begin(), edges_.end());
  if (vertex_names.empty()) {
    names_.reserve(n_);
    for (int i = 0; i < n_; ++i) names_.push_back("v" + std::to_string(i + 1));
  } else {
    if (static_cast<int>(vertex_names.size()) != n_)
      throw Error(ErrorCode::ValidationError,
                  "vertex name list length differs from vertex count");
    names_ = std::move(vertex_names);
  }
}

SimpleGraph SimpleGraph::cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (n >= 3) edges.emplace_back(0, n - 1);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph SimpleGraph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return SimpleGraph(n, std::move(edges));
}

CoxeterMatrix from_graph(const SimpleGraph& a) {
  const int n = a.vertex_count();
  std::vector<std::vector<int>> entries(n, std::vector<int>(n, kInfinity));
  for (int i = 0; i < n; ++i) {
    entries[i][i] = 1;
    for (int j = 0; j < n; ++j)
      if (j != i && a.has_edge(i, j)) entries[i][j] = 2;
  }
  return CoxeterMatrix(n, entries, a.names());
}

ConditionIiResult condition_ii_graph(const SimpleGraph& a) {
  const int n = a.vertex_count();
  ConditionIiResult result;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      for (int z = y + 1; z < n; ++z) {
        if (a.has_edge(x, y) && a.has_edge(x, z) && a.has_edge(y, z))
          continue;  // triangle
        GenSet common = a.neighbors(x) & a.neighbors(y) & a.neighbors(z);
        for (int u : common) {
          for (int v : common) {
            if (v <= u) continue;
            if (!a.has_edge(u, v)) {
              result.holds = false;
              result.witness = {x, y, z};
              return result;
            }
          }
        }
      }
    }
  }
  return result;
}

std::vector<AffJoinSet> enumerate_iaff(const SimpleGraph& a, int min_pairs) {
  if (min_pairs < 1)
    throw Error(ErrorCode::ValidationError, "min_pairs must be >= 1");
  const int n = a.vertex_count();
  std::vector<AffJoinSet> out;

  // A qualifying member set induces the complement of a perfect matching:
  // check each vertex subset for exactly one non-neighbor inside the set.
  const std::uint32_t full = GenSet::full(n).mask();
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    GenSet u = GenSet::from_mask(mask);
    if (u.size() < 2 * min_pairs || u.size() % 2 != 0) continue;
    std::vector<std::pair<int, int>> pairs;
    bool ok = true;
    for (int v : u) {
      GenSet non = (u - a.neighbors(v));
      non.remove(v);
      if (non.size() != 1) {
        ok = false;
        break;
      }
      int w = non.lowest();
      if (v < w) pairs.emplace_back(v, w);
    }
    if (!ok || static_cast<int>(pairs.size()) < min_pairs) continue;
    out.push_back(AffJoinSet{std::move(pairs), u, false});
  }

  for (auto& js : out) {
    js.maximal = true;
    for (const auto& other : out)
      if (other.members != js.members && js.members.subset_of(other.members))
        js.maximal = false;
  }
  return out;
}

std::string gamma_structure(const SimpleGraph& a, const AffJoinSet& j,
                            const std::vector<std::string>& factor_names) {
  GenSet members;
  for (auto [x, y] : j.pairs) {
    if (x < 0 || x >= a.vertex_count() || y < 0 || y >= a.vertex_count())
      throw Error(ErrorCode::InvalidJoinSet, "pair endpoint out of range");
    if (a.has_edge(x, y))
      throw Error(ErrorCode::InvalidJoinSet,
                  "pair {" + std::to_string(x) + "," + std::to_string(y) +
                      "} is an edge");
    if (members.contains(x) || members.contains(y))
      throw Error(ErrorCode::InvalidJoinSet, "pairs are not disjoint");
    members.add(x);
    members.add(y);
  }
  if (members != j.members)
    throw Error(ErrorCode::InvalidJoinSet, "members differ from the pair union");
  for (int v : members)
    for (int w : members)
      if (v < w && !a.has_edge(v, w)) {
        bool is_pair = false;
        for (auto [x, y] : j.pairs) is_pair |= (x == v && y == w);
        if (!is_pair)
          throw Error(ErrorCode::InvalidJoinSet,
                      "cross pair {" + std::to_string(v) + "," +
                          std::to_string(w) + "} is not an edge");
      }

  auto factor = [&](int v) {
    if (v < static_cast<int>(factor_names.size())) return factor_names[v];
    return "P" + std::to_string(v + 1);
  };
  std::string out;
  for (auto [x, y] : j.pairs) {
    if (!out.empty()) out += " × ";
    out += "(" + factor(x) + " * " + factor(y) + ")";
  }
  return out;
}

}  // namespace coxrh
