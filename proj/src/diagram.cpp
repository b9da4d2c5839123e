#include "coxrh/diagram.hpp"

#include <algorithm>

namespace coxrh {

CoxeterMatrix::CoxeterMatrix(int n, const std::vector<std::vector<int>>& entries,
                             std::vector<std::string> names)
    : n_(n) {
  if (n < 0 || n > kMaxRank)
    throw Error(ErrorCode::TooLarge,
                "rank " + std::to_string(n) + " exceeds the cap of " +
                    std::to_string(kMaxRank));
  if (static_cast<int>(entries.size()) != n)
    throw Error(ErrorCode::ValidationError, "entry table is not n x n");
  for (const auto& row : entries)
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::ValidationError, "entry table is not n x n");

  labels_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int m = entries[i][j];
      if (i == j) {
        if (m != 1)
          throw Error(ErrorCode::BadDiagonal,
                      "diagonal entry at (" + std::to_string(i) + "," +
                          std::to_string(i) + ") must be 1");
      } else {
        if (m != kInfinity && m < 2)
          throw Error(ErrorCode::BadOrder,
                      "order m(" + std::to_string(i) + "," + std::to_string(j) +
                          ") = " + std::to_string(m) + " is not >= 2 or infinity");
        if (entries[j][i] != m)
          throw Error(ErrorCode::NonSymmetric,
                      "m(" + std::to_string(i) + "," + std::to_string(j) +
                          ") differs from its transpose");
      }
      labels_[idx(i, j)] = m;
    }
  }

  if (names.empty()) {
    names_.reserve(n);
    for (int i = 0; i < n; ++i) names_.push_back("s" + std::to_string(i + 1));
  } else {
    if (static_cast<int>(names.size()) != n)
      throw Error(ErrorCode::ValidationError, "name list length differs from rank");
    names_ = std::move(names);
  }

  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (t == s) continue;
      int m = order(s, t);
      if (m == 2)
        comm_[s].add(t);
      else
        adj_[s].add(t);
    }
  }
}

void CoxeterMatrix::check_subset(GenSet j) const {
  if (!j.subset_of(all()))
    throw Error(ErrorCode::IndexOutOfRange,
                "subset " + j.to_string() + " is not within rank " +
                    std::to_string(n_));
}

CoxeterMatrix CoxeterMatrix::induced(GenSet j) const {
  check_subset(j);
  std::vector<int> verts(j.begin(), j.end());
  int k = static_cast<int>(verts.size());
  std::vector<std::vector<int>> entries(k, std::vector<int>(k));
  std::vector<std::string> names(k);
  for (int a = 0; a < k; ++a) {
    names[a] = names_[verts[a]];
    for (int b = 0; b < k; ++b) entries[a][b] = order(verts[a], verts[b]);
  }
  return CoxeterMatrix(k, entries, std::move(names));
}

std::vector<GenSet> CoxeterMatrix::components(GenSet j) const {
  check_subset(j);
  std::vector<GenSet> out;
  GenSet rest = j;
  while (!rest.empty()) {
    int seed = rest.lowest();
    GenSet comp;
    GenSet frontier = GenSet::of({seed});
    while (!frontier.empty()) {
      comp |= frontier;
      GenSet next;
      for (int s : frontier) next |= adj_[s] & j;
      frontier = next - comp;
    }
    out.push_back(comp);
    rest = rest - comp;
  }
  // seeds were taken in increasing order, so the list is already sorted by
  // smallest member
  return out;
}

bool CoxeterMatrix::connected(GenSet j) const {
  if (j.empty()) return true;
  int seed = j.lowest();
  GenSet comp;
  GenSet frontier = GenSet::of({seed});
  while (!frontier.empty()) {
    comp |= frontier;
    GenSet next;
    for (int s : frontier) next |= adj_[s] & j;
    frontier = next - comp;
  }
  return comp == j;
}

GenSet CoxeterMatrix::perp(GenSet j) const {
  check_subset(j);
  GenSet out = all() - j;
  for (int s : j) out &= comm_[s];
  return out;
}

bool CoxeterMatrix::commutes(GenSet j1, GenSet j2) const {
  check_subset(j1);
  check_subset(j2);
  if (j1.intersects(j2)) return false;
  for (int s : j1)
    if (!j2.subset_of(comm_[s])) return false;
  return true;
}

int CoxeterMatrix::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw Error(ErrorCode::ValidationError, "unknown generator name: " + name);
  return static_cast<int>(it - names_.begin());
}

}  // namespace coxrh
