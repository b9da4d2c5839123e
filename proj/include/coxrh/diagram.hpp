#pragma once

#include <array>
#include <string>
#include <vector>

#include "coxrh/errors.hpp"
#include "coxrh/genset.hpp"

namespace coxrh {

/// Order m(s,t) = infinity is encoded as 0; every finite order is >= 2
/// off-diagonal and exactly 1 on the diagonal.
inline constexpr int kInfinity = 0;

inline bool order_is_finite(int m) { return m != kInfinity; }

/// A finite Coxeter system (W,S) given by its matrix of orders m(s,t).
/// Immutable after construction; rank is capped at 24 so that subset
/// enumeration fits in machine-word bit sets.
class CoxeterMatrix {
 public:
  static constexpr int kMaxRank = 24;

  CoxeterMatrix(int n, const std::vector<std::vector<int>>& entries,
                std::vector<std::string> names = {});

  int rank() const { return n_; }
  int order(int i, int j) const { return labels_[idx(i, j)]; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  GenSet all() const { return GenSet::full(n_); }

  /// Generators t != s with m(s,t) >= 3 or m(s,t) = infinity (diagram edges).
  GenSet adjacent(int s) const { return adj_[s]; }
  /// Generators t != s with m(s,t) = 2.
  GenSet commuting(int s) const { return comm_[s]; }

  /// Restriction of the system to J, generators relabeled in increasing order.
  CoxeterMatrix induced(GenSet j) const;

  /// Connected components of the diagram restricted to J, ordered by
  /// smallest member.
  std::vector<GenSet> components(GenSet j) const;

  bool connected(GenSet j) const;

  /// J^perp: generators outside J commuting with every element of J.
  GenSet perp(GenSet j) const;

  /// True iff J1 and J2 are disjoint and m(s,t) = 2 across the two sets.
  bool commutes(GenSet j1, GenSet j2) const;

  /// Resolve a generator name to its index.
  int index_of(const std::string& name) const;

  void check_subset(GenSet j) const;

  bool operator==(const CoxeterMatrix& o) const {
    return n_ == o.n_ && labels_ == o.labels_;
  }

 private:
  int idx(int i, int j) const { return i * n_ + j; }

  int n_;
  std::vector<int> labels_;
  std::vector<std::string> names_;
  std::array<GenSet, kMaxRank> adj_{};
  std::array<GenSet, kMaxRank> comm_{};
};

}  // namespace coxrh
