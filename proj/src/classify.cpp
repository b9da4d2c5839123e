#include "coxrh/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

namespace coxrh {

namespace {

ComponentType finite(std::string name) {
  return {DiagramFamily::Finite, std::move(name)};
}
ComponentType affine(std::string name) {
  return {DiagramFamily::Affine, std::move(name)};
}
ComponentType indefinite() { return {DiagramFamily::Indefinite, "INDEFINITE"}; }

std::string dihedral_name(int m) {
  switch (m) {
    case 3: return "A2";
    case 4: return "B2";
    case 6: return "G2";
    default: return "I2(" + std::to_string(m) + ")";
  }
}

}  // namespace

ComponentType recognize_component(const CoxeterMatrix& m, GenSet j) {
  const int k = j.size();
  if (k == 0) throw Error(ErrorCode::EmptySubset, "empty component");
  if (k == 1) return finite("A1");

  std::vector<int> verts(j.begin(), j.end());
  if (k == 2) {
    int o = m.order(verts[0], verts[1]);
    if (o == 2) throw Error(ErrorCode::ValidationError, "component not connected");
    if (o == kInfinity) return affine("~A1");
    return finite(dihedral_name(o));
  }

  // Rank >= 3: no catalog entry carries an infinite label.
  int edge_count = 0;
  std::vector<int> degree(k, 0);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      int o = m.order(verts[a], verts[b]);
      if (o == 2) continue;
      if (o == kInfinity) return indefinite();
      ++edge_count;
      ++degree[a];
      ++degree[b];
    }
  }

  auto label = [&](int a, int b) { return m.order(verts[a], verts[b]); };

  if (edge_count > k) return indefinite();

  if (edge_count == k) {
    // Unicyclic: the only catalog entry is the all-3 cycle ~A_{k-1}.
    for (int a = 0; a < k; ++a) {
      if (degree[a] != 2) return indefinite();
      for (int b = a + 1; b < k; ++b)
        if (label(a, b) != 2 && label(a, b) != 3) return indefinite();
    }
    return affine("~A" + std::to_string(k - 1));
  }

  // Tree from here on (connected with k-1 edges).
  int max_degree = *std::max_element(degree.begin(), degree.end());

  auto all_labels_3 = [&] {
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (label(a, b) != 2 && label(a, b) != 3) return false;
    return true;
  };

  if (max_degree >= 4) {
    // ~D4 is the 4-star; nothing else in the catalogs has degree >= 4.
    if (k == 5 && max_degree == 4 && all_labels_3()) return affine("~D4");
    return indefinite();
  }

  std::vector<int> branch;
  for (int a = 0; a < k; ++a)
    if (degree[a] == 3) branch.push_back(a);

  auto neighbors = [&](int a) {
    std::vector<int> out;
    for (int b = 0; b < k; ++b)
      if (b != a && label(a, b) != 2) out.push_back(b);
    return out;
  };

  if (branch.empty()) {
    // Path: read the label sequence from one end.
    int end = -1;
    for (int a = 0; a < k && end < 0; ++a)
      if (degree[a] == 1) end = a;
    std::vector<int> seq;
    int prev = -1, cur = end;
    while (true) {
      auto nb = neighbors(cur);
      int next = -1;
      for (int b : nb)
        if (b != prev) next = b;
      if (next < 0) break;
      seq.push_back(label(cur, next));
      prev = cur;
      cur = next;
    }
    std::vector<int> rev(seq.rbegin(), seq.rend());
    auto is = [&](const std::vector<int>& p) { return seq == p || rev == p; };

    std::vector<int> p(k - 1, 3);
    if (is(p)) return finite("A" + std::to_string(k));
    p.assign(k - 1, 3);
    p[0] = 4;
    if (is(p)) return finite("B" + std::to_string(k));
    p.assign(k - 1, 3);
    p[0] = p[k - 2] = 4;
    if (is(p)) return affine("~C" + std::to_string(k - 1));
    if (k == 4 && is({3, 4, 3})) return finite("F4");
    if (k == 5 && is({3, 3, 4, 3})) return affine("~F4");
    if (k == 3 && is({5, 3})) return finite("H3");
    if (k == 4 && is({5, 3, 3})) return finite("H4");
    if (k == 3 && is({6, 3})) return affine("~G2");
    return indefinite();
  }

  if (branch.size() == 1) {
    // Single fork: walk the three arms outward and record their labels.
    int center = branch[0];
    struct Arm {
      std::vector<int> labels;  // from center outward
    };
    std::vector<Arm> arms;
    for (int first : neighbors(center)) {
      Arm arm;
      int prev = center, cur = first;
      arm.labels.push_back(label(center, first));
      while (true) {
        auto nb = neighbors(cur);
        int next = -1;
        for (int b : nb)
          if (b != prev) next = b;
        if (next < 0) break;
        arm.labels.push_back(label(cur, next));
        prev = cur;
        cur = next;
      }
      arms.push_back(std::move(arm));
    }
    std::sort(arms.begin(), arms.end(), [](const Arm& x, const Arm& y) {
      return x.labels.size() < y.labels.size();
    });
    const auto l1 = arms[0].labels.size(), l2 = arms[1].labels.size(),
               l3 = arms[2].labels.size();

    int fours = 0, others = 0;
    for (const auto& arm : arms)
      for (int lab : arm.labels) {
        if (lab == 4) ++fours;
        else if (lab != 3) ++others;
      }
    if (others > 0) return indefinite();

    if (fours == 0) {
      if (l1 == 1 && l2 == 1) return finite("D" + std::to_string(k));
      if (l1 == 1 && l2 == 2 && l3 == 2) return finite("E6");
      if (l1 == 1 && l2 == 2 && l3 == 3) return finite("E7");
      if (l1 == 1 && l2 == 2 && l3 == 4) return finite("E8");
      if (l1 == 2 && l2 == 2 && l3 == 2) return affine("~E6");
      if (l1 == 1 && l2 == 3 && l3 == 3) return affine("~E7");
      if (l1 == 1 && l2 == 2 && l3 == 5) return affine("~E8");
      return indefinite();
    }
    if (fours == 1) {
      // ~B_{k-1}: arms (1,1,c) with the single 4 on the outermost edge of
      // the arm carrying it; the other two arms are single label-3 edges.
      int four_arm = -1;
      for (int i = 0; i < 3; ++i)
        if (arms[i].labels.back() == 4) four_arm = i;
      if (four_arm >= 0) {
        bool others_ok = true;
        for (int i = 0; i < 3; ++i)
          if (i != four_arm)
            others_ok &= arms[i].labels.size() == 1 && arms[i].labels[0] == 3;
        if (others_ok) return affine("~B" + std::to_string(k - 1));
      }
      return indefinite();
    }
    return indefinite();
  }

  if (branch.size() == 2) {
    // ~D_{k-1}: two forks, two leaves on each, all labels 3.
    if (!all_labels_3()) return indefinite();
    for (int c : branch) {
      int leaf_neighbors = 0;
      for (int b : neighbors(c))
        if (degree[b] == 1) ++leaf_neighbors;
      if (leaf_neighbors != 2) return indefinite();
    }
    return affine("~D" + std::to_string(k - 1));
  }

  return indefinite();
}

SubsetClass classify_subset(const CoxeterMatrix& m, GenSet j) {
  m.check_subset(j);
  SubsetClass c;
  auto comps = m.components(j);
  bool all_finite = true, all_affine = true, all_euclidean = true;
  for (GenSet comp : comps) {
    ComponentType t = recognize_component(m, comp);
    c.matched_components.emplace_back(comp, t.name);
    all_finite &= t.family == DiagramFamily::Finite;
    all_affine &= t.family == DiagramFamily::Affine;
    all_euclidean &= t.family != DiagramFamily::Indefinite;
  }
  c.irreducible = comps.size() == 1;
  c.spherical = all_finite;  // vacuously true for the empty set
  c.affine = !comps.empty() && all_affine;
  c.irreducible_affine = c.irreducible && c.affine;
  c.euclidean = all_euclidean;

  if (!c.spherical && !c.affine) {
    bool minimal = true;
    for (int s : j) {
      GenSet sub = j;
      sub.remove(s);
      SubsetClass subc;
      // codimension-one check suffices: subsets of spherical sets are
      // spherical and proper subsets of irreducible affine sets are spherical
      auto sub_comps = m.components(sub);
      bool sub_finite = true;
      for (GenSet sc : sub_comps)
        sub_finite &= recognize_component(m, sc).family == DiagramFamily::Finite;
      bool sub_irr_affine =
          sub_comps.size() == 1 &&
          recognize_component(m, sub_comps[0]).family == DiagramFamily::Affine;
      if (!sub_finite && !sub_irr_affine) {
        minimal = false;
        break;
      }
    }
    c.minimal_hyperbolic = minimal;
  }
  return c;
}

Eigen::MatrixXd cosine_matrix(const CoxeterMatrix& m, GenSet j) {
  m.check_subset(j);
  std::vector<int> verts(j.begin(), j.end());
  const int k = static_cast<int>(verts.size());
  Eigen::MatrixXd b(k, k);
  for (int a = 0; a < k; ++a) {
    for (int c = 0; c < k; ++c) {
      if (a == c) {
        b(a, c) = 1.0;
        continue;
      }
      int o = m.order(verts[a], verts[c]);
      if (o == kInfinity)
        b(a, c) = -1.0;
      else if (o == 2)
        b(a, c) = 0.0;
      else
        b(a, c) = -std::cos(std::numbers::pi / o);
    }
  }
  return b;
}

NumericVerdict numeric_type(const CoxeterMatrix& m, GenSet j, double tol) {
  if (j.empty()) throw Error(ErrorCode::EmptySubset, "numeric_type on empty subset");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cosine_matrix(m, j));
  const auto& ev = solver.eigenvalues();
  NumericVerdict v;
  v.tolerance = tol;
  v.min_eigen = ev(0);
  int nullity = 0;
  bool negative = false;
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol) negative = true;
    else if (ev(i) <= tol) ++nullity;
  }
  if (negative) {
    v.kind = NumericVerdict::Kind::Indefinite;
  } else if (nullity > 0) {
    v.kind = NumericVerdict::Kind::PositiveSemidefinite;
    v.nullity = nullity;
  } else {
    v.kind = NumericVerdict::Kind::PositiveDefinite;
  }
  return v;
}

namespace {
constexpr std::uint8_t kComputed = 1;
constexpr std::uint8_t kSpherical = 2;
constexpr std::uint8_t kIrrAffine = 4;
constexpr std::uint8_t kConnected = 8;
constexpr std::uint8_t kEuclidean = 16;
constexpr std::uint8_t kAffine = 32;
}  // namespace

SubsetTable::SubsetTable(const CoxeterMatrix& m) : m_(&m) {
  table_.assign(std::size_t{1} << m.rank(), 0);
}

std::uint8_t SubsetTable::flags(GenSet j) {
  std::uint8_t& f = table_[j.mask()];
  if (f & kComputed) return f;
  std::uint8_t v = kComputed;
  auto comps = m_->components(j);
  bool all_finite = true, all_affine = true, all_euclidean = true;
  for (GenSet comp : comps) {
    switch (recognize_component(*m_, comp).family) {
      case DiagramFamily::Finite:
        all_affine = false;
        break;
      case DiagramFamily::Affine:
        all_finite = false;
        break;
      case DiagramFamily::Indefinite:
        all_finite = all_affine = all_euclidean = false;
        break;
    }
  }
  if (all_finite) v |= kSpherical;
  if (!comps.empty() && all_affine) v |= kAffine;
  if (comps.size() == 1 && all_affine) v |= kIrrAffine;
  if (comps.size() == 1) v |= kConnected;
  if (all_euclidean) v |= kEuclidean;
  f = v;
  return v;
}

bool SubsetTable::spherical(GenSet j) { return flags(j) & kSpherical; }
bool SubsetTable::irreducible_affine(GenSet j) { return flags(j) & kIrrAffine; }
bool SubsetTable::affine(GenSet j) { return flags(j) & kAffine; }
bool SubsetTable::euclidean(GenSet j) { return flags(j) & kEuclidean; }
bool SubsetTable::connected(GenSet j) { return flags(j) & kConnected; }

bool SubsetTable::minimal_hyperbolic(GenSet j) {
  if (j.size() < 2) return false;
  std::uint8_t f = flags(j);
  if ((f & kSpherical) || (f & kAffine)) return false;
  for (int s : j) {
    GenSet sub = j;
    sub.remove(s);
    std::uint8_t sf = flags(sub);
    if (!(sf & kSpherical) && !(sf & kIrrAffine)) return false;
  }
  return true;
}

std::vector<GenSet> spherical_subsets(const CoxeterMatrix& m) {
  SubsetTable table(m);
  std::vector<GenSet> out;
  const std::uint32_t full = m.all().mask();
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    GenSet j = GenSet::from_mask(mask);
    if (table.spherical(j)) out.push_back(j);
  }
  return out;
}

std::vector<GenSet> irreducible_affine_subsets(const CoxeterMatrix& m,
                                               int min_rank) {
  SubsetTable table(m);
  std::vector<GenSet> out;
  const std::uint32_t full = m.all().mask();
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    GenSet j = GenSet::from_mask(mask);
    if (j.size() >= min_rank && table.irreducible_affine(j)) out.push_back(j);
  }
  return out;
}

std::vector<GenSet> maximal_euclidean_subsets(const CoxeterMatrix& m) {
  SubsetTable table(m);
  std::vector<GenSet> out;
  const GenSet all = m.all();
  const std::uint32_t full = all.mask();
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    GenSet j = GenSet::from_mask(mask);
    if (!table.euclidean(j)) continue;
    bool maximal = true;
    for (int s : all - j) {
      GenSet bigger = j;
      bigger.add(s);
      if (table.euclidean(bigger)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(j);
  }
  return out;
}

MinimalHyperbolicEnumeration minimal_hyperbolic_subsets(const CoxeterMatrix& m) {
  SubsetTable table(m);
  MinimalHyperbolicEnumeration out;
  const std::uint32_t full = m.all().mask();
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    GenSet j = GenSet::from_mask(mask);
    int size = j.size();
    if (size > 11) continue;  // pruned; candidates above 10 only raise the flag
    if (!table.minimal_hyperbolic(j)) continue;
    if (size > 10)
      out.oversize_candidate = true;
    else
      out.sets.push_back(j);
  }
  return out;
}

namespace catalog {

namespace {

CoxeterMatrix from_edges(int n, const std::vector<std::tuple<int, int, int>>& edges) {
  std::vector<std::vector<int>> entries(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) entries[i][i] = 1;
  for (auto [a, b, lab] : edges) {
    entries[a][b] = lab;
    entries[b][a] = lab;
  }
  return CoxeterMatrix(n, entries);
}

std::vector<std::tuple<int, int, int>> path_edges(int n, int label_first = 3,
                                                  int label_last = 3) {
  std::vector<std::tuple<int, int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) {
    int lab = 3;
    if (i == 0) lab = label_first;
    if (i + 2 == n) lab = (i == 0) ? label_first : label_last;
    edges.emplace_back(i, i + 1, lab);
  }
  return edges;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorCode::ValidationError, what);
}

}  // namespace

CoxeterMatrix A(int n) {
  require(n >= 1, "A_n needs n >= 1");
  return from_edges(n, path_edges(n));
}

CoxeterMatrix B(int n) {
  require(n >= 2, "B_n needs n >= 2");
  return from_edges(n, path_edges(n, 4, 3));
}

CoxeterMatrix D(int n) {
  require(n >= 4, "D_n needs n >= 4");
  std::vector<std::tuple<int, int, int>> edges;
  for (int i = 0; i + 1 < n - 2; ++i) edges.emplace_back(i, i + 1, 3);
  edges.emplace_back(n - 3, n - 2, 3);
  edges.emplace_back(n - 3, n - 1, 3);
  return from_edges(n, edges);
}

CoxeterMatrix E(int n) {
  require(n >= 6 && n <= 8, "E_n needs n in {6,7,8}");
  auto edges = path_edges(n - 1);
  edges.emplace_back(2, n - 1, 3);
  return from_edges(n, edges);
}

CoxeterMatrix F4() { return from_edges(4, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}}); }

CoxeterMatrix H(int n) {
  require(n == 3 || n == 4, "H_n needs n in {3,4}");
  auto edges = path_edges(n);
  std::get<2>(edges[0]) = 5;
  return from_edges(n, edges);
}

CoxeterMatrix I2(int m) {
  require(m == kInfinity || m >= 3, "I2(m) needs m >= 3 or infinity");
  return from_edges(2, {{0, 1, m}});
}

CoxeterMatrix tilde_A(int n) {
  require(n >= 1, "~A_n needs n >= 1");
  if (n == 1) return I2(kInfinity);
  std::vector<std::tuple<int, int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, i + 1, 3);
  edges.emplace_back(0, n, 3);
  return from_edges(n + 1, edges);
}

CoxeterMatrix tilde_B(int n) {
  require(n >= 3, "~B_n needs n >= 3");
  std::vector<std::tuple<int, int, int>> edges = {{0, 1, 3}, {0, 2, 3}};
  int prev = 0;
  for (int v = 3; v <= n; ++v) {
    edges.emplace_back(prev, v, v == n ? 4 : 3);
    prev = v;
  }
  return from_edges(n + 1, edges);
}

CoxeterMatrix tilde_C(int n) {
  require(n >= 2, "~C_n needs n >= 2");
  return from_edges(n + 1, path_edges(n + 1, 4, 4));
}

CoxeterMatrix tilde_D(int n) {
  require(n >= 4, "~D_n needs n >= 4");
  if (n == 4)
    return from_edges(5, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {0, 4, 3}});
  std::vector<std::tuple<int, int, int>> edges = {
      {0, 1, 3}, {0, 2, 3}, {3, 4, 3}, {3, 5, 3}};
  int prev = 0;
  for (int v = 6; v <= n; ++v) {
    edges.emplace_back(prev, v, 3);
    prev = v;
  }
  edges.emplace_back(prev, 3, 3);
  return from_edges(n + 1, edges);
}

CoxeterMatrix tilde_E(int n) {
  require(n >= 6 && n <= 8, "~E_n needs n in {6,7,8}");
  std::vector<std::tuple<int, int, int>> edges;
  auto add_arm = [&](int first, int length) {
    int prev = 0;
    for (int i = 0; i < length; ++i) {
      edges.emplace_back(prev, first + i, 3);
      prev = first + i;
    }
  };
  if (n == 6) {
    add_arm(1, 2);
    add_arm(3, 2);
    add_arm(5, 2);
  } else if (n == 7) {
    add_arm(1, 1);
    add_arm(2, 3);
    add_arm(5, 3);
  } else {
    add_arm(1, 1);
    add_arm(2, 2);
    add_arm(4, 5);
  }
  return from_edges(n + 1, edges);
}

CoxeterMatrix tilde_F4() {
  return from_edges(5, {{0, 1, 3}, {1, 2, 3}, {2, 3, 4}, {3, 4, 3}});
}

CoxeterMatrix tilde_G2() { return from_edges(3, {{0, 1, 6}, {1, 2, 3}}); }

std::vector<std::pair<std::string, CoxeterMatrix>> all_entries(int max_rank) {
  std::vector<std::pair<std::string, CoxeterMatrix>> out;
  auto add = [&](const std::string& name, CoxeterMatrix m) {
    out.emplace_back(name, std::move(m));
  };
  for (int n = 1; n <= max_rank; ++n) add("A" + std::to_string(n), A(n));
  for (int n = 2; n <= max_rank; ++n) add("B" + std::to_string(n), B(n));
  for (int n = 4; n <= max_rank; ++n) add("D" + std::to_string(n), D(n));
  for (int n = 6; n <= std::min(8, max_rank); ++n)
    add("E" + std::to_string(n), E(n));
  if (max_rank >= 4) add("F4", F4());
  if (max_rank >= 3) add("H3", H(3));
  if (max_rank >= 4) add("H4", H(4));
  add("G2", I2(6));
  for (int m : {5, 7, 8, 11}) add("I2(" + std::to_string(m) + ")", I2(m));
  for (int n = 1; n + 1 <= max_rank; ++n)
    add("~A" + std::to_string(n), tilde_A(n));
  for (int n = 3; n + 1 <= max_rank; ++n)
    add("~B" + std::to_string(n), tilde_B(n));
  for (int n = 2; n + 1 <= max_rank; ++n)
    add("~C" + std::to_string(n), tilde_C(n));
  for (int n = 4; n + 1 <= max_rank; ++n)
    add("~D" + std::to_string(n), tilde_D(n));
  for (int n = 6; n <= 8 && n + 1 <= max_rank; ++n)
    add("~E" + std::to_string(n), tilde_E(n));
  if (max_rank >= 5) add("~F4", tilde_F4());
  if (max_rank >= 3) add("~G2", tilde_G2());
  return out;
}

}  // namespace catalog

CoxeterMatrix chain4(int n) {
  std::vector<std::vector<int>> entries(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) entries[i][i] = 1;
  for (int i = 0; i + 1 < n; ++i) {
    entries[i][i + 1] = 4;
    entries[i + 1][i] = 4;
  }
  return CoxeterMatrix(n, entries);
}

}  // namespace coxrh
