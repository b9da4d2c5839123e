#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "coxrh/diagram.hpp"

namespace coxrh {

enum class DiagramFamily { Finite, Affine, Indefinite };

/// Catalog verdict for one connected diagram: which classification family it
/// falls in, and the catalog name ("A3", "~C2", "I2(7)", "INDEFINITE", ...).
struct ComponentType {
  DiagramFamily family;
  std::string name;
};

/// Exact pattern match of the connected diagram on J against the finite and
/// affine catalogs. I2(3), I2(4), I2(6) are canonicalized to A2, B2, G2.
ComponentType recognize_component(const CoxeterMatrix& m, GenSet j);

struct SubsetClass {
  bool spherical = false;
  bool irreducible = false;
  bool irreducible_affine = false;
  bool affine = false;
  bool euclidean = false;
  bool minimal_hyperbolic = false;
  std::vector<std::pair<GenSet, std::string>> matched_components;
};

SubsetClass classify_subset(const CoxeterMatrix& m, GenSet j);

/// Numeric Gram-matrix verdict; an oracle independent of the catalog matcher.
struct NumericVerdict {
  enum class Kind { PositiveDefinite, PositiveSemidefinite, Indefinite };
  Kind kind;
  int nullity = 0;  // for PositiveSemidefinite: eigenvalues within tolerance of 0
  double min_eigen = 0.0;
  double tolerance = 0.0;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// B[s][s] = 1, B[s][t] = -cos(pi/m(s,t)), with cos(pi/inf) = 1.
Eigen::MatrixXd cosine_matrix(const CoxeterMatrix& m, GenSet j);

NumericVerdict numeric_type(const CoxeterMatrix& m, GenSet j,
                            double tol = kDefaultTolerance);

/// Memoized per-mask subset predicates over one matrix. Used by the
/// enumeration-heavy decision procedures; lazily fills a flat table indexed
/// by subset mask.
class SubsetTable {
 public:
  explicit SubsetTable(const CoxeterMatrix& m);

  const CoxeterMatrix& matrix() const { return *m_; }

  bool spherical(GenSet j);
  bool irreducible_affine(GenSet j);
  bool affine(GenSet j);
  bool euclidean(GenSet j);
  bool connected(GenSet j);
  bool non_spherical(GenSet j) { return !spherical(j); }
  /// Non-spherical, non-affine, every proper subset spherical or irreducible
  /// affine (checked on the codimension-one subsets).
  bool minimal_hyperbolic(GenSet j);

 private:
  std::uint8_t flags(GenSet j);

  const CoxeterMatrix* m_;
  std::vector<std::uint8_t> table_;
};

std::vector<GenSet> spherical_subsets(const CoxeterMatrix& m);
std::vector<GenSet> irreducible_affine_subsets(const CoxeterMatrix& m,
                                               int min_rank);
std::vector<GenSet> maximal_euclidean_subsets(const CoxeterMatrix& m);

struct MinimalHyperbolicEnumeration {
  std::vector<GenSet> sets;
  /// Set when a minimal hyperbolic candidate of size > 10 shows up; the
  /// search prunes at size 11.
  bool oversize_candidate = false;
};

MinimalHyperbolicEnumeration minimal_hyperbolic_subsets(const CoxeterMatrix& m);

/// Canonical matrices for every catalog entry, used by the named-family
/// input syntax and the catalog round-trip tests.
namespace catalog {

CoxeterMatrix A(int n);
CoxeterMatrix B(int n);          // n >= 2
CoxeterMatrix D(int n);          // n >= 4
CoxeterMatrix E(int n);          // n in {6,7,8}
CoxeterMatrix F4();
CoxeterMatrix H(int n);          // n in {3,4}
CoxeterMatrix I2(int m);         // m >= 3 or kInfinity
CoxeterMatrix tilde_A(int n);    // n >= 1; ~A1 is the infinite dihedral pair
CoxeterMatrix tilde_B(int n);    // n >= 3
CoxeterMatrix tilde_C(int n);    // n >= 2
CoxeterMatrix tilde_D(int n);    // n >= 4
CoxeterMatrix tilde_E(int n);    // n in {6,7,8}
CoxeterMatrix tilde_F4();
CoxeterMatrix tilde_G2();

/// All (name, matrix) pairs of the two catalogs, ranks capped for the
/// infinite series.
std::vector<std::pair<std::string, CoxeterMatrix>> all_entries(int max_rank = 9);

}  // namespace catalog

/// The n-generator chain with m(i,i+1) = 4 and all other pairs commuting.
CoxeterMatrix chain4(int n);

}  // namespace coxrh
