#pragma once

#include <vector>

#include "pseudomarket/errors.hpp"
#include "pseudomarket/rational.hpp"

namespace pseudomarket {

using Matrix = std::vector<std::vector<Rational>>;

enum class UtilityTag { Binary, BiValued, General };

/// Per-agent two-level structure of a dichotomous utility function.
/// For Binary instances alpha = 1 and beta = 0 throughout.
struct UtilityClass {
  UtilityTag tag = UtilityTag::General;
  std::vector<Rational> alpha;  // high value per agent (row maximum)
  std::vector<Rational> beta;   // low value per agent (0 when the row is constant)
};

/// D_i: the items each agent values at her row maximum. Sorted ascending.
struct LikedSets {
  std::vector<std::vector<int>> items;

  bool operator==(const LikedSets&) const = default;
  int agents() const { return static_cast<int>(items.size()); }
};

/// An assignment problem: n agents, m items, exact-rational utility matrix.
///
/// `validate` enforces the standing assumption (no zero row, no zero column,
/// no negative entries) and is the only entry point for external data.
/// Internal constructions (binary reductions, liked-set enumerations,
/// misreports) go through `unchecked`/`from_liked_sets` and may carry zero
/// columns; solvers treat such items as leftovers.
class Instance {
 public:
  static Instance validate(Matrix utilities);
  static Instance unchecked(Matrix utilities);
  /// Binary instance with u[i][j] = 1 iff j in liked[i]. Rows must be nonempty.
  static Instance from_liked_sets(int items, const std::vector<std::vector<int>>& liked);

  int agents() const { return n_; }
  int items() const { return m_; }
  const Matrix& utilities() const { return u_; }
  const Rational& utility(int agent, int item) const { return u_[agent][item]; }
  const UtilityClass& utility_class() const { return class_; }
  bool dichotomous() const { return class_.tag != UtilityTag::General; }
  bool binary() const { return class_.tag == UtilityTag::Binary; }
  const LikedSets& liked() const { return liked_; }

  bool operator==(const Instance& o) const { return u_ == o.u_; }

 private:
  Instance(Matrix u, UtilityClass cls, LikedSets liked);

  Matrix u_;
  int n_ = 0;
  int m_ = 0;
  UtilityClass class_;
  LikedSets liked_;
};

/// n x m matrix of exact rationals with every column summing to exactly 1.
/// `balanced` records whether every row also sums to 1.
struct FractionalAssignment {
  Matrix x;
  bool balanced = false;

  /// Validates entries in [0,1] and unit column sums; computes `balanced`.
  static FractionalAssignment from_matrix(Matrix m);

  int agents() const { return static_cast<int>(x.size()); }
  int items() const { return x.empty() ? 0 : static_cast<int>(x.front().size()); }
  std::vector<Rational> row_sums() const;

  bool operator==(const FractionalAssignment& o) const { return x == o.x; }
};

/// Maps each agent's high value to 1 and low value to 0. Binary instances are
/// returned unchanged. Throws NotDichotomous for general utilities.
Instance binary_reduce(const Instance& inst);

/// Component i equals sum_j x[i][j] * u[i][j].
std::vector<Rational> utility_vector(const Instance& inst, const FractionalAssignment& x);

/// u'[i][j] = a[i] * u[i][j] + b[i] with a[i] > 0; the result must be nonnegative.
Instance scale_shift(const Instance& inst, const std::vector<Rational>& a,
                     const std::vector<Rational>& b);

}  // namespace pseudomarket
