#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "permlp/rational.hpp"

namespace permlp {

enum class Relation { Equal, GreaterEqual };

// One linear (in)equality over the entries of an n-by-n matrix variable.
// Coefficients are kept in canonical sparse form: no zero entries, indices
// ordered by (row, col).
struct LinearConstraint {
  std::map<std::pair<int, int>, Rational> coeffs;
  Relation rel = Relation::Equal;
  Rational rhs = 0;
  std::string label;

  // Drops zero coefficients.
  void canonicalize();

  Rational evaluate(const RationalMatrix& x) const;
  bool holds(const RationalMatrix& x) const;

  bool trivial() const { return coeffs.empty(); }

  // Scale-normalized rendering used for structural equality: equalities are
  // scaled so the leading coefficient is 1 (this also identifies l and -l);
  // inequalities are scaled by the absolute value of the leading coefficient.
  std::string normalized_key() const;
};

struct ConstraintSet {
  int n = 0;
  std::vector<LinearConstraint> constraints;
};

// L_D: n row sums = 1, n column sums = 1, n^2 positivity inequalities.
ConstraintSet build_doubly_stochastic(int n);

// L_P: L_D plus trace = 0 plus symmetry X_ij = X_ji. Requires even n.
ConstraintSet build_pure_involution(int n);

// n weak row-sum and n weak column-sum equalities (row i sum = row 0 sum);
// the two trivial index-0 instances are retained for uniform indexing.
ConstraintSet build_weak_sums(int n);

bool satisfies(const RationalMatrix& x, const ConstraintSet& l);

bool is_homogeneous(const LinearConstraint& l);

// True iff l is a scalar multiple of the row-sum equality for row i0
// (all coefficients equal on row i0, rhs equal to that coefficient).
bool is_row_sum_constraint(const LinearConstraint& l, int n, int* i0 = nullptr);
bool is_col_sum_constraint(const LinearConstraint& l, int n, int* j0 = nullptr);

// Quasi-homogeneous: contains every row-sum and column-sum equality of
// L_D(n), and every remaining constraint is homogeneous. Recognition is
// structural (coefficient patterns), not label based.
bool is_quasi_homogeneous(const ConstraintSet& l);

// Merged constraint L^square: row/column sums replaced by their weak forms,
// everything else copied. Requires a quasi-homogeneous input.
ConstraintSet merge(const ConstraintSet& l);

// Appends a constraint unless an identical one (under normalized_key) is
// already present; trivial 0-relation-0 constraints are skipped.
void add_deduped(ConstraintSet& set, LinearConstraint c);

}  // namespace permlp
