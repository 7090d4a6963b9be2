#include <doctest.h>

#include "permlp/constraints.hpp"
#include "permlp/errors.hpp"
#include "permlp/perms.hpp"

using namespace permlp;

TEST_CASE("doubly stochastic constraint set has 2n + n^2 constraints") {
  for (int n : {2, 3, 4, 6}) {
    ConstraintSet s = build_doubly_stochastic(n);
    CHECK(s.n == n);
    CHECK(static_cast<int>(s.constraints.size()) == 2 * n + n * n);
    int eq = 0, ge = 0;
    for (const auto& c : s.constraints)
      (c.rel == Relation::Equal ? eq : ge)++;
    CHECK(eq == 2 * n);
    CHECK(ge == n * n);
  }
}

TEST_CASE("permutation matrices satisfy the DS constraints") {
  ConstraintSet s = build_doubly_stochastic(3);
  auto perms = enumerate_family(GroupFamily(FamilyKind::Symmetric, 3));
  for (const auto& p : perms) CHECK(satisfies(perm_to_matrix(p), s));
  RationalMatrix bad(3, 3);
  bad.at(0, 0) = 2;
  CHECK(!satisfies(bad, s));
}

TEST_CASE("pure involution constraints") {
  CHECK_THROWS_AS(build_pure_involution(3), Error);
  ConstraintSet s = build_pure_involution(4);
  // L_D plus trace-zero plus the 6 upper-triangle symmetry equalities.
  CHECK(static_cast<int>(s.constraints.size()) == 2 * 4 + 16 + 1 + 6);
  for (const auto& img : {std::vector<int>{1, 0, 3, 2},
                          std::vector<int>{2, 3, 0, 1},
                          std::vector<int>{3, 2, 1, 0}})
    CHECK(satisfies(perm_to_matrix(Permutation(img)), s));
  CHECK(!satisfies(RationalMatrix::identity(4), s));  // trace 4 != 0
}

TEST_CASE("weak sums hold exactly on doubly stochastic matrices") {
  ConstraintSet w = build_weak_sums(3);
  CHECK(static_cast<int>(w.constraints.size()) == 6);
  CHECK(w.constraints[0].trivial());  // weak row-sum 0 is 0 = 0
  CHECK(w.constraints[3].trivial());  // weak col-sum 0 is 0 = 0
  RationalMatrix third(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) third.at(i, j) = Rational(1, 3);
  CHECK(satisfies(third, w));
  for (const auto& c : w.constraints) CHECK(is_homogeneous(c));
}

TEST_CASE("row and column sum recognition accepts scalar multiples") {
  LinearConstraint c;
  for (int j = 0; j < 3; ++j) c.coeffs[{1, j}] = Rational(5);
  c.rhs = 5;
  int i0 = -1;
  CHECK(is_row_sum_constraint(c, 3, &i0));
  CHECK(i0 == 1);
  c.rhs = 1;  // 5 * row sum = 1 is not a row-sum constraint
  CHECK(!is_row_sum_constraint(c, 3));
  CHECK(!is_col_sum_constraint(c, 3));
}

TEST_CASE("quasi-homogeneous recognition and merge") {
  ConstraintSet s = build_doubly_stochastic(3);
  CHECK(is_quasi_homogeneous(s));
  ConstraintSet merged = merge(s);
  CHECK(merged.constraints.size() == s.constraints.size());
  for (const auto& c : merged.constraints) CHECK(is_homogeneous(c));

  LinearConstraint bad;
  bad.coeffs[{0, 0}] = 1;
  bad.rhs = Rational(1, 2);
  ConstraintSet t = build_doubly_stochastic(3);
  t.constraints.push_back(bad);
  CHECK(!is_quasi_homogeneous(t));
  CHECK_THROWS_AS(merge(t), Error);
}

TEST_CASE("canonicalization drops zeros and dedup identifies scalings") {
  LinearConstraint a;
  a.coeffs[{0, 0}] = 1;
  a.coeffs[{0, 1}] = 0;
  a.canonicalize();
  CHECK(a.coeffs.size() == 1);

  LinearConstraint twice;
  twice.coeffs[{0, 0}] = 2;
  twice.rhs = 0;
  LinearConstraint negated;
  negated.coeffs[{0, 0}] = -1;
  negated.rhs = 0;
  CHECK(a.normalized_key() == twice.normalized_key());
  CHECK(a.normalized_key() == negated.normalized_key());  // equalities only

  ConstraintSet set;
  set.n = 1;
  add_deduped(set, a);
  add_deduped(set, twice);
  CHECK(set.constraints.size() == 1);

  LinearConstraint ge_pos = a, ge_neg = negated;
  ge_pos.rel = Relation::GreaterEqual;
  ge_neg.rel = Relation::GreaterEqual;
  CHECK(ge_pos.normalized_key() != ge_neg.normalized_key());
}
