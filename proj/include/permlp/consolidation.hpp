#pragma once

#include <functional>
#include <vector>

#include "permlp/constraints.hpp"
#include "permlp/perms.hpp"
#include "permlp/rational.hpp"
#include "permlp/simplex.hpp"

namespace permlp {

// Partition of a nuR x nuR matrix into R^2 blocks of size nu x nu.
struct BlockStructure {
  int nu = 1;
  int R = 1;

  BlockStructure() = default;
  BlockStructure(int nu_, int R_);

  int matrix_size() const { return nu * R; }
};

// Block-level constraint grid plus a top-level constraint set, the input of
// the consolidation operator. Construction validates that every block set is
// quasi-homogeneous and that the top set structurally contains the R x R
// doubly stochastic constraints.
struct ConsolidationSpec {
  BlockStructure structure;
  std::vector<std::vector<ConstraintSet>> block_constraints;  // [r0][r1]
  ConstraintSet top_constraints;

  ConsolidationSpec(BlockStructure s,
                    std::vector<std::vector<ConstraintSet>> blocks,
                    ConstraintSet top);
};

// The nu x nu block X^{[r0,r1]}, entries X_{r0*nu+i, r1*nu+j}.
RationalMatrix block(const RationalMatrix& X, const BlockStructure& s, int r0,
                     int r1);

// R x R matrix of first-column block sums: H_{r0,r1} = sum_i X^{[r0,r1]}_{i,0}.
RationalMatrix subtotal(const RationalMatrix& X, const BlockStructure& s);

// Lift an R x R constraint set over the nuR x nuR variable by substituting
// the first-ROW block sum sum_j X^{[r0,r1]}_{0,j} for each entry H_{r0,r1}.
ConstraintSet hold(const ConstraintSet& top, int nu);

// The consolidated constraint set: merged block constraints re-indexed onto
// their blocks, plus the held top constraints.
ConstraintSet consolidate(const ConsolidationSpec& spec);

// Theorem vertex-count formula: sum over top vertices sigma of the product
// of block vertex counts v^{[r, sigma(r)]}.
Integer predicted_vertex_count(const ConsolidationSpec& spec,
                               const std::vector<Permutation>& top_vertices,
                               const std::vector<std::vector<Integer>>&
                                   block_vertex_counts);

// Variable-reduced LP for the R-fold union of the two-vertex line (televis).
// Variables: Y^{[r0,r1]}_0 at index 2*(r0*R+r1), Y^{[r0,r1]}_1 at +1. The
// expansion map rebuilds the 2R x 2R matrix X from a Y vector.
struct ReducedTelevisLP {
  LPProblem problem;
  std::function<RationalMatrix(const std::vector<Rational>&)> expand;
};

ReducedTelevisLP televis_reduced_lp(int R, const std::vector<Rational>& lambda,
                                    const std::vector<Rational>& mu);

}  // namespace permlp
