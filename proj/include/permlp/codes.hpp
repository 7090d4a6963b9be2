#pragma once

#include <vector>

#include "permlp/consolidation.hpp"
#include "permlp/perms.hpp"
#include "permlp/rational.hpp"

namespace permlp {

// A wreath-product codebook: one group family per block row (constant across
// columns), one top family, and the initial vector mu of length nu*R.
struct CodeSpec {
  int nu = 1;
  int R = 1;
  std::vector<GroupFamily> row_families;  // R families of degree nu
  GroupFamily top_family;                 // degree R
  std::vector<Rational> mu;               // length nu*R

  // mu defaults to (1, 2, ..., nu*R) when empty.
  CodeSpec(int nu_, int R_, std::vector<GroupFamily> rows, GroupFamily top,
           std::vector<Rational> mu_ = {});

  int n() const { return nu * R; }
  BlockStructure structure() const { return BlockStructure(nu, R); }
};

// v_0 v_1 ... v_{R-1} v_R: the product of the family cardinalities.
Integer code_cardinality(const CodeSpec& spec);

struct Codeword {
  std::vector<Rational> vector;  // mu' = X mu, length nu*R
  WreathElement element;
};

// Mixed-radix encoding over radices (v_0, ..., v_{R-1}, v_R): digit j is the
// rank of g_j in family j (digit R ranks the top permutation).
Codeword encode(const Integer& mes, const CodeSpec& spec);

// Inverse of encode on permutation matrices: reads the top digit from the
// subtotal, then the block digits from rows R-1 down to 0.
Integer decode_message(const RationalMatrix& x, const CodeSpec& spec);

// All codebook matrices in message order (budget-checked helper for the ML
// oracle and vertex-set comparisons).
std::vector<RationalMatrix> codebook_matrices(const CodeSpec& spec,
                                              long budget = 1000000);

}  // namespace permlp
