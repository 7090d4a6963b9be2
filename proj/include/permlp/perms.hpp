#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permlp/rational.hpp"

namespace permlp {

// Permutation of {0..n-1}; images[i] = sigma(i).
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> imgs);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i]; }

  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation& o) const { return images == o.images; }
  bool operator<(const Permutation& o) const { return images < o.images; }
};

// (a compose b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

// X^sigma with X_{i,j} = 1 iff j = sigma(i). Under this convention
// X^sigma X^tau = X^{tau compose sigma} (matrix product reverses the order).
RationalMatrix perm_to_matrix(const Permutation& sigma);

std::optional<Permutation> matrix_to_perm(const RationalMatrix& x);

// Wreath element (sigma | g_0, ..., g_{R-1}): block (i, j) of the nuR x nuR
// matrix equals the matrix of g_i exactly when i = sigma(j).
struct WreathElement {
  Permutation top;                  // degree R
  std::vector<Permutation> locals;  // R permutations of degree nu

  int block_size() const { return locals.empty() ? 0 : locals[0].degree(); }
  int block_count() const { return static_cast<int>(locals.size()); }
};

RationalMatrix wreath_to_matrix(const WreathElement& w);

// Product consistent with matrix multiplication:
// wreath_to_matrix(a) * wreath_to_matrix(b) == wreath_to_matrix(result).
WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b);

enum class FamilyKind { Unit, Cyclic, Dihedral, Symmetric, PureInv4 };

struct GroupFamily {
  FamilyKind kind = FamilyKind::Unit;
  int degree = 1;

  GroupFamily() = default;
  GroupFamily(FamilyKind k, int deg);
};

Integer family_size(const GroupFamily& f);

// Canonical order: CYCLIC shift k at rank k; DIHEDRAL n rotations then n
// reflections (rank n+k is reflection of rotation k); SYMMETRIC Lehmer-code
// order; PURE_INV4 lexicographic; UNIT identity only.
std::vector<Permutation> enumerate_family(const GroupFamily& f,
                                          int symmetric_limit = 8);

Integer rank_in_family(const GroupFamily& f, const Permutation& g);
Permutation unrank_in_family(const GroupFamily& f, const Integer& k);

std::string family_code(const GroupFamily& f);  // "C" | "D" | "S" | "P4" | "U"

}  // namespace permlp
