#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permlp/constraints.hpp"
#include "permlp/linalg.hpp"
#include "permlp/rational.hpp"

namespace permlp {

// Normal form of a doubly stochastic polytope: the equality system is solved
// exactly, leaving a reduced variable t of dimension `dim` with
// x = x0 + basis . t and the inequality system ineqA t >= ineqb
// (deduplicated up to positive scaling).
struct PolytopeModel {
  int n = 0;
  bool empty = false;
  int dim = 0;
  RationalRow x0;        // particular solution, length n^2
  RationalRows basis;    // dim vectors of length n^2 (null-space of equalities)
  RationalRows ineqA;    // reduced inequality rows over t
  RationalRow ineqb;

  RationalMatrix lift(const RationalRow& t) const;
  RationalRow reduce_residual(const LinearConstraint& c, Rational* rhs) const;
};

struct VertexSet {
  std::vector<RationalMatrix> vertices;  // canonically sorted, deduplicated
  bool complete = false;
};

enum class CompactVerdict { Compact, NotCompact, Unknown };
enum class CompactMethod { Exhaustive, Probe };

struct CompactnessReport {
  CompactVerdict verdict = CompactVerdict::Unknown;
  CompactMethod method = CompactMethod::Probe;
  std::optional<RationalMatrix> fractional_witness;
  std::optional<Integer> vertex_count;
};

PolytopeModel model(const ConstraintSet& l);

inline constexpr std::int64_t kDefaultEnumerationLimit = 10'000'000;

// Exact enumeration of Ver(D_n[L]). Active-set search over d-subsets of
// inequality rows when C(m, d) fits the limit; exact double-description on
// the homogenized cone otherwise (the limit then caps the intermediate ray
// count). Always exhaustive on success.
VertexSet enumerate_vertices(const ConstraintSet& l,
                             std::int64_t limit = kDefaultEnumerationLimit);

// Verifies L is a doubly stochastic constraint (every DSM constraint present
// or implied; error otherwise), then enumerates if the budget allows
// (EXHAUSTIVE verdict) or falls back to randomized probing.
CompactnessReport check_compact(const ConstraintSet& l,
                                std::int64_t limit = kDefaultEnumerationLimit);

// Random-objective exact simplex probe: returns a certified fractional
// vertex if one is found within `trials`, else nullopt.
std::optional<RationalMatrix> probe_fractional(const ConstraintSet& l,
                                               int trials,
                                               std::uint64_t seed);

bool is_permutation_matrix(const RationalMatrix& x);

}  // namespace permlp
