#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permlp/codes.hpp"
#include "permlp/constraints.hpp"
#include "permlp/graphs.hpp"
#include "permlp/polytope.hpp"
#include "permlp/rational.hpp"

namespace permlp {

enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
  SolveStatus status = SolveStatus::Infeasible;
  RationalMatrix point;
  Rational objective_value;
  bool is_vertex = false;
};

// Constraint set whose vertex set realizes the family as permutation
// matrices (identity-only, cyclic, dihedral, symmetric, pure-involution).
ConstraintSet family_constraints(const GroupFamily& f);

// Consolidated constraint set of the whole codebook: every block of row r
// carries the row-r family constraints, the top level carries the top-family
// constraints.
ConstraintSet code_constraints(const CodeSpec& spec);

// max lambda^T X mu over D_n[L], exact simplex; the returned point is an
// optimal basic feasible solution with vertex certification.
LPSolution solve_lp_max(const ConstraintSet& l,
                        const std::vector<Rational>& lambda,
                        const std::vector<Rational>& mu);

struct LPDecodeResult {
  LPSolution solution;
  std::vector<Rational> decoded_vector;  // mu0 = X0 mu
  std::optional<Integer> message;        // set when X0 is a permutation
                                         // matrix and a CodeSpec is known
  bool fractional = false;               // optimum not a permutation matrix
};

LPDecodeResult lp_decode(const std::vector<Rational>& lambda,
                         const ConstraintSet& l,
                         const std::vector<Rational>& mu);
LPDecodeResult lp_decode(const std::vector<Rational>& lambda,
                         const CodeSpec& spec);

// argmin ||X mu - lambda||^2 over G, ties broken by lexicographically
// smallest matrix.
RationalMatrix ml_bruteforce(const std::vector<Rational>& lambda,
                             const std::vector<Rational>& mu,
                             const std::vector<RationalMatrix>& g,
                             long budget = 1000000);

// Minimum Kendall-tau distance: min over unordered pairs of the inversion
// count of g0 g1^-1.
Integer kendall_tau_min(const std::vector<Permutation>& g);

// Minimum half squared Euclidean distance between orbit points of
// mu = (1, ..., n).
Rational euclidean_min(const std::vector<Permutation>& g);

struct ConjugationSearchResult {
  Permutation sigma;
  Integer d_l;
  Rational d_e;
};

// Search for the conjugation sigma maximizing d_l (ties: d_E, then lex
// smallest sigma) of sigma^-1 (Aut(seed) wr S_R) sigma. Exhaustive when
// (seed.n * R)! fits the budget, else seeded sampling.
ConjugationSearchResult best_conjugation_search(const Graph& seed, int R,
                                                long budget = 50000,
                                                std::uint64_t rng_seed = 1);

struct SimulationReport {
  long trials = 0;
  Rational noise_variance;
  long codeword_errors = 0;
  long ml_mismatches = 0;
  long fractional_optima = 0;
  long degenerate_optima = 0;  // LP optimum tied across several codewords
  std::uint64_t seed = 0;
};

// Additive-Gaussian-noise channel simulation of encode -> noise -> LP
// decode, with an ML cross-check when the codebook fits the budget. Noise is
// Box-Muller over a per-trial PRNG stream and quantized to denominator 2^20
// so decoding stays exact. Deterministic for a fixed seed.
SimulationReport simulate(const CodeSpec& spec, const ConstraintSet& l,
                          const Rational& sigma2, long trials,
                          std::uint64_t seed, long ml_budget = 1000000);

}  // namespace permlp
