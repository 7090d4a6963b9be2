#pragma once

#include <vector>

#include "permlp/rational.hpp"

namespace permlp {

enum class LPStatus { Optimal, Infeasible, Unbounded };

// Maximize objective . x subject to eqA x = eqb, inA x >= inb. Variables are
// free (unrestricted in sign); bounds such as x >= 0 must appear as rows of
// the inequality system.
struct LPProblem {
  int nvars = 0;
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> eqA;
  std::vector<Rational> eqb;
  std::vector<std::vector<Rational>> inA;
  std::vector<Rational> inb;
};

struct LPRawSolution {
  LPStatus status = LPStatus::Infeasible;
  std::vector<Rational> x;
  Rational objective_value;
};

// Exact two-phase dense-tableau simplex with Bland's rule (terminating on
// degenerate problems). Free variables are split internally.
LPRawSolution simplex_solve(const LPProblem& p);

}  // namespace permlp
