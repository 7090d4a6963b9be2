#include "permlp/consolidation.hpp"

#include <set>
#include <string>

#include "permlp/errors.hpp"

namespace permlp {

BlockStructure::BlockStructure(int nu_, int R_) : nu(nu_), R(R_) {
  if (nu < 1 || R < 1)
    throw invalid_size_error("block structure needs nu >= 1 and R >= 1");
}

ConsolidationSpec::ConsolidationSpec(
    BlockStructure s, std::vector<std::vector<ConstraintSet>> blocks,
    ConstraintSet top)
    : structure(s),
      block_constraints(std::move(blocks)),
      top_constraints(std::move(top)) {
  const int R = structure.R;
  if (static_cast<int>(block_constraints.size()) != R)
    throw dimension_error("block grid must have R rows");
  for (int r0 = 0; r0 < R; ++r0) {
    if (static_cast<int>(block_constraints[r0].size()) != R)
      throw dimension_error("block grid must have R columns");
    for (int r1 = 0; r1 < R; ++r1) {
      const ConstraintSet& m = block_constraints[r0][r1];
      std::string where =
          "block (" + std::to_string(r0) + "," + std::to_string(r1) + ")";
      if (m.n != structure.nu)
        throw dimension_error(where + " is not a constraint set for nu x nu");
      if (!is_quasi_homogeneous(m))
        throw invalid_argument_error(where + " is not quasi-homogeneous");
    }
  }
  if (top_constraints.n != R)
    throw dimension_error("top constraint set must be for R x R");
  std::set<std::string> top_keys;
  for (const auto& c : top_constraints.constraints)
    top_keys.insert(c.normalized_key());
  for (const auto& c : build_doubly_stochastic(R).constraints)
    if (!top_keys.count(c.normalized_key()))
      throw invalid_argument_error(
          "top constraint set does not contain the doubly stochastic "
          "constraints (missing " +
          c.label + ")");
}

RationalMatrix block(const RationalMatrix& X, const BlockStructure& s, int r0,
                     int r1) {
  if (X.rows() != s.matrix_size() || X.cols() != s.matrix_size())
    throw dimension_error("matrix does not match block structure");
  if (r0 < 0 || r0 >= s.R || r1 < 0 || r1 >= s.R)
    throw invalid_argument_error("block index out of range");
  RationalMatrix b(s.nu, s.nu);
  for (int i = 0; i < s.nu; ++i)
    for (int j = 0; j < s.nu; ++j)
      b.at(i, j) = X.at(r0 * s.nu + i, r1 * s.nu + j);
  return b;
}

RationalMatrix subtotal(const RationalMatrix& X, const BlockStructure& s) {
  if (X.rows() != s.matrix_size() || X.cols() != s.matrix_size())
    throw dimension_error("matrix does not match block structure");
  RationalMatrix h(s.R, s.R);
  for (int r0 = 0; r0 < s.R; ++r0)
    for (int r1 = 0; r1 < s.R; ++r1) {
      Rational sum = 0;
      for (int i = 0; i < s.nu; ++i) sum += X.at(r0 * s.nu + i, r1 * s.nu);
      h.at(r0, r1) = sum;
    }
  return h;
}

ConstraintSet hold(const ConstraintSet& top, int nu) {
  if (nu < 1) throw invalid_size_error("hold needs nu >= 1");
  ConstraintSet out;
  out.n = top.n * nu;
  for (const auto& h : top.constraints) {
    LinearConstraint c;
    c.rel = h.rel;
    c.rhs = h.rhs;
    c.label = h.label + "#";
    for (const auto& [idx, coef] : h.coeffs) {
      auto [r0, r1] = idx;
      for (int j = 0; j < nu; ++j)
        c.coeffs[{r0 * nu, r1 * nu + j}] += coef;
    }
    c.canonicalize();
    out.constraints.push_back(std::move(c));
  }
  return out;
}

ConstraintSet consolidate(const ConsolidationSpec& spec) {
  const int nu = spec.structure.nu;
  const int R = spec.structure.R;
  ConstraintSet out;
  out.n = nu * R;
  for (int r0 = 0; r0 < R; ++r0)
    for (int r1 = 0; r1 < R; ++r1) {
      ConstraintSet merged = merge(spec.block_constraints[r0][r1]);
      std::string prefix =
          "[" + std::to_string(r0) + "," + std::to_string(r1) + "]:";
      for (const auto& m : merged.constraints) {
        LinearConstraint c;
        c.rel = m.rel;
        c.rhs = m.rhs;
        c.label = prefix + m.label;
        for (const auto& [idx, coef] : m.coeffs)
          c.coeffs[{r0 * nu + idx.first, r1 * nu + idx.second}] = coef;
        add_deduped(out, std::move(c));
      }
    }
  for (auto& h : hold(spec.top_constraints, nu).constraints)
    add_deduped(out, std::move(h));
  return out;
}

Integer predicted_vertex_count(
    const ConsolidationSpec& spec, const std::vector<Permutation>& top_vertices,
    const std::vector<std::vector<Integer>>& block_vertex_counts) {
  const int R = spec.structure.R;
  if (static_cast<int>(block_vertex_counts.size()) != R)
    throw dimension_error("vertex-count grid must have R rows");
  for (const auto& row : block_vertex_counts)
    if (static_cast<int>(row.size()) != R)
      throw dimension_error("vertex-count grid must have R columns");
  Integer total = 0;
  for (const auto& sigma : top_vertices) {
    if (sigma.degree() != R)
      throw dimension_error("top vertex degree must equal R");
    Integer prod = 1;
    for (int r = 0; r < R; ++r) prod *= block_vertex_counts[r][sigma(r)];
    total += prod;
  }
  return total;
}

ReducedTelevisLP televis_reduced_lp(int R, const std::vector<Rational>& lambda,
                                    const std::vector<Rational>& mu) {
  if (R < 1) throw invalid_size_error("televis union needs R >= 1");
  if (static_cast<int>(lambda.size()) != 2 * R ||
      static_cast<int>(mu.size()) != 2 * R)
    throw dimension_error("lambda and mu must have length 2R");
  // Each 2x2 block of a feasible X is circulant: Y0 on the diagonal, Y1 off
  // it. Variable layout: Y0^{[r0,r1]} at 2*(r0*R+r1), Y1^{[r0,r1]} at +1.
  const int nvars = 2 * R * R;
  auto y0 = [R](int r0, int r1) { return 2 * (r0 * R + r1); };

  ReducedTelevisLP out;
  out.problem.nvars = nvars;
  out.problem.objective.assign(nvars, Rational(0));
  for (int r0 = 0; r0 < R; ++r0)
    for (int r1 = 0; r1 < R; ++r1) {
      out.problem.objective[y0(r0, r1)] =
          lambda[2 * r0] * mu[2 * r1] + lambda[2 * r0 + 1] * mu[2 * r1 + 1];
      out.problem.objective[y0(r0, r1) + 1] =
          lambda[2 * r0] * mu[2 * r1 + 1] + lambda[2 * r0 + 1] * mu[2 * r1];
    }
  // R row constraints and R column constraints: the circulant block form
  // makes all row/column sums of X equal to sum_{opposite index}(Y0 + Y1).
  for (int r0 = 0; r0 < R; ++r0) {
    std::vector<Rational> row(nvars, Rational(0));
    for (int r1 = 0; r1 < R; ++r1)
      row[y0(r0, r1)] = row[y0(r0, r1) + 1] = 1;
    out.problem.eqA.push_back(std::move(row));
    out.problem.eqb.push_back(1);
  }
  for (int r1 = 0; r1 < R; ++r1) {
    std::vector<Rational> row(nvars, Rational(0));
    for (int r0 = 0; r0 < R; ++r0)
      row[y0(r0, r1)] = row[y0(r0, r1) + 1] = 1;
    out.problem.eqA.push_back(std::move(row));
    out.problem.eqb.push_back(1);
  }
  // 2R^2 positivity inequalities.
  for (int v = 0; v < nvars; ++v) {
    std::vector<Rational> row(nvars, Rational(0));
    row[v] = 1;
    out.problem.inA.push_back(std::move(row));
    out.problem.inb.push_back(0);
  }
  out.expand = [R, y0](const std::vector<Rational>& y) {
    if (static_cast<int>(y.size()) != 2 * R * R)
      throw dimension_error("reduced solution has wrong length");
    RationalMatrix x(2 * R, 2 * R);
    for (int r0 = 0; r0 < R; ++r0)
      for (int r1 = 0; r1 < R; ++r1) {
        const Rational& a = y[y0(r0, r1)];
        const Rational& b = y[y0(r0, r1) + 1];
        x.at(2 * r0, 2 * r1) = a;
        x.at(2 * r0 + 1, 2 * r1 + 1) = a;
        x.at(2 * r0, 2 * r1 + 1) = b;
        x.at(2 * r0 + 1, 2 * r1) = b;
      }
    return x;
  };
  return out;
}

}  // namespace permlp
