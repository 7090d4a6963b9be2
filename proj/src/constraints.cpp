#include "permlp/constraints.hpp"

#include <set>
#include <sstream>

#include "permlp/errors.hpp"

namespace permlp {

void LinearConstraint::canonicalize() {
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->second == 0)
      it = coeffs.erase(it);
    else
      ++it;
  }
}

Rational LinearConstraint::evaluate(const RationalMatrix& x) const {
  Rational v = 0;
  for (const auto& [ij, c] : coeffs) v += c * x.at(ij.first, ij.second);
  return v;
}

bool LinearConstraint::holds(const RationalMatrix& x) const {
  Rational v = evaluate(x);
  return rel == Relation::Equal ? v == rhs : v >= rhs;
}

std::string LinearConstraint::normalized_key() const {
  Rational scale = 1;
  if (!coeffs.empty()) {
    const Rational& lead = coeffs.begin()->second;
    if (rel == Relation::Equal)
      scale = 1 / lead;
    else
      scale = 1 / Rational(abs(lead));
  }
  std::ostringstream os;
  os << (rel == Relation::Equal ? "eq:" : "ge:");
  for (const auto& [ij, c] : coeffs)
    os << ij.first << "," << ij.second << "=" << Rational(c * scale).get_str()
       << ";";
  os << "|" << Rational(rhs * scale).get_str();
  return os.str();
}

void add_deduped(ConstraintSet& set, LinearConstraint c) {
  c.canonicalize();
  if (c.trivial() && c.rhs == 0) return;
  std::set<std::string> keys;
  for (const auto& existing : set.constraints)
    keys.insert(existing.normalized_key());
  if (keys.count(c.normalized_key())) return;
  set.constraints.push_back(std::move(c));
}

ConstraintSet build_doubly_stochastic(int n) {
  if (n < 1) throw invalid_size_error("doubly stochastic constraint needs n >= 1");
  ConstraintSet s;
  s.n = n;
  for (int i = 0; i < n; ++i) {
    LinearConstraint c;
    c.rel = Relation::Equal;
    c.rhs = 1;
    c.label = "row-sum:" + std::to_string(i);
    for (int j = 0; j < n; ++j) c.coeffs[{i, j}] = 1;
    s.constraints.push_back(std::move(c));
  }
  for (int j = 0; j < n; ++j) {
    LinearConstraint c;
    c.rel = Relation::Equal;
    c.rhs = 1;
    c.label = "col-sum:" + std::to_string(j);
    for (int i = 0; i < n; ++i) c.coeffs[{i, j}] = 1;
    s.constraints.push_back(std::move(c));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LinearConstraint c;
      c.rel = Relation::GreaterEqual;
      c.rhs = 0;
      c.label = "positivity:" + std::to_string(i) + "," + std::to_string(j);
      c.coeffs[{i, j}] = 1;
      s.constraints.push_back(std::move(c));
    }
  return s;
}

ConstraintSet build_pure_involution(int n) {
  if (n < 2 || n % 2 != 0)
    throw invalid_size_error(
        "pure involution needs even n >= 2 (no fixed-point-free involution "
        "exists for odd n)");
  ConstraintSet s = build_doubly_stochastic(n);
  LinearConstraint trace;
  trace.rel = Relation::Equal;
  trace.rhs = 0;
  trace.label = "trace-zero";
  for (int h = 0; h < n; ++h) trace.coeffs[{h, h}] = 1;
  s.constraints.push_back(std::move(trace));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      LinearConstraint c;
      c.rel = Relation::Equal;
      c.rhs = 0;
      c.label = "symmetry:" + std::to_string(i) + "," + std::to_string(j);
      c.coeffs[{i, j}] = 1;
      c.coeffs[{j, i}] = -1;
      s.constraints.push_back(std::move(c));
    }
  return s;
}

namespace {

LinearConstraint weak_row_sum(int i0) {
  LinearConstraint c;
  c.rel = Relation::Equal;
  c.rhs = 0;
  c.label = "weak-row-sum:" + std::to_string(i0);
  return c;
}

}  // namespace

ConstraintSet build_weak_sums(int n) {
  if (n < 1) throw invalid_size_error("weak sums need n >= 1");
  ConstraintSet s;
  s.n = n;
  for (int i0 = 0; i0 < n; ++i0) {
    LinearConstraint c = weak_row_sum(i0);
    for (int j = 0; j < n; ++j) {
      c.coeffs[{i0, j}] += 1;
      c.coeffs[{0, j}] -= 1;
    }
    c.canonicalize();
    s.constraints.push_back(std::move(c));
  }
  for (int j0 = 0; j0 < n; ++j0) {
    LinearConstraint c;
    c.rel = Relation::Equal;
    c.rhs = 0;
    c.label = "weak-col-sum:" + std::to_string(j0);
    for (int i = 0; i < n; ++i) {
      c.coeffs[{i, j0}] += 1;
      c.coeffs[{i, 0}] -= 1;
    }
    c.canonicalize();
    s.constraints.push_back(std::move(c));
  }
  return s;
}

bool satisfies(const RationalMatrix& x, const ConstraintSet& l) {
  if (x.rows() != l.n || x.cols() != l.n)
    throw dimension_error("matrix size does not match constraint set");
  for (const auto& c : l.constraints)
    if (!c.holds(x)) return false;
  return true;
}

bool is_homogeneous(const LinearConstraint& l) { return l.rhs == 0; }

bool is_row_sum_constraint(const LinearConstraint& l, int n, int* i0) {
  if (l.rel != Relation::Equal || static_cast<int>(l.coeffs.size()) != n)
    return false;
  int row = l.coeffs.begin()->first.first;
  const Rational& c = l.coeffs.begin()->second;
  if (l.rhs != c) return false;
  int j_expect = 0;
  for (const auto& [ij, v] : l.coeffs) {
    if (ij.first != row || ij.second != j_expect || v != c) return false;
    ++j_expect;
  }
  if (j_expect != n) return false;
  if (i0) *i0 = row;
  return true;
}

bool is_col_sum_constraint(const LinearConstraint& l, int n, int* j0) {
  if (l.rel != Relation::Equal || static_cast<int>(l.coeffs.size()) != n)
    return false;
  int col = l.coeffs.begin()->first.second;
  const Rational& c = l.coeffs.begin()->second;
  if (l.rhs != c) return false;
  int i_expect = 0;
  for (const auto& [ij, v] : l.coeffs) {
    if (ij.second != col || ij.first != i_expect || v != c) return false;
    ++i_expect;
  }
  if (i_expect != n) return false;
  if (j0) *j0 = col;
  return true;
}

bool is_quasi_homogeneous(const ConstraintSet& l) {
  std::vector<bool> row_seen(l.n, false), col_seen(l.n, false);
  for (const auto& c : l.constraints) {
    int idx;
    if (is_row_sum_constraint(c, l.n, &idx))
      row_seen[idx] = true;
    else if (is_col_sum_constraint(c, l.n, &idx))
      col_seen[idx] = true;
    else if (!is_homogeneous(c))
      return false;
  }
  for (int i = 0; i < l.n; ++i)
    if (!row_seen[i] || !col_seen[i]) return false;
  return true;
}

ConstraintSet merge(const ConstraintSet& l) {
  if (!is_quasi_homogeneous(l))
    throw invalid_argument_error("merge requires a quasi-homogeneous set");
  ConstraintSet weak = build_weak_sums(l.n);
  ConstraintSet out;
  out.n = l.n;
  std::vector<bool> weak_row_emitted(l.n, false), weak_col_emitted(l.n, false);
  for (const auto& c : l.constraints) {
    int idx;
    if (is_row_sum_constraint(c, l.n, &idx)) {
      if (!weak_row_emitted[idx]) {
        out.constraints.push_back(weak.constraints[idx]);
        weak_row_emitted[idx] = true;
      }
    } else if (is_col_sum_constraint(c, l.n, &idx)) {
      if (!weak_col_emitted[idx]) {
        out.constraints.push_back(weak.constraints[l.n + idx]);
        weak_col_emitted[idx] = true;
      }
    } else {
      out.constraints.push_back(c);
    }
  }
  return out;
}

}  // namespace permlp
