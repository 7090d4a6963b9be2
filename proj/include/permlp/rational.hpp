#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace permlp {

// All polytope and LP arithmetic is exact. mpq_class keeps values in lowest
// terms with positive denominator, which is exactly the canonical form the
// rest of the library relies on for equality tests and deduplication.
using Rational = mpq_class;
using Integer = mpz_class;

Rational rat(long num, long den = 1);

// Parses "p/q" or "p". Throws Error("parse") on malformed input or q = 0.
Rational rat_parse(const std::string& s);

// Lowest-terms rendering: "p/q", or just "p" when q = 1.
std::string rat_str(const Rational& q);

double rat_double(const Rational& q);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const RationalMatrix& o) const;
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix scaled(const Rational& c) const;
  RationalMatrix transpose() const;

  std::vector<Rational> mul_vec(const std::vector<Rational>& v) const;

  // Canonical serialization of all entries; doubles as a dedup/sort key and
  // as the lexicographic tie-break order on flattened matrices.
  std::string key() const;

  // Lexicographic comparison on the flattened entry list.
  bool lex_less(const RationalMatrix& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace permlp
