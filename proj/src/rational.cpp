#include "permlp/rational.hpp"

#include <sstream>

#include "permlp/errors.hpp"

namespace permlp {

Rational rat(long num, long den) {
  if (den == 0) throw invalid_argument_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rat_parse(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  std::string t = s;
  // mpq_class accepts "p/q" directly but tolerates junk loosely; validate.
  for (char c : t) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' ||
          c == '/'))
      throw parse_error("malformed rational literal: " + s);
  }
  try {
    Rational q(t);
    if (q.get_den() == 0) throw parse_error("zero denominator: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw parse_error("malformed rational literal: " + s);
  }
}

std::string rat_str(const Rational& q) { return q.get_str(); }

double rat_double(const Rational& q) { return q.get_d(); }

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols, Rational(0)) {
  if (rows < 0 || cols < 0) throw invalid_size_error("negative matrix size");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw dimension_error("matrix product shape mismatch");
  RationalMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += v * o.at(k, j);
      }
    }
  return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw dimension_error("matrix sum shape mismatch");
  RationalMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  RationalMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Rational> RationalMatrix::mul_vec(
    const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw dimension_error("matrix-vector shape mismatch");
  std::vector<Rational> r(rows_, Rational(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

std::string RationalMatrix::key() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << ":";
  for (const Rational& q : a_) os << q.get_str() << ",";
  return os.str();
}

bool RationalMatrix::lex_less(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    return std::pair(rows_, cols_) < std::pair(o.rows_, o.cols_);
  for (size_t i = 0; i < a_.size(); ++i) {
    int c = cmp(a_[i], o.a_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace permlp
