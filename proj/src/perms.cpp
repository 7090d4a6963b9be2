#include "permlp/perms.hpp"

#include <algorithm>
#include <numeric>

#include "permlp/errors.hpp"

namespace permlp {

Permutation::Permutation(std::vector<int> imgs) : images(std::move(imgs)) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
      throw invalid_argument_error("images are not a bijection of {0..n-1}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images.size());
  for (int i = 0; i < degree(); ++i) img[images[i]] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw dimension_error("composing permutations of different degree");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a(b(i));
  return Permutation(std::move(img));
}

RationalMatrix perm_to_matrix(const Permutation& sigma) {
  int n = sigma.degree();
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, sigma(i)) = 1;
  return m;
}

std::optional<Permutation> matrix_to_perm(const RationalMatrix& x) {
  if (x.rows() != x.cols()) return std::nullopt;
  int n = x.rows();
  std::vector<int> img(n, -1);
  std::vector<bool> col_used(n, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& v = x.at(i, j);
      if (v == 0) continue;
      if (v != 1 || img[i] != -1) return std::nullopt;
      img[i] = j;
    }
    if (img[i] == -1 || col_used[img[i]]) return std::nullopt;
    col_used[img[i]] = true;
  }
  return Permutation(std::move(img));
}

RationalMatrix wreath_to_matrix(const WreathElement& w) {
  int r = w.block_count();
  int nu = w.block_size();
  if (w.top.degree() != r)
    throw dimension_error("wreath top degree does not match block count");
  for (const auto& g : w.locals)
    if (g.degree() != nu)
      throw dimension_error("wreath locals have mixed degrees");
  RationalMatrix m(nu * r, nu * r);
  for (int j = 0; j < r; ++j) {
    int i = w.top(j);
    const Permutation& g = w.locals[i];
    for (int a = 0; a < nu; ++a) m.at(i * nu + a, j * nu + g(a)) = 1;
  }
  return m;
}

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b) {
  if (a.block_count() != b.block_count() || a.block_size() != b.block_size())
    throw dimension_error("wreath product shape mismatch");
  WreathElement r;
  r.top = compose(a.top, b.top);
  Permutation a_top_inv = a.top.inverse();
  r.locals.reserve(a.locals.size());
  // Block (i, k) of the product carries X^{g_i} X^{h_{a_top_inv(i)}}, and
  // X^g X^h = X^{h compose g}.
  for (int i = 0; i < a.block_count(); ++i)
    r.locals.push_back(compose(b.locals[a_top_inv(i)], a.locals[i]));
  return r;
}

GroupFamily::GroupFamily(FamilyKind k, int deg) : kind(k), degree(deg) {
  switch (kind) {
    case FamilyKind::Unit:
    case FamilyKind::Cyclic:
    case FamilyKind::Symmetric:
      if (degree < 1) throw invalid_size_error("family degree must be >= 1");
      break;
    case FamilyKind::Dihedral:
      if (degree < 3)
        throw invalid_size_error(
            "dihedral family needs degree >= 3 (smaller degrees degenerate to "
            "cyclic/unit families)");
      break;
    case FamilyKind::PureInv4:
      if (degree != 4)
        throw invalid_size_error("pure-involution family is defined only at "
                                 "degree 4");
      break;
  }
}

Integer family_size(const GroupFamily& f) {
  switch (f.kind) {
    case FamilyKind::Unit:
      return 1;
    case FamilyKind::Cyclic:
      return f.degree;
    case FamilyKind::Dihedral:
      return 2 * f.degree;
    case FamilyKind::Symmetric: {
      Integer r;
      mpz_fac_ui(r.get_mpz_t(), f.degree);
      return r;
    }
    case FamilyKind::PureInv4:
      return 3;
  }
  return 0;
}

namespace {

Permutation rotation(int n, int k) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + k) % n;
  return Permutation(std::move(img));
}

// Reflection composed with rotation k: i -> -(i + k) mod n.
Permutation reflection(int n, int k) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = ((2 * n - i - k) % n);
  return Permutation(std::move(img));
}

const std::vector<std::vector<int>>& pure_inv4_images() {
  static const std::vector<std::vector<int>> v = {
      {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return v;
}

// Fenwick tree over value counts, for O(n log n) Lehmer rank/unrank.
class Fenwick {
 public:
  explicit Fenwick(int n) : n_(n), t_(n + 1, 0) {}
  void add(int i, int delta) {
    for (++i; i <= n_; i += i & -i) t_[i] += delta;
  }
  int prefix(int i) const {  // sum of [0, i)
    int s = 0;
    for (; i > 0; i -= i & -i) s += t_[i];
    return s;
  }
  // Smallest index i with prefix(i+1) == k+1 (k-th remaining value).
  int kth(int k) const {
    int pos = 0, rem = k + 1;
    for (int pw = 1 << 30; pw; pw >>= 1)
      if (pos + pw <= n_ && t_[pos + pw] < rem) {
        pos += pw;
        rem -= t_[pos];
      }
    return pos;
  }

 private:
  int n_;
  std::vector<int> t_;
};

Integer symmetric_rank(const Permutation& g) {
  int n = g.degree();
  Fenwick fw(n);
  for (int v = 0; v < n; ++v) fw.add(v, 1);
  Integer rank = 0;
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  for (int i = 0; i < n; ++i) {
    fact /= (n - i);
    rank += Integer(fw.prefix(g(i))) * fact;
    fw.add(g(i), -1);
  }
  return rank;
}

Permutation symmetric_unrank(int n, Integer k) {
  Fenwick fw(n);
  for (int v = 0; v < n; ++v) fw.add(v, 1);
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) {
    fact /= (n - i);
    Integer digit = k / fact;
    k -= digit * fact;
    int d = static_cast<int>(digit.get_ui());
    img[i] = fw.kth(d);
    fw.add(img[i], -1);
  }
  return Permutation(std::move(img));
}

}  // namespace

std::vector<Permutation> enumerate_family(const GroupFamily& f,
                                          int symmetric_limit) {
  std::vector<Permutation> out;
  switch (f.kind) {
    case FamilyKind::Unit:
      out.push_back(Permutation::identity(f.degree));
      break;
    case FamilyKind::Cyclic:
      for (int k = 0; k < f.degree; ++k) out.push_back(rotation(f.degree, k));
      break;
    case FamilyKind::Dihedral:
      for (int k = 0; k < f.degree; ++k) out.push_back(rotation(f.degree, k));
      for (int k = 0; k < f.degree; ++k) out.push_back(reflection(f.degree, k));
      break;
    case FamilyKind::Symmetric: {
      if (f.degree > symmetric_limit)
        throw budget_error("symmetric family enumeration above factorial "
                           "budget (degree " +
                           std::to_string(f.degree) + ")");
      Integer sz = family_size(f);
      for (Integer k = 0; k < sz; ++k)
        out.push_back(symmetric_unrank(f.degree, k));
      break;
    }
    case FamilyKind::PureInv4:
      for (const auto& img : pure_inv4_images())
        out.push_back(Permutation(img));
      break;
  }
  return out;
}

Integer rank_in_family(const GroupFamily& f, const Permutation& g) {
  if (g.degree() != f.degree)
    throw membership_error("permutation degree does not match family");
  switch (f.kind) {
    case FamilyKind::Unit:
      if (!g.is_identity())
        throw membership_error("permutation is not in the unit family");
      return 0;
    case FamilyKind::Cyclic: {
      int k = g(0);
      if (!(g == rotation(f.degree, k)))
        throw membership_error("permutation is not a cyclic shift");
      return k;
    }
    case FamilyKind::Dihedral: {
      int k = g(0);
      if (g == rotation(f.degree, k)) return k;
      k = (f.degree - g(0)) % f.degree;
      if (g == reflection(f.degree, k)) return f.degree + k;
      throw membership_error("permutation is not in the dihedral family");
    }
    case FamilyKind::Symmetric:
      return symmetric_rank(g);
    case FamilyKind::PureInv4: {
      const auto& v = pure_inv4_images();
      for (size_t i = 0; i < v.size(); ++i)
        if (g.images == v[i]) return static_cast<long>(i);
      throw membership_error("permutation is not a pure involution of S_4");
    }
  }
  throw membership_error("unknown family");
}

Permutation unrank_in_family(const GroupFamily& f, const Integer& k) {
  if (k < 0 || k >= family_size(f))
    throw invalid_argument_error("family rank out of range");
  switch (f.kind) {
    case FamilyKind::Unit:
      return Permutation::identity(f.degree);
    case FamilyKind::Cyclic:
      return rotation(f.degree, static_cast<int>(k.get_ui()));
    case FamilyKind::Dihedral: {
      int ki = static_cast<int>(k.get_ui());
      return ki < f.degree ? rotation(f.degree, ki)
                           : reflection(f.degree, ki - f.degree);
    }
    case FamilyKind::Symmetric:
      return symmetric_unrank(f.degree, k);
    case FamilyKind::PureInv4:
      return Permutation(pure_inv4_images()[k.get_ui()]);
  }
  throw invalid_argument_error("unknown family");
}

std::string family_code(const GroupFamily& f) {
  switch (f.kind) {
    case FamilyKind::Unit:
      return "U";
    case FamilyKind::Cyclic:
      return "C";
    case FamilyKind::Dihedral:
      return "D";
    case FamilyKind::Symmetric:
      return "S";
    case FamilyKind::PureInv4:
      return "P4";
  }
  return "?";
}

}  // namespace permlp
