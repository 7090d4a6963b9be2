#include "permlp/codes.hpp"

#include <string>

#include "permlp/errors.hpp"

namespace permlp {

CodeSpec::CodeSpec(int nu_, int R_, std::vector<GroupFamily> rows,
                   GroupFamily top, std::vector<Rational> mu_)
    : nu(nu_), R(R_), row_families(std::move(rows)), top_family(top),
      mu(std::move(mu_)) {
  if (nu < 1 || R < 1) throw invalid_size_error("code needs nu >= 1, R >= 1");
  if (static_cast<int>(row_families.size()) != R)
    throw dimension_error("code needs one row family per block row");
  for (const auto& f : row_families)
    if (f.degree != nu)
      throw dimension_error("row family degree must equal nu");
  if (top_family.degree != R)
    throw dimension_error("top family degree must equal R");
  if (mu.empty()) {
    mu.resize(nu * R);
    for (int i = 0; i < nu * R; ++i) mu[i] = Rational(i + 1);
  } else if (static_cast<int>(mu.size()) != nu * R) {
    throw dimension_error("mu must have length nu*R");
  }
}

Integer code_cardinality(const CodeSpec& spec) {
  Integer card = family_size(spec.top_family);
  for (const auto& f : spec.row_families) card *= family_size(f);
  return card;
}

Codeword encode(const Integer& mes, const CodeSpec& spec) {
  if (mes < 0 || mes >= code_cardinality(spec))
    throw invalid_argument_error("message out of range [0, |G|)");
  Integer rest = mes;
  WreathElement w;
  w.locals.resize(spec.R);
  for (int j = 0; j < spec.R; ++j) {
    Integer v = family_size(spec.row_families[j]);
    Integer digit = rest % v;
    rest /= v;
    w.locals[j] = unrank_in_family(spec.row_families[j], digit);
  }
  w.top = unrank_in_family(spec.top_family, rest);

  RationalMatrix x = wreath_to_matrix(w);
  Codeword out;
  out.element = std::move(w);
  out.vector = x.mul_vec(spec.mu);
  return out;
}

Integer decode_message(const RationalMatrix& x, const CodeSpec& spec) {
  const int n = spec.n();
  if (x.rows() != n || x.cols() != n)
    throw dimension_error("matrix size must be nu*R");
  BlockStructure s = spec.structure();
  // Step 6 of the decoding algorithm: each block row must hold exactly one
  // nonzero block.
  std::vector<int> tau(spec.R, -1);  // tau(i) = column of row i's block
  for (int i = 0; i < spec.R; ++i) {
    for (int j = 0; j < spec.R; ++j) {
      bool nonzero = false;
      for (int a = 0; a < spec.nu && !nonzero; ++a)
        for (int b = 0; b < spec.nu && !nonzero; ++b)
          if (x.at(i * spec.nu + a, j * spec.nu + b) != 0) nonzero = true;
      if (!nonzero) continue;
      if (tau[i] >= 0)
        throw decode_failure_error("block row " + std::to_string(i) +
                                   " has more than one nonzero block");
      tau[i] = j;
    }
    if (tau[i] < 0)
      throw decode_failure_error("block row " + std::to_string(i) +
                                 " is entirely zero");
  }
  std::vector<int> seen(spec.R, 0);
  for (int i = 0; i < spec.R; ++i) seen[tau[i]]++;
  for (int j = 0; j < spec.R; ++j)
    if (seen[j] != 1)
      throw decode_failure_error("nonzero blocks do not form a permutation");
  // The subtotal pattern is X^{sigma^-1} for top permutation sigma, so the
  // top digit ranks the inverse of the block-row map.
  Permutation sigma = Permutation(tau).inverse();
  Integer mes = rank_in_family(spec.top_family, sigma);
  for (int i = spec.R - 1; i >= 0; --i) {
    auto g = matrix_to_perm(block(x, s, i, tau[i]));
    if (!g)
      throw decode_failure_error("block (" + std::to_string(i) + "," +
                                 std::to_string(tau[i]) +
                                 ") is not a permutation matrix");
    mes = mes * family_size(spec.row_families[i]) +
          rank_in_family(spec.row_families[i], *g);
  }
  return mes;
}

std::vector<RationalMatrix> codebook_matrices(const CodeSpec& spec,
                                              long budget) {
  Integer card = code_cardinality(spec);
  if (card > budget)
    throw budget_error("codebook cardinality exceeds the enumeration budget");
  std::vector<RationalMatrix> out;
  for (Integer mes = 0; mes < card; ++mes)
    out.push_back(wreath_to_matrix(encode(mes, spec).element));
  return out;
}

}  // namespace permlp
