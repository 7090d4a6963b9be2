#include "permlp/lpdecode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "permlp/consolidation.hpp"
#include "permlp/errors.hpp"
#include "permlp/linalg.hpp"
#include "permlp/simplex.hpp"

namespace permlp {

ConstraintSet family_constraints(const GroupFamily& f) {
  const int n = f.degree;
  switch (f.kind) {
    case FamilyKind::Unit: {
      ConstraintSet s = build_doubly_stochastic(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          LinearConstraint c;
          c.coeffs[{i, j}] = 1;
          c.rel = Relation::Equal;
          c.rhs = 0;
          c.label = "off-diagonal-zero:" + std::to_string(i) + "," +
                    std::to_string(j);
          add_deduped(s, std::move(c));
        }
      return s;
    }
    case FamilyKind::Cyclic:
      if (n == 1) return family_constraints(GroupFamily(FamilyKind::Unit, 1));
      if (n == 2)
        return build_graph_constraints(make_family(GraphFamily::Line, 2));
      return build_graph_constraints(make_family(GraphFamily::Cycle, n));
    case FamilyKind::Dihedral:
      return build_graph_constraints(make_family(GraphFamily::Circle, n));
    case FamilyKind::Symmetric:
      return build_doubly_stochastic(n);
    case FamilyKind::PureInv4:
      return build_pure_involution(4);
  }
  throw invalid_argument_error("unknown group family");
}

ConstraintSet code_constraints(const CodeSpec& spec) {
  std::vector<std::vector<ConstraintSet>> blocks(spec.R);
  for (int r0 = 0; r0 < spec.R; ++r0) {
    ConstraintSet row_set = family_constraints(spec.row_families[r0]);
    blocks[r0].assign(spec.R, row_set);
  }
  ConsolidationSpec cspec(spec.structure(), std::move(blocks),
                          family_constraints(spec.top_family));
  return consolidate(cspec);
}

namespace {

bool certify_vertex(const PolytopeModel& m, const RationalRow& t) {
  RationalRows tight;
  for (size_t r = 0; r < m.ineqA.size(); ++r) {
    Rational v = 0;
    for (int k = 0; k < m.dim; ++k) v += m.ineqA[r][k] * t[k];
    if (v == m.ineqb[r]) tight.push_back(m.ineqA[r]);
  }
  return rank(std::move(tight)) == m.dim;
}

std::vector<Rational> objective_flat(const std::vector<Rational>& lambda,
                                     const std::vector<Rational>& mu) {
  const int n = static_cast<int>(lambda.size());
  std::vector<Rational> c(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i * n + j] = lambda[i] * mu[j];
  return c;
}

Rational bilinear(const std::vector<Rational>& lambda,
                  const RationalMatrix& x, const std::vector<Rational>& mu) {
  Rational v = 0;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      v += lambda[i] * x.at(i, j) * mu[j];
  return v;
}

}  // namespace

LPSolution solve_lp_max(const ConstraintSet& l,
                        const std::vector<Rational>& lambda,
                        const std::vector<Rational>& mu) {
  if (static_cast<int>(lambda.size()) != l.n ||
      static_cast<int>(mu.size()) != l.n)
    throw dimension_error("lambda and mu must have length n");
  PolytopeModel m = model(l);
  LPSolution out;
  if (m.empty) {
    out.status = SolveStatus::Infeasible;
    return out;
  }
  std::vector<Rational> flat = objective_flat(lambda, mu);
  const int N = l.n * l.n;
  Rational constant = 0;
  for (int i = 0; i < N; ++i) constant += flat[i] * m.x0[i];
  if (m.dim == 0) {
    out.status = SolveStatus::Optimal;
    out.point = m.lift({});
    out.objective_value = constant;
    out.is_vertex = true;
    return out;
  }
  LPProblem p;
  p.nvars = m.dim;
  p.objective.assign(m.dim, Rational(0));
  for (int k = 0; k < m.dim; ++k)
    for (int i = 0; i < N; ++i) p.objective[k] += flat[i] * m.basis[k][i];
  p.inA = m.ineqA;
  p.inb = m.ineqb;
  LPRawSolution raw = simplex_solve(p);
  if (raw.status == LPStatus::Infeasible) {
    out.status = SolveStatus::Infeasible;
    return out;
  }
  if (raw.status == LPStatus::Unbounded) {
    out.status = SolveStatus::Unbounded;
    return out;
  }
  out.status = SolveStatus::Optimal;
  out.point = m.lift(raw.x);
  out.objective_value = constant + raw.objective_value;
  out.is_vertex = certify_vertex(m, raw.x);
  return out;
}

LPDecodeResult lp_decode(const std::vector<Rational>& lambda,
                         const ConstraintSet& l,
                         const std::vector<Rational>& mu) {
  LPDecodeResult out;
  out.solution = solve_lp_max(l, lambda, mu);
  if (out.solution.status != SolveStatus::Optimal) return out;
  out.decoded_vector = out.solution.point.mul_vec(mu);
  out.fractional = !is_permutation_matrix(out.solution.point);
  return out;
}

LPDecodeResult lp_decode(const std::vector<Rational>& lambda,
                         const CodeSpec& spec) {
  LPDecodeResult out = lp_decode(lambda, code_constraints(spec), spec.mu);
  if (out.solution.status == SolveStatus::Optimal && !out.fractional) {
    try {
      out.message = decode_message(out.solution.point, spec);
    } catch (const Error&) {
      // A permutation-matrix optimum outside the codebook stays unreported.
    }
  }
  return out;
}

RationalMatrix ml_bruteforce(const std::vector<Rational>& lambda,
                             const std::vector<Rational>& mu,
                             const std::vector<RationalMatrix>& g,
                             long budget) {
  if (g.empty()) throw invalid_argument_error("empty candidate set");
  if (static_cast<long>(g.size()) > budget)
    throw budget_error("candidate set exceeds the brute-force budget");
  const RationalMatrix* best = nullptr;
  Rational best_dist;
  for (const auto& x : g) {
    std::vector<Rational> p = x.mul_vec(mu);
    Rational dist = 0;
    for (size_t i = 0; i < lambda.size(); ++i) {
      Rational d = p[i] - lambda[i];
      dist += d * d;
    }
    if (!best || dist < best_dist ||
        (dist == best_dist && x.lex_less(*best))) {
      best = &x;
      best_dist = dist;
    }
  }
  return *best;
}

namespace {

Integer inversions(const Permutation& p) {
  Integer count = 0;
  const int n = p.degree();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p(i) > p(j)) ++count;
  return count;
}

}  // namespace

Integer kendall_tau_min(const std::vector<Permutation>& g) {
  if (g.size() < 2)
    throw invalid_argument_error("distance needs at least two elements");
  Integer best = -1;
  for (size_t a = 0; a < g.size(); ++a)
    for (size_t b = a + 1; b < g.size(); ++b) {
      Integer d = inversions(compose(g[a], g[b].inverse()));
      if (best < 0 || d < best) best = d;
    }
  return best;
}

Rational euclidean_min(const std::vector<Permutation>& g) {
  if (g.size() < 2)
    throw invalid_argument_error("distance needs at least two elements");
  const int n = g[0].degree();
  std::vector<Rational> mu(n);
  for (int i = 0; i < n; ++i) mu[i] = Rational(i + 1);
  // (X^g mu)_i = mu_{g(i)}.
  Rational best = -1;
  for (size_t a = 0; a < g.size(); ++a)
    for (size_t b = a + 1; b < g.size(); ++b) {
      Rational d = 0;
      for (int i = 0; i < n; ++i) {
        Rational t = mu[g[a](i)] - mu[g[b](i)];
        d += t * t;
      }
      d /= 2;
      if (best < 0 || d < best) best = d;
    }
  return best;
}

namespace {

// The wreath group Aut(seed) wr S_R as permutations of degree seed.n * R.
std::vector<Permutation> union_automorphism_group(const Graph& seed, int R) {
  std::vector<Permutation> auts = automorphisms_bruteforce(seed);
  std::vector<Permutation> tops =
      enumerate_family(GroupFamily(FamilyKind::Symmetric, R));
  std::vector<Permutation> out;
  std::vector<int> pick(R, 0);
  for (const auto& top : tops) {
    for (;;) {
      WreathElement w;
      w.top = top;
      w.locals.resize(R);
      for (int r = 0; r < R; ++r) w.locals[r] = auts[pick[r]];
      out.push_back(*matrix_to_perm(wreath_to_matrix(w)));
      int r = R - 1;
      while (r >= 0 && pick[r] + 1 == static_cast<int>(auts.size()))
        pick[r--] = 0;
      if (r < 0) break;
      ++pick[r];
    }
  }
  return out;
}

}  // namespace

ConjugationSearchResult best_conjugation_search(const Graph& seed, int R,
                                                long budget,
                                                std::uint64_t rng_seed) {
  if (R < 1) throw invalid_size_error("union needs R >= 1");
  std::vector<Permutation> group = union_automorphism_group(seed, R);
  const int n = seed.n * R;

  ConjugationSearchResult best;
  bool have = false;
  auto consider = [&](const Permutation& sigma) {
    Permutation inv = sigma.inverse();
    std::vector<Permutation> conj;
    conj.reserve(group.size());
    for (const auto& g : group)
      conj.push_back(compose(inv, compose(g, sigma)));
    Integer dl = kendall_tau_min(conj);
    Rational de = euclidean_min(conj);
    if (!have || dl > best.d_l || (dl == best.d_l && de > best.d_e)) {
      best = {sigma, dl, de};
      have = true;
    }
  };

  Integer total;
  mpz_fac_ui(total.get_mpz_t(), n);
  if (total <= budget) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
      consider(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
  } else {
    std::mt19937_64 rng(rng_seed);
    consider(Permutation::identity(n));
    std::vector<int> img(n);
    for (long trial = 0; trial < budget; ++trial) {
      std::iota(img.begin(), img.end(), 0);
      for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(img[i], img[j]);
      }
      consider(Permutation(img));
    }
  }
  return best;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d649bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform draw from [0, card) by rejection, so the distribution is exact:
// reject the low 2^64 mod card values, leaving a region of size divisible
// by card.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t card) {
  std::uint64_t threshold = (-card) % card;  // 2^64 mod card
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return (r - threshold) % card;
  }
}

}  // namespace

SimulationReport simulate(const CodeSpec& spec, const ConstraintSet& l,
                          const Rational& sigma2, long trials,
                          std::uint64_t seed, long ml_budget) {
  if (trials < 1) throw invalid_argument_error("simulation needs trials >= 1");
  if (sigma2 < 0) throw invalid_argument_error("noise variance must be >= 0");
  SimulationReport rep;
  rep.trials = trials;
  rep.noise_variance = sigma2;
  rep.seed = seed;

  Integer card_z = code_cardinality(spec);
  if (!card_z.fits_ulong_p())
    throw budget_error("code cardinality exceeds the simulation range");
  const std::uint64_t card = card_z.get_ui();
  const int n = spec.n();
  const double sd = std::sqrt(rat_double(sigma2));
  const double two_pi = 6.283185307179586476925286766559;
  const double inv53 = 1.0 / 9007199254740992.0;  // 2^-53

  std::vector<RationalMatrix> codebook;
  bool have_ml = card <= static_cast<std::uint64_t>(ml_budget);
  if (have_ml) codebook = codebook_matrices(spec, ml_budget);

  for (long trial = 0; trial < trials; ++trial) {
    std::uint64_t state = seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1));
    std::uint64_t s0 = splitmix64(state);
    std::uint64_t s1 = splitmix64(state);
    std::mt19937_64 rng(s0 ^ (s1 << 1));

    std::uint64_t mes = uniform_below(rng, card);
    Codeword cw = encode(Integer(static_cast<unsigned long>(mes)), spec);

    std::vector<Rational> lambda = cw.vector;
    if (sd > 0) {
      for (int i = 0; i < n; i += 2) {
        double u1 = ((rng() >> 11) + 1) * inv53;  // (0, 1]
        double u2 = (rng() >> 11) * inv53;        // [0, 1)
        double radius = std::sqrt(-2.0 * std::log(u1));
        double z0 = radius * std::cos(two_pi * u2);
        double z1 = radius * std::sin(two_pi * u2);
        long q0 = std::lround(z0 * sd * 1048576.0);
        lambda[i] += Rational(q0, 1048576);
        if (i + 1 < n) {
          long q1 = std::lround(z1 * sd * 1048576.0);
          lambda[i + 1] += Rational(q1, 1048576);
        }
      }
      for (auto& v : lambda) v.canonicalize();
    }

    LPDecodeResult res = lp_decode(lambda, l, spec.mu);
    bool correct = false;
    if (res.solution.status == SolveStatus::Optimal && !res.fractional) {
      try {
        Integer decoded = decode_message(res.solution.point, spec);
        correct = decoded == Integer(static_cast<unsigned long>(mes));
      } catch (const Error&) {
      }
    } else if (res.fractional) {
      rep.fractional_optima++;
    }
    if (!correct) rep.codeword_errors++;

    if (have_ml && res.solution.status == SolveStatus::Optimal) {
      Rational best_obj;
      int argmax_count = 0;
      bool first = true;
      for (const auto& x : codebook) {
        Rational obj = bilinear(lambda, x, spec.mu);
        if (first || obj > best_obj) {
          best_obj = obj;
          argmax_count = 1;
          first = false;
        } else if (obj == best_obj) {
          ++argmax_count;
        }
      }
      if (argmax_count > 1) {
        rep.degenerate_optima++;
      } else if (res.solution.is_vertex && !res.fractional) {
        RationalMatrix ml = ml_bruteforce(lambda, spec.mu, codebook, ml_budget);
        if (!(ml.key() == res.solution.point.key())) rep.ml_mismatches++;
      }
    }
  }
  return rep;
}

}  // namespace permlp
