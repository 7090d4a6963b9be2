// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "permlp/codes.hpp"
#include "permlp/consolidation.hpp"
#include "permlp/constraints.hpp"
#include "permlp/graphs.hpp"
#include "permlp/linalg.hpp"
#include "permlp/lpdecode.hpp"
#include "permlp/perms.hpp"
#include "permlp/polytope.hpp"
#include "permlp/simplex.hpp"

using namespace permlp;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool ok, double secs) {
  std::printf("%s  %2d. %s (%.1f s)\n", ok ? "PASS" : "FAIL", idx, name, secs);
  if (!ok) ++g_failures;
}

void run(int idx, const char* name, const std::function<bool()>& body) {
  auto t0 = Clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::printf("      exception: %s\n", e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  report(idx, name, ok, secs);
}

bool same_vertex_sets(const std::vector<RationalMatrix>& a,
                      const std::vector<RationalMatrix>& b) {
  if (a.size() != b.size()) return false;
  std::set<std::string> ka, kb;
  for (const auto& m : a) ka.insert(m.key());
  for (const auto& m : b) kb.insert(m.key());
  return ka == kb;
}

// A point is a vertex iff it is feasible and its tight reduced inequality
// rows span the reduced space.
bool is_vertex_of(const ConstraintSet& l, const RationalMatrix& x) {
  if (!satisfies(x, l)) return false;
  PolytopeModel m = model(l);
  if (m.empty) return false;
  // Recover t from x = x0 + basis t by solving the overdetermined system.
  RationalRows a(m.dim, RationalRow(m.dim));
  RationalRow b(m.dim);
  // Normal equations are exact over the rationals.
  RationalRow resid(l.n * l.n);
  for (int k = 0; k < l.n * l.n; ++k)
    resid[k] = x.at(k / l.n, k % l.n) - m.x0[k];
  for (int p = 0; p < m.dim; ++p) {
    for (int q = 0; q < m.dim; ++q) {
      Rational s = 0;
      for (int k = 0; k < l.n * l.n; ++k) s += m.basis[p][k] * m.basis[q][k];
      a[p][q] = s;
    }
    Rational s = 0;
    for (int k = 0; k < l.n * l.n; ++k) s += m.basis[p][k] * resid[k];
    b[p] = s;
  }
  auto t_opt = solve_square(a, b);
  if (!t_opt) return false;
  const RationalRow& t = *t_opt;
  RationalRows tight;
  for (std::size_t r = 0; r < m.ineqA.size(); ++r) {
    Rational lhs = 0;
    for (int q = 0; q < m.dim; ++q) lhs += m.ineqA[r][q] * t[q];
    if (lhs == m.ineqb[r]) tight.push_back(m.ineqA[r]);
  }
  return rank(tight) == m.dim;
}

Rational bilinear(const std::vector<Rational>& lambda, const RationalMatrix& x,
                  const std::vector<Rational>& mu) {
  Rational s = 0;
  int n = static_cast<int>(lambda.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += lambda[i] * x.at(i, j) * mu[j];
  return s;
}

std::vector<Rational> random_vec(int n, std::mt19937_64& rng) {
  std::vector<Rational> v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = Rational(static_cast<long>(rng() % 4001) - 2000, 9);
    v[i].canonicalize();
  }
  return v;
}

ConsolidationSpec mixed_block_spec() {
  // nu = 2, R = 3 grid: Birkhoff blocks except the center block, which pins
  // the off-diagonal permutation only. Predicted and enumerated count: 40.
  ConstraintSet off = build_doubly_stochastic(2);
  LinearConstraint c;
  c.coeffs[{0, 0}] = 1;
  c.coeffs[{1, 1}] = 1;
  c.rel = Relation::Equal;
  c.rhs = 0;
  c.label = "diag-zero";
  off.constraints.push_back(c);
  std::vector<std::vector<ConstraintSet>> blocks(
      3, std::vector<ConstraintSet>(3, build_doubly_stochastic(2)));
  blocks[1][1] = off;
  return ConsolidationSpec(BlockStructure(2, 3), std::move(blocks),
                           build_doubly_stochastic(3));
}

std::vector<RationalMatrix> wreath_matrices(const std::vector<Permutation>& base,
                                            int R) {
  std::vector<RationalMatrix> out;
  GroupFamily top(FamilyKind::Symmetric, R);
  Integer topcard = family_size(top);
  long tc = static_cast<long>(topcard.get_si());
  long bc = static_cast<long>(base.size());
  std::vector<long> idx(R, 0);
  for (long t = 0; t < tc; ++t) {
    Permutation sigma = unrank_in_family(top, t);
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      WreathElement w{sigma, {}};
      for (int r = 0; r < R; ++r) w.locals.push_back(base[idx[r]]);
      out.push_back(wreath_to_matrix(w));
      int r = 0;
      for (; r < R; ++r) {
        if (++idx[r] < bc) break;
        idx[r] = 0;
      }
      if (r == R) break;
    }
  }
  return out;
}

}  // namespace

int main() {
  run(1, "Birkhoff vertices are the n! permutation matrices, n = 2..4", [] {
    for (int n = 2; n <= 4; ++n) {
      VertexSet vs = enumerate_vertices(build_doubly_stochastic(n));
      if (!vs.complete) return false;
      long fact = 1;
      for (int k = 2; k <= n; ++k) fact *= k;
      if (static_cast<long>(vs.vertices.size()) != fact) return false;
      for (const auto& v : vs.vertices)
        if (!is_permutation_matrix(v)) return false;
    }
    return true;
  });

  run(2, "pure-involution sets: compact at n = 2, 4; fractional witness at 6",
      [] {
        CompactnessReport r2 = check_compact(build_pure_involution(2));
        if (r2.verdict != CompactVerdict::Compact || !r2.vertex_count ||
            *r2.vertex_count != 1)
          return false;
        CompactnessReport r4 = check_compact(build_pure_involution(4));
        if (r4.verdict != CompactVerdict::Compact || !r4.vertex_count ||
            *r4.vertex_count != 3)
          return false;
        ConstraintSet l6 = build_pure_involution(6);
        CompactnessReport r6 = check_compact(l6);
        if (r6.verdict != CompactVerdict::NotCompact ||
            !r6.fractional_witness)
          return false;
        const RationalMatrix& w = *r6.fractional_witness;
        return !is_permutation_matrix(w) && is_vertex_of(l6, w);
      });

  run(3, "graph-family vertex sets equal the brute-force automorphisms", [] {
    struct Case {
      GraphFamily fam;
      int lo, hi;
    };
    const Case cases[] = {{GraphFamily::Line, 2, 6},
                          {GraphFamily::Circle, 3, 5},
                          {GraphFamily::Cycle, 3, 6},
                          {GraphFamily::Complete, 2, 4}};
    for (const Case& c : cases) {
      for (int n = c.lo; n <= c.hi; ++n) {
        Graph g = make_family(c.fam, n);
        VertexSet vs = enumerate_vertices(build_graph_constraints(g));
        if (!vs.complete) return false;
        std::vector<RationalMatrix> aut;
        for (const auto& p : automorphisms_bruteforce(g))
          aut.push_back(perm_to_matrix(p));
        std::size_t expect = 0;
        switch (c.fam) {
          case GraphFamily::Line: expect = 2; break;
          case GraphFamily::Circle: expect = 2u * n; break;
          case GraphFamily::Cycle: expect = static_cast<std::size_t>(n); break;
          default: {
            expect = 1;
            for (int k = 2; k <= n; ++k) expect *= k;
          }
        }
        if (vs.vertices.size() != expect) return false;
        if (!same_vertex_sets(vs.vertices, aut)) return false;
      }
    }
    return true;
  });

  run(4, "mixed-block consolidation yields exactly the predicted 40 vertices",
      [] {
        ConsolidationSpec spec = mixed_block_spec();
        ConstraintSet big = consolidate(spec);
        VertexSet vs = enumerate_vertices(big);
        if (!vs.complete || vs.vertices.size() != 40) return false;
        // Product construction: choose a top permutation, then one block
        // vertex per row from the selected column's block set.
        std::vector<std::vector<std::vector<RationalMatrix>>> bv(
            3, std::vector<std::vector<RationalMatrix>>(3));
        std::vector<std::vector<Integer>> counts(3, std::vector<Integer>(3));
        for (int r0 = 0; r0 < 3; ++r0)
          for (int r1 = 0; r1 < 3; ++r1) {
            bv[r0][r1] =
                enumerate_vertices(spec.block_constraints[r0][r1]).vertices;
            counts[r0][r1] = Integer(bv[r0][r1].size());
          }
        std::vector<Permutation> top_perms;
        for (long t = 0; t < 6; ++t)
          top_perms.push_back(
              unrank_in_family(GroupFamily(FamilyKind::Symmetric, 3), t));
        if (predicted_vertex_count(spec, top_perms, counts) != 40)
          return false;
        std::vector<RationalMatrix> product;
        for (long t = 0; t < 6; ++t) {
          Permutation sigma =
              unrank_in_family(GroupFamily(FamilyKind::Symmetric, 3), t);
          // Row r of the top permutation matrix selects block column
          // sigma^-1... iterate directly over block placements: block (r0,
          // r1) is active iff top matrix entry (r0, r1) = 1.
          RationalMatrix topm = perm_to_matrix(sigma);
          std::vector<std::pair<int, int>> active;
          for (int r0 = 0; r0 < 3; ++r0)
            for (int r1 = 0; r1 < 3; ++r1)
              if (topm.at(r0, r1) == 1) active.push_back({r0, r1});
          std::vector<int> idx(3, 0);
          while (true) {
            RationalMatrix x(6, 6);
            for (int k = 0; k < 3; ++k) {
              auto [r0, r1] = active[k];
              const RationalMatrix& blk = bv[r0][r1][idx[k]];
              for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                  x.at(2 * r0 + i, 2 * r1 + j) = blk.at(i, j);
            }
            product.push_back(x);
            int k = 0;
            for (; k < 3; ++k) {
              if (++idx[k] <
                  static_cast<int>(bv[active[k].first][active[k].second]
                                       .size()))
                break;
              idx[k] = 0;
            }
            if (k == 3) break;
          }
        }
        return same_vertex_sets(vs.vertices, product);
      });

  run(5, "graph-union vertex sets are the wreath products, R = 2, 3", [] {
    struct Case {
      Graph seed;
      const char* name;
    };
    const Case cases[] = {{make_family(GraphFamily::Televis, 2), "televis"},
                          {make_family(GraphFamily::Circle, 3), "triangle"}};
    for (const Case& c : cases) {
      std::vector<Permutation> base = automorphisms_bruteforce(c.seed);
      for (int R = 2; R <= 3; ++R) {
        Graph u = union_graph(c.seed, R);
        ConstraintSet direct = build_graph_constraints(u);
        VertexSet vs = enumerate_vertices(direct);
        std::vector<RationalMatrix> wreath = wreath_matrices(base, R);
        if (!vs.complete || !same_vertex_sets(vs.vertices, wreath))
          return false;
        // Mutual satisfaction with the consolidated formulation.
        std::vector<std::vector<ConstraintSet>> blocks(
            R, std::vector<ConstraintSet>(
                   R, build_graph_constraints(c.seed)));
        ConstraintSet cons = consolidate(ConsolidationSpec(
            BlockStructure(c.seed.n, R), std::move(blocks),
            build_doubly_stochastic(R)));
        for (const auto& v : vs.vertices)
          if (!satisfies(v, cons)) return false;
        VertexSet vs2 = enumerate_vertices(cons);
        if (!vs2.complete) return false;
        for (const auto& v : vs2.vertices)
          if (!satisfies(v, direct)) return false;
        if (!same_vertex_sets(vs.vertices, vs2.vertices)) return false;
      }
    }
    return true;
  });

  run(6, "televis constraint counts 6R^2+4R and 2R^2+2R; equal LP optima", [] {
    Graph tele = make_family(GraphFamily::Televis, 2);
    for (int R = 1; R <= 5; ++R) {
      ConstraintSet full = build_graph_constraints(union_graph(tele, R));
      if (static_cast<long>(full.constraints.size()) != 6L * R * R + 4 * R)
        return false;
      std::vector<Rational> lambda(2 * R, Rational(1)), mu(2 * R, Rational(1));
      ReducedTelevisLP red = televis_reduced_lp(R, lambda, mu);
      if (static_cast<long>(red.problem.eqA.size() + red.problem.inA.size()) !=
          2L * R * R + 2 * R)
        return false;
    }
    std::mt19937_64 rng(0xACCE97);
    for (int R = 2; R <= 3; ++R) {
      ConstraintSet full = build_graph_constraints(union_graph(tele, R));
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> lambda = random_vec(2 * R, rng);
        std::vector<Rational> mu = random_vec(2 * R, rng);
        ReducedTelevisLP red = televis_reduced_lp(R, lambda, mu);
        LPRawSolution raw = simplex_solve(red.problem);
        LPSolution fs = solve_lp_max(full, lambda, mu);
        if (raw.status != LPStatus::Optimal ||
            fs.status != SolveStatus::Optimal ||
            raw.objective_value != fs.objective_value)
          return false;
      }
    }
    return true;
  });

  run(7, "exhaustive encode/decode roundtrips over three codebooks", [] {
    std::vector<CodeSpec> specs;
    specs.emplace_back(3, 2,
                       std::vector<GroupFamily>{
                           GroupFamily(FamilyKind::Dihedral, 3),
                           GroupFamily(FamilyKind::Dihedral, 3)},
                       GroupFamily(FamilyKind::Symmetric, 2));
    specs.emplace_back(4, 2,
                       std::vector<GroupFamily>{
                           GroupFamily(FamilyKind::PureInv4, 4),
                           GroupFamily(FamilyKind::Symmetric, 4)},
                       GroupFamily(FamilyKind::Cyclic, 2));
    specs.emplace_back(2, 3,
                       std::vector<GroupFamily>{
                           GroupFamily(FamilyKind::Cyclic, 2),
                           GroupFamily(FamilyKind::Cyclic, 2),
                           GroupFamily(FamilyKind::Cyclic, 2)},
                       GroupFamily(FamilyKind::Symmetric, 3));
    const long expected[] = {72, 144, 48};
    for (std::size_t s = 0; s < specs.size(); ++s) {
      Integer card = code_cardinality(specs[s]);
      if (card != expected[s]) return false;
      std::set<std::string> seen;
      for (long mes = 0; mes < expected[s]; ++mes) {
        Codeword cw = encode(mes, specs[s]);
        RationalMatrix x = wreath_to_matrix(cw.element);
        seen.insert(x.key());
        if (decode_message(x, specs[s]) != mes) return false;
      }
      if (static_cast<long>(seen.size()) != expected[s]) return false;
    }
    return true;
  });

  run(8, "LP optimum is a vertex, matches brute force and ML, 100 seeds each",
      [] {
        std::vector<ConstraintSet> sets = {
            build_doubly_stochastic(2),
            build_doubly_stochastic(3),
            build_pure_involution(4),
            build_graph_constraints(make_family(GraphFamily::Line, 4)),
            build_graph_constraints(make_family(GraphFamily::Circle, 4)),
            build_graph_constraints(make_family(GraphFamily::Cycle, 5))};
        std::mt19937_64 rng(0xC0DE);
        for (const auto& l : sets) {
          VertexSet vs = enumerate_vertices(l);
          std::vector<Rational> mu(l.n);
          for (int i = 0; i < l.n; ++i) mu[i] = Rational(i + 1);
          for (int trial = 0; trial < 100; ++trial) {
            std::vector<Rational> lambda = random_vec(l.n, rng);
            LPSolution s = solve_lp_max(l, lambda, mu);
            if (s.status != SolveStatus::Optimal || !s.is_vertex) return false;
            const RationalMatrix* argmax = nullptr;
            Rational best;
            int ties = 0;
            for (const auto& v : vs.vertices) {
              Rational obj = bilinear(lambda, v, mu);
              if (!argmax || obj > best) {
                argmax = &v;
                best = obj;
                ties = 1;
              } else if (obj == best) {
                ++ties;
              }
            }
            if (s.objective_value != best) return false;
            if (ties == 1) {
              LPDecodeResult dec = lp_decode(lambda, l, mu);
              RationalMatrix ml = ml_bruteforce(lambda, mu, vs.vertices);
              if (dec.solution.point.key() != argmax->key() ||
                  ml.key() != argmax->key())
                return false;
            }
          }
        }
        return true;
      });

  run(9, "distance sextet (1,1),(1,1),(2,2) across seed, union, relabeling",
      [] {
        Graph tele = make_family(GraphFamily::Televis, 2);
        auto g1 = automorphisms_bruteforce(tele);
        if (kendall_tau_min(g1) != 1 || euclidean_min(g1) != 1) return false;
        auto g2 = automorphisms_bruteforce(union_graph(tele, 2));
        if (kendall_tau_min(g2) != 1 || euclidean_min(g2) != 1) return false;
        Permutation sigma({0, 2, 1, 3});
        Permutation inv = sigma.inverse();
        std::vector<Permutation> g3;
        for (const auto& g : g2) g3.push_back(compose(inv, compose(g, sigma)));
        if (kendall_tau_min(g3) != 2 || euclidean_min(g3) != 2) return false;
        ConjugationSearchResult found = best_conjugation_search(tele, 2);
        return found.d_l == 2 && found.d_e == 2;
      });

  run(10, "simulation: zero noise is error-free; fixed seeds reproduce", [] {
    CodeSpec spec(2, 2,
                  std::vector<GroupFamily>{GroupFamily(FamilyKind::Cyclic, 2),
                                           GroupFamily(FamilyKind::Cyclic, 2)},
                  GroupFamily(FamilyKind::Symmetric, 2));
    ConstraintSet l = code_constraints(spec);
    SimulationReport clean = simulate(spec, l, Rational(0), 1000, 42);
    if (clean.codeword_errors != 0 || clean.ml_mismatches != 0) return false;
    SimulationReport a = simulate(spec, l, Rational(1, 2), 400, 9001);
    SimulationReport b = simulate(spec, l, Rational(1, 2), 400, 9001);
    if (a.trials != b.trials || a.codeword_errors != b.codeword_errors ||
        a.ml_mismatches != b.ml_mismatches ||
        a.fractional_optima != b.fractional_optima ||
        a.degenerate_optima != b.degenerate_optima ||
        a.noise_variance != b.noise_variance || a.seed != b.seed)
      return false;
    return a.ml_mismatches == 0;
  });

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", g_failures);
  return 1;
}
