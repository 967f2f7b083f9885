#pragma once

// Brute-force reference implementations used only by the test suites.
// These deliberately share no nontrivial code with the main algorithms:
// feasibility runs a phase-1 simplex instead of Fourier-Motzkin, and the
// semigroup oracles enumerate sets directly.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "finsupp/exact_linalg.hpp"
#include "finsupp/numeric.hpp"

namespace finsupp::oracle {

// ---------------------------------------------------------------------------
// Exact phase-1 simplex feasibility for { x : C x >= d, E x = f }
// ---------------------------------------------------------------------------

class SimplexFeasibility {
 public:
  explicit SimplexFeasibility(int nvars) : n_(nvars) {}

  void add_ge(const std::vector<Rat>& coef, const Rat& rhs) { rows_.push_back({coef, rhs, false}); }
  void add_eq(const std::vector<Rat>& coef, const Rat& rhs) { rows_.push_back({coef, rhs, true}); }

  bool feasible() const {
    // variables: x+ (n), x- (n), slack per inequality, artificial per row
    int m = static_cast<int>(rows_.size());
    if (m == 0) return true;
    int nslack = 0;
    for (const Row& r : rows_)
      if (!r.eq) ++nslack;
    int ncols = 2 * n_ + nslack + m;
    std::vector<std::vector<Rat>> T(static_cast<std::size_t>(m),
                                    std::vector<Rat>(static_cast<std::size_t>(ncols) + 1, Rat(0)));
    std::vector<int> basis(static_cast<std::size_t>(m));
    int s = 0;
    for (int i = 0; i < m; ++i) {
      const Row& r = rows_[static_cast<std::size_t>(i)];
      auto& t = T[static_cast<std::size_t>(i)];
      for (int j = 0; j < n_; ++j) {
        t[static_cast<std::size_t>(j)] = r.coef[static_cast<std::size_t>(j)];
        t[static_cast<std::size_t>(n_ + j)] = -r.coef[static_cast<std::size_t>(j)];
      }
      if (!r.eq) t[static_cast<std::size_t>(2 * n_ + s++)] = -1;  // Cx - slack = d
      t[static_cast<std::size_t>(ncols)] = r.rhs;
      if (t[static_cast<std::size_t>(ncols)] < 0)
        for (auto& v : t) v = -v;
      int art = 2 * n_ + nslack + i;
      t[static_cast<std::size_t>(art)] = 1;
      basis[static_cast<std::size_t>(i)] = art;
    }
    // objective: minimize sum of artificials -> row of reduced costs
    std::vector<Rat> obj(static_cast<std::size_t>(ncols) + 1, Rat(0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= ncols; ++j) obj[static_cast<std::size_t>(j)] += T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    for (int i = 0; i < m; ++i) obj[static_cast<std::size_t>(2 * n_ + nslack + i)] = 0;

    while (true) {
      int pivot_col = -1;  // Bland: smallest index with positive reduced cost
      for (int j = 0; j < ncols; ++j)
        if (obj[static_cast<std::size_t>(j)] > 0) {
          pivot_col = j;
          break;
        }
      if (pivot_col < 0) break;
      int pivot_row = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        const Rat& a = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivot_col)];
        if (a <= 0) continue;
        Rat ratio = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(ncols)] / a;
        if (pivot_row < 0 || ratio < best ||
            (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(pivot_row)])) {
          best = ratio;
          pivot_row = i;
        }
      }
      if (pivot_row < 0) break;  // unbounded phase-1 direction cannot happen, defensive stop
      pivot(T, obj, pivot_row, pivot_col, ncols);
      basis[static_cast<std::size_t>(pivot_row)] = pivot_col;
    }
    Rat value = 0;
    for (int i = 0; i < m; ++i)
      if (basis[static_cast<std::size_t>(i)] >= 2 * n_ + nslack)
        value += T[static_cast<std::size_t>(i)][static_cast<std::size_t>(ncols)];
    return value == 0;
  }

 private:
  struct Row {
    std::vector<Rat> coef;
    Rat rhs;
    bool eq;
  };

  static void pivot(std::vector<std::vector<Rat>>& T, std::vector<Rat>& obj, int pr, int pc, int ncols) {
    auto& prow = T[static_cast<std::size_t>(pr)];
    Rat p = prow[static_cast<std::size_t>(pc)];
    for (auto& v : prow) v /= p;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (static_cast<int>(i) == pr) continue;
      Rat f = T[i][static_cast<std::size_t>(pc)];
      if (f == 0) continue;
      for (int j = 0; j <= ncols; ++j) T[i][static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
    }
    Rat f = obj[static_cast<std::size_t>(pc)];
    if (f != 0)
      for (int j = 0; j <= ncols; ++j) obj[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
  }

  int n_;
  std::vector<Row> rows_;
};

/// Exact Newton-polyhedron membership: a in conv(gens) + R_{>=0}^d, decided
/// by simplex on the convex-combination weights.
inline bool brute_np_membership(const std::vector<Vec>& gens, const Vec& a) {
  int k = static_cast<int>(gens.size());
  SimplexFeasibility lp(k);
  int d = static_cast<int>(a.size());
  for (int i = 0; i < k; ++i) {
    std::vector<Rat> row(static_cast<std::size_t>(k), Rat(0));
    row[static_cast<std::size_t>(i)] = 1;
    lp.add_ge(row, 0);
  }
  std::vector<Rat> ones(static_cast<std::size_t>(k), Rat(1));
  lp.add_eq(ones, 1);
  for (int j = 0; j < d; ++j) {
    std::vector<Rat> row(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) row[static_cast<std::size_t>(i)] = -Rat(gens[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    lp.add_ge(row, -Rat(a[static_cast<std::size_t>(j)]));  // sum w_i g_ij <= a_j
  }
  return lp.feasible();
}

// ---------------------------------------------------------------------------
// Semigroup oracles (direct enumeration inside a coordinate box)
// ---------------------------------------------------------------------------

/// All semigroup elements of grading value <= bound, for a grading that is
/// strictly positive on the generators.  Partial sums only increase the
/// grade, so the breadth-first closure is complete below the bound.
inline std::set<Vec> semigroup_elements_up_to_grade(const std::vector<Vec>& gens, const Vec& grading,
                                                    const Int& bound) {
  std::set<Vec> seen;
  std::vector<Vec> frontier;
  Vec zero(gens.empty() ? 0 : gens.front().size(), Int(0));
  seen.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& s : frontier)
      for (const Vec& g : gens) {
        Vec t = add(s, g);
        if (dot(grading, t) <= bound && seen.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Monomials of symbolic power n of the facet prime, listed up to the grade
/// bound: semigroup elements with facet value at least n.
inline std::set<Vec> brute_symbolic_power(const std::vector<Vec>& gens, const Vec& facet_valuation, const Int& n,
                                          const Vec& grading, const Int& bound) {
  std::set<Vec> out;
  for (const Vec& s : semigroup_elements_up_to_grade(gens, grading, bound))
    if (dot(facet_valuation, s) >= n) out.insert(s);
  return out;
}

/// Hilbert-Samuel length table: l(k) = #{ s : adic order of s < k } for
/// k = 1..n_max, by iterated set sums M^k inside a grading bound.
inline std::vector<Int> brute_hilbert_samuel(const std::vector<Vec>& mingens, const Vec& grading, int n_max) {
  // elements of grade <= G for G big enough that every element of adic order
  // < n_max has grade < G_cut; grade(s) >= order(s) * min_grade(gen)
  Int gmin;
  bool first = true;
  for (const Vec& g : mingens) {
    Int v = dot(grading, g);
    if (first || v < gmin) {
      gmin = v;
      first = false;
    }
  }
  Int gmax = 0;
  for (const Vec& g : mingens) gmax = std::max(gmax, dot(grading, g));
  Int cut = gmax * n_max;  // any sum of < n_max gens has grade <= cut
  std::set<Vec> all;       // semigroup elements with grade <= cut
  std::vector<Vec> frontier;
  Vec zero(mingens.front().size(), Int(0));
  all.insert(zero);
  frontier.push_back(zero);
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& s : frontier)
      for (const Vec& g : mingens) {
        Vec t = add(s, g);
        if (dot(grading, t) <= cut && all.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  // M^k via iterated sums
  std::set<Vec> power = all;  // M^0 = everything
  std::vector<std::set<Vec>> powers;
  for (int k = 1; k <= n_max; ++k) {
    std::set<Vec> nx;
    for (const Vec& s : power)
      for (const Vec& g : mingens) {
        Vec t = add(s, g);
        if (dot(grading, t) <= cut) nx.insert(t);
      }
    power = std::move(nx);
    powers.push_back(power);
  }
  std::vector<Int> lengths;
  for (int k = 1; k <= n_max; ++k) {
    // count elements not in M^k whose grade is certain: grade < k * gmin
    // guarantees representability questions are settled inside the cut
    Int count = 0;
    const std::set<Vec>& mk = powers[static_cast<std::size_t>(k - 1)];
    for (const Vec& s : all)
      if (!mk.count(s)) ++count;
    lengths.push_back(count);
  }
  return lengths;
}

}  // namespace finsupp::oracle
