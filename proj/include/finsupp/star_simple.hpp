#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "finsupp/errors.hpp"
#include "finsupp/inf_near.hpp"
#include "finsupp/monomial_ideal.hpp"

namespace finsupp {

using PointBasis = std::map<QuadraticChain, Int>;

/// ord_{R_k}-value of the exceptional coordinate created by blowing up the
/// level-m point of the chain; 1 when m is the endpoint itself.
inline Int exceptional_value(const QuadraticChain& c, int k, int m) {
  if (m == k) return 1;
  Vec w = order_valuation_between(c, k, m + 1);
  return w[static_cast<std::size_t>(c.dirs[static_cast<std::size_t>(m)])];
}

/// v_k(I) is linear in the point basis: p_k = sum over prefixes m of
/// b_m * e_{m,k}.  Nodes must be prefix-closed; missing basis entries are 0.
inline std::map<QuadraticChain, Int> profile_from_basis(const std::vector<QuadraticChain>& nodes,
                                                        const PointBasis& basis) {
  std::map<QuadraticChain, Int> profile;
  for (const QuadraticChain& c : nodes) {
    Int p = 0;
    for (int m = 0; m <= c.length(); ++m) {
      auto it = basis.find(c.prefix(m));
      if (it == basis.end() || it->second == 0) continue;
      p += it->second * exceptional_value(c, c.length(), m);
    }
    profile[c] = p;
  }
  return profile;
}

/// Minimal generators of { a >= 0 : v_k . a >= p_k for all k }.  Such a set
/// is an intersection of valuation ideals, hence integrally closed.
inline MonomialIdeal realize_profile(int dim, const std::vector<std::pair<Vec, Int>>& cuts) {
  bool all_trivial = true;
  for (const auto& [v, p] : cuts)
    if (p > 0) all_trivial = false;
  if (all_trivial) return MonomialIdeal::unit(dim);

  Vec box(static_cast<std::size_t>(dim), Int(0));
  for (const auto& [v, p] : cuts) {
    if (p <= 0) continue;
    for (int i = 0; i < dim; ++i)
      box[static_cast<std::size_t>(i)] =
          std::max(box[static_cast<std::size_t>(i)], ceil_div(p, v[static_cast<std::size_t>(i)]));
  }

  std::vector<Vec> candidates;
  Vec cur(static_cast<std::size_t>(dim), Int(0));
  std::function<void(int)> walk = [&](int pos) {
    if (pos == dim) {
      candidates.push_back(cur);
      return;
    }
    for (Int t = 0; t <= box[static_cast<std::size_t>(pos)]; ++t) {
      cur[static_cast<std::size_t>(pos)] = t;
      walk(pos + 1);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  walk(0);
  std::sort(candidates.begin(), candidates.end(), [](const Vec& a, const Vec& b) {
    Int sa = sum(a), sb = sum(b);
    if (sa != sb) return sa < sb;
    return lex_less(a, b);
  });

  std::vector<Vec> out;
  for (const Vec& a : candidates) {
    bool covered = false;
    for (const Vec& g : out)
      if (dominates(g, a)) {
        covered = true;
        break;
      }
    if (covered) continue;
    bool inside = true;
    for (const auto& [v, p] : cuts)
      if (dot(v, a) < p) {
        inside = false;
        break;
      }
    if (inside) out.push_back(a);
  }
  return MonomialIdeal::make(dim, std::move(out));
}

/// Realize a point basis over a fixed prefix-closed node set.
inline MonomialIdeal realize_point_basis(int dim, const std::vector<QuadraticChain>& nodes,
                                         const PointBasis& basis) {
  auto profile = profile_from_basis(nodes, basis);
  std::vector<std::pair<Vec, Int>> cuts;
  for (const auto& [c, p] : profile) cuts.emplace_back(order_valuation(c), p);
  return realize_profile(dim, cuts);
}

// ---------------------------------------------------------------------------
// Special *-simple ideals
// ---------------------------------------------------------------------------

struct SpecialStarSimple {
  MonomialIdeal ideal;
  std::vector<Int> chain_basis;   // proximity-recursion multiplicities r_0..r_n
  std::vector<Int> chain_values;  // c_k = v_k(P) for k = 0..n
  bool completeness_checked = false;
};

/// Construct-and-verify the special *-simple ideal of a chain: point basis by
/// the proximity recursion, values c_k, then the lattice ideal the values cut
/// out.  Every defining property is checked before returning.
inline SpecialStarSimple special_star_simple_full(const QuadraticChain& c) {
  int n = c.length();
  SpecialStarSimple out;
  out.chain_basis.assign(static_cast<std::size_t>(n) + 1, Int(0));
  out.chain_basis[static_cast<std::size_t>(n)] = 1;
  for (int k = n - 1; k >= 0; --k) {
    Int r = 0;
    for (int j = k + 1; j <= n; ++j)
      if (proximate(c, j, k)) r += out.chain_basis[static_cast<std::size_t>(j)];
    out.chain_basis[static_cast<std::size_t>(k)] = r;
  }
  std::vector<std::pair<Vec, Int>> cuts;
  for (int k = 0; k <= n; ++k) {
    Int ck = 0;
    for (int m = 0; m <= k; ++m) ck += out.chain_basis[static_cast<std::size_t>(m)] * exceptional_value(c, k, m);
    out.chain_values.push_back(ck);
    cuts.emplace_back(order_valuation(c.prefix(k)), ck);
  }
  out.ideal = realize_profile(c.dim, cuts);

  // verification
  if (ord(out.ideal) != out.chain_basis[0])
    throw ConstructionUnverified("order differs from the proximity recursion value");
  MonomialIdeal leaf = transform_along(out.ideal, c);
  if (leaf != MonomialIdeal::maximal(c.dim))
    throw ConstructionUnverified("transform at the chain endpoint is not the maximal ideal");
  BasePointTree tree = base_point_tree(out.ideal);
  if (tree.size() != static_cast<std::size_t>(n) + 1)
    throw ConstructionUnverified("base point tree is not the chain");
  for (int k = 0; k <= n; ++k) {
    QuadraticChain pre = c.prefix(k);
    if (!tree.contains(pre) || tree.multiplicity(pre) != out.chain_basis[static_cast<std::size_t>(k)])
      throw ConstructionUnverified("base point multiplicities differ from the proximity recursion");
  }
  if (c.dim <= 4) {
    if (!is_complete(out.ideal)) throw ConstructionUnverified("constructed ideal is not integrally closed");
    out.completeness_checked = true;
  }
  return out;
}

inline MonomialIdeal special_star_simple(const QuadraticChain& c) { return special_star_simple_full(c).ideal; }

// ---------------------------------------------------------------------------
// Factorization and divisibility
// ---------------------------------------------------------------------------

struct Factorization {
  BasePointTree tree;
  std::map<QuadraticChain, Int> exponents;  // possibly negative
};

/// Unique factorization of a complete finitely supported ideal as a
/// *-product of special *-simple ideals.  The point-basis system is
/// triangular from the leaves.
inline Factorization lipman_factorization(const MonomialIdeal& I) {
  if (!is_complete(I)) throw NotComplete("factorization needs an integrally closed ideal");
  Factorization f;
  f.tree = base_point_tree(I);

  std::vector<QuadraticChain> nodes = f.tree.chains();
  std::sort(nodes.begin(), nodes.end(), [](const QuadraticChain& a, const QuadraticChain& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.dirs < b.dirs;
  });

  std::map<QuadraticChain, MonomialIdeal> specials;
  std::map<QuadraticChain, PointBasis> special_bases;
  for (const QuadraticChain& c : nodes) {
    specials.emplace(c, special_star_simple(c));
    special_bases.emplace(c, point_basis_on(f.tree, specials.at(c)));
  }

  for (const QuadraticChain& c : nodes) {
    Int residual = f.tree.multiplicity(c);
    for (const auto& [solved, a] : f.exponents) residual -= a * special_bases.at(solved).at(c);
    f.exponents[c] = residual;  // the special ideal of c has basis entry 1 at c
  }

  // valuation profile of the product must reproduce v_k(I)
  for (const auto& [c, mult] : f.tree.nodes) {
    Vec w = order_valuation(c);
    Int lhs = 0;
    for (const auto& [node, a] : f.exponents) lhs += a * valuation_value(w, specials.at(node));
    if (lhs != valuation_value(w, I))
      throw ConstructionUnverified("factorization does not reproduce the valuation profile");
  }
  return f;
}

namespace detail {

/// Realize a candidate point basis and accept it only if the realized ideal
/// has exactly that basis.
inline std::optional<MonomialIdeal> realize_if_exact(int dim, const std::vector<QuadraticChain>& nodes,
                                                     const PointBasis& basis) {
  bool trivial = true;
  for (const auto& [c, b] : basis)
    if (b != 0) trivial = false;
  if (trivial) return MonomialIdeal::unit(dim);
  MonomialIdeal Q = realize_point_basis(dim, nodes, basis);
  if (Q.is_unit()) return std::nullopt;
  BasePointTree qt;
  try {
    qt = base_point_tree(Q);
  } catch (const MathError&) {
    return std::nullopt;
  }
  for (const auto& [c, m] : qt.nodes) {
    auto it = basis.find(c);
    if (it == basis.end() || it->second != m) return std::nullopt;
  }
  for (const auto& [c, b] : basis) {
    if (b == 0) continue;
    if (!qt.contains(c) || qt.multiplicity(c) != b) return std::nullopt;
  }
  return Q;
}

}  // namespace detail

/// Whether a complete ideal Q with D * Q = I exists.  The candidate quotient
/// basis B(I) - B(D) is realized and verified; any valuation obstruction is a
/// fast negative.
inline bool star_divides(const MonomialIdeal& D, const MonomialIdeal& I) {
  if (!is_complete(D)) throw NotComplete("divisor is not integrally closed");
  if (!is_complete(I)) throw NotComplete("dividend is not integrally closed");
  if (D.dim() != I.dim()) throw DegenerateInput("dimension mismatch");
  BasePointTree ti = base_point_tree(I);
  BasePointTree td = base_point_tree(D);

  std::vector<QuadraticChain> nodes;
  {
    std::map<QuadraticChain, bool> seen;
    for (const auto& [c, m] : ti.nodes) seen[c] = true;
    for (const auto& [c, m] : td.nodes) seen[c] = true;
    for (const auto& [c, b] : seen) nodes.push_back(c);
  }

  PointBasis diff;
  for (const QuadraticChain& c : nodes) {
    Vec w = order_valuation(c);
    if (valuation_value(w, D) > valuation_value(w, I)) return false;  // valuation obstruction
  }
  {
    PointBasis bi = point_basis_on(ti, I), bd;
    BasePointTree shared;
    shared.dim = I.dim();
    for (const QuadraticChain& c : nodes) shared.nodes[c] = 0;
    bi = point_basis_on(shared, I);
    bd = point_basis_on(shared, D);
    for (const QuadraticChain& c : nodes) {
      Int b = bi.at(c) - bd.at(c);
      if (b < 0) return false;
      diff[c] = b;
    }
  }

  auto Q = detail::realize_if_exact(I.dim(), nodes, diff);
  if (!Q) return false;
  return star_product(D, *Q) == I;
}

// ---------------------------------------------------------------------------
// *-simplicity
// ---------------------------------------------------------------------------

struct SimplicityResult {
  bool simple = false;
  std::optional<std::pair<MonomialIdeal, MonomialIdeal>> factors;
};

/// Exhaustive search over componentwise splittings of the point basis.  Both
/// summands must be realizable and their *-product must reproduce I.
inline SimplicityResult star_simplicity_check(const MonomialIdeal& I, long budget = 200000) {
  if (!is_complete(I)) throw NotComplete("simplicity check needs an integrally closed ideal");
  BasePointTree tree = base_point_tree(I);
  std::vector<QuadraticChain> nodes = tree.chains();
  std::vector<Int> total;
  for (const QuadraticChain& c : nodes) total.push_back(tree.multiplicity(c));

  Int count = 1;
  for (const Int& t : total) count *= t + 1;
  if (count > budget)
    throw SearchBudgetExceeded("splitting candidates exceed budget " + std::to_string(budget));

  std::vector<Int> part(total.size(), Int(0));
  SimplicityResult res;
  std::function<bool(std::size_t)> walk = [&](std::size_t pos) -> bool {
    if (pos == total.size()) {
      PointBasis b1, b2;
      bool empty1 = true, empty2 = true;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        b1[nodes[i]] = part[i];
        b2[nodes[i]] = total[i] - part[i];
        if (part[i] != 0) empty1 = false;
        if (total[i] - part[i] != 0) empty2 = false;
      }
      if (empty1 || empty2) return false;
      if (b1.at(QuadraticChain(I.dim(), {})) < 1 || b2.at(QuadraticChain(I.dim(), {})) < 1) return false;
      auto A = detail::realize_if_exact(I.dim(), nodes, b1);
      if (!A) return false;
      auto B = detail::realize_if_exact(I.dim(), nodes, b2);
      if (!B) return false;
      if (star_product(*A, *B) != I) return false;
      res.factors = std::make_pair(*A, *B);
      return true;
    }
    for (Int v = 0; v <= total[pos]; ++v) {
      part[pos] = v;
      if (walk(pos + 1)) return true;
    }
    part[pos] = 0;
    return false;
  };
  res.simple = !walk(0);
  return res;
}

// ---------------------------------------------------------------------------
// Saturated-factorization conditions
// ---------------------------------------------------------------------------

enum class Flag { Yes, No, Unknown };

struct SaturationConditions {
  bool product_divides = false;        // (1)  P_0 * ... * P_n | I
  bool each_divides = false;           // (2)  every P_i | I
  Flag product_divides_power = Flag::Unknown;  // (3)  P_0 * ... * P_n | I^k
  int power_found = 0;
  bool transforms_divisible = false;   // (4)  m_S | complete transform of I at every S
  Flag power_transforms_divisible = Flag::Unknown;  // (5)  same for I^k
  int transform_power_found = 0;
};

inline MonomialIdeal complete_transform(const MonomialIdeal& I, const QuadraticChain& c) {
  return integral_closure(transform_along(I, c));
}

inline SaturationConditions saturation_conditions(const MonomialIdeal& I, int k_bound = 6) {
  MonomialIdeal C = integral_closure(I);
  BasePointTree tree = base_point_tree(C);
  SaturationConditions out;

  MonomialIdeal prod = MonomialIdeal::unit(I.dim());
  std::vector<MonomialIdeal> specials;
  for (const auto& [c, m] : tree.nodes) {
    specials.push_back(special_star_simple(c));
    prod = star_product(prod, specials.back());
  }

  out.product_divides = star_divides(prod, C);
  out.each_divides = true;
  for (const MonomialIdeal& P : specials)
    if (!star_divides(P, C)) {
      out.each_divides = false;
      break;
    }
  for (int k = 1; k <= k_bound; ++k) {
    if (star_divides(prod, star_power(C, k))) {
      out.product_divides_power = Flag::Yes;
      out.power_found = k;
      break;
    }
  }

  auto transforms_ok = [&](const MonomialIdeal& J) {
    for (const auto& [c, m] : tree.nodes) {
      MonomialIdeal T = complete_transform(J, c);
      if (T.is_unit()) continue;
      if (!star_divides(MonomialIdeal::maximal(I.dim()), T)) return false;
    }
    return true;
  };
  out.transforms_divisible = transforms_ok(C);
  if (out.transforms_divisible) {
    out.power_transforms_divisible = Flag::Yes;
    out.transform_power_found = 1;
  } else {
    for (int k = 2; k <= k_bound; ++k)
      if (transforms_ok(star_power(C, k))) {
        out.power_transforms_divisible = Flag::Yes;
        out.transform_power_found = k;
        break;
      }
  }

  // implication chain (1) => (2) => (3) and (4) => (5); Unknown never refutes
  if (out.product_divides && !out.each_divides)
    throw ConstructionUnverified("condition chain violated: (1) without (2)");
  if (out.each_divides && out.product_divides_power == Flag::No)
    throw ConstructionUnverified("condition chain violated: (2) without (3)");
  return out;
}

}  // namespace finsupp
