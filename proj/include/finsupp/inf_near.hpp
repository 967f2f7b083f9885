#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "finsupp/errors.hpp"
#include "finsupp/monomial_ideal.hpp"

namespace finsupp {

/// A monomial infinitely near point: the sequence of coordinate directions
/// chosen at each local quadratic transform.  The empty chain is the root.
struct QuadraticChain {
  int dim = 0;
  std::vector<int> dirs;  // 0-based coordinate indices, each in [0, dim)

  QuadraticChain() = default;
  QuadraticChain(int d, std::vector<int> ds) : dim(d), dirs(std::move(ds)) {
    for (int j : dirs)
      if (j < 0 || j >= dim) throw DegenerateInput("chain direction out of range");
  }

  int length() const { return static_cast<int>(dirs.size()); }
  bool is_root() const { return dirs.empty(); }

  QuadraticChain prefix(int len) const {
    return QuadraticChain(dim, std::vector<int>(dirs.begin(), dirs.begin() + len));
  }
  QuadraticChain parent() const { return prefix(length() - 1); }
  QuadraticChain child(int j) const {
    QuadraticChain c = *this;
    c.dirs.push_back(j);
    return c;
  }
  bool is_prefix_of(const QuadraticChain& o) const {
    if (length() > o.length()) return false;
    return std::equal(dirs.begin(), dirs.end(), o.dirs.begin());
  }

  bool operator==(const QuadraticChain& o) const { return dim == o.dim && dirs == o.dirs; }
  bool operator!=(const QuadraticChain& o) const { return !(*this == o); }
  bool operator<(const QuadraticChain& o) const {
    if (dirs.size() != o.dirs.size()) return dirs.size() < o.dirs.size();
    return dirs < o.dirs;
  }
};

/// One step down: the value vector of a valuation in the child coordinates of
/// the quadratic transform along direction j.
inline Vec forward_propagate(const Vec& v, int j) {
  Vec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    w[i] = (static_cast<int>(i) == j) ? v[i] : v[i] - v[static_cast<std::size_t>(j)];
  return w;
}

/// One step up: parent-coordinate values from child-coordinate values.
inline Vec backward_propagate(const Vec& w, int j) {
  Vec v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    v[i] = (static_cast<int>(i) == j) ? w[i] : w[i] + w[static_cast<std::size_t>(j)];
  return v;
}

/// Value vector, in root coordinates, of the order valuation of the chain's
/// endpoint: all-ones at the leaf, back-propagated to the root.
inline Vec order_valuation(const QuadraticChain& c) {
  Vec v(static_cast<std::size_t>(c.dim), Int(1));
  for (int k = c.length() - 1; k >= 0; --k) v = backward_propagate(v, c.dirs[static_cast<std::size_t>(k)]);
  return v;
}

/// Values, in level `to`'s coordinates, of the order valuation of the level
/// `from` point on the chain (from <= to forward, from >= to backward).
inline Vec order_valuation_between(const QuadraticChain& c, int from, int to) {
  Vec v(static_cast<std::size_t>(c.dim), Int(1));
  if (to >= from) {
    for (int k = from; k < to; ++k) v = forward_propagate(v, c.dirs[static_cast<std::size_t>(k)]);
  } else {
    for (int k = from - 1; k >= to; --k) v = backward_propagate(v, c.dirs[static_cast<std::size_t>(k)]);
  }
  return v;
}

/// The monomial transform of I along coordinate direction j: r = ord(I) and
/// generator exponents a with a_j replaced by |a| - r.  The exact identity is
/// I R' = u_j^r I'.
inline std::pair<Int, MonomialIdeal> transform(const MonomialIdeal& I, int j) {
  Int r = ord(I);
  std::vector<Vec> gens;
  gens.reserve(I.gens().size());
  for (const Vec& a : I.gens()) {
    Vec b = a;
    b[static_cast<std::size_t>(j)] = sum(a) - r;
    gens.push_back(std::move(b));
  }
  return {r, MonomialIdeal::make(I.dim(), std::move(gens))};
}

/// Iterated transform along a chain.
inline MonomialIdeal transform_along(const MonomialIdeal& I, const QuadraticChain& c) {
  MonomialIdeal J = I;
  for (int j : c.dirs) {
    if (J.is_unit()) return J;
    J = transform(J, j).second;
  }
  return J;
}

/// Point b (a chain extending chain a) is proximate to point a when the order
/// valuation of a is nonnegative on b's coordinates.
inline bool proximate(const QuadraticChain& descendant, int upper_level, int lower_level) {
  return all_nonnegative(order_valuation_between(descendant, lower_level, upper_level));
}

/// All proximity pairs (j, k), j > k, along a single chain.  Consecutive
/// levels are always proximate.
inline std::vector<std::pair<int, int>> proximity(const QuadraticChain& c) {
  std::vector<std::pair<int, int>> rel;
  for (int k = 0; k < c.length(); ++k)
    for (int j = k + 1; j <= c.length(); ++j)
      if (proximate(c, j, k)) rel.emplace_back(j, k);
  return rel;
}

inline int max_transform_depth() {
  if (const char* env = std::getenv("FINSUPP_MAX_DEPTH")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 32;
}

/// Rooted tree of monomial base points with the point-basis multiplicity
/// ord(I^{R_k}) at each node.  Nodes are keyed by chain, closed under prefix.
struct BasePointTree {
  int dim = 0;
  std::map<QuadraticChain, Int> nodes;

  bool contains(const QuadraticChain& c) const { return nodes.count(c) > 0; }
  const Int& multiplicity(const QuadraticChain& c) const { return nodes.at(c); }
  std::size_t size() const { return nodes.size(); }

  std::vector<QuadraticChain> chains() const {
    std::vector<QuadraticChain> r;
    for (const auto& [c, m] : nodes) r.push_back(c);
    return r;
  }
  std::vector<QuadraticChain> leaves() const {
    std::vector<QuadraticChain> r;
    for (const auto& [c, m] : nodes) {
      bool has_child = false;
      for (const auto& [o, m2] : nodes)
        if (o.length() == c.length() + 1 && c.is_prefix_of(o)) {
          has_child = true;
          break;
        }
      if (!has_child) r.push_back(c);
    }
    return r;
  }

  bool operator==(const BasePointTree& o) const { return dim == o.dim && nodes == o.nodes; }
};

namespace detail {

inline void base_point_rec(const MonomialIdeal& J, const QuadraticChain& chain, int depth_cap, BasePointTree& tree) {
  tree.nodes.emplace(chain, ord(J));
  for (int j = 0; j < J.dim(); ++j) {
    auto [r, Jt] = transform(J, j);
    if (Jt.is_unit()) continue;
    QuadraticChain child = chain.child(j);
    if (!Jt.is_m_primary()) {
      std::string msg = "proper non-primary transform along chain [";
      for (std::size_t i = 0; i < child.dirs.size(); ++i)
        msg += (i ? "," : "") + std::to_string(child.dirs[i]);
      msg += "], transform generated by";
      for (const Vec& g : Jt.gens()) msg += " " + finsupp::to_string(g);
      throw NotFinitelySupported(msg);
    }
    if (child.length() > depth_cap) throw DepthExceeded("transform recursion exceeded depth cap");
    base_point_rec(Jt, child, depth_cap, tree);
  }
}

}  // namespace detail

/// Base points of an m-primary monomial ideal by direct transform recursion
/// over the coordinate charts.  A proper ideal with positive-dimensional
/// cosupport already has infinitely many base points.
inline BasePointTree base_point_tree(const MonomialIdeal& I) {
  if (I.is_unit()) throw NotMPrimary("the unit ideal has no base points");
  if (!I.is_m_primary())
    throw NotFinitelySupported("the ideal itself has positive-dimensional cosupport");
  BasePointTree tree;
  tree.dim = I.dim();
  detail::base_point_rec(I, QuadraticChain(I.dim(), {}), max_transform_depth(), tree);
  return tree;
}

/// Point basis of I over a fixed tree: ord of the transform at each node
/// (zero where the transform is trivial).
inline std::map<QuadraticChain, Int> point_basis_on(const BasePointTree& tree, const MonomialIdeal& I) {
  std::map<QuadraticChain, Int> basis;
  for (const auto& [c, m] : tree.nodes) {
    MonomialIdeal t = transform_along(I, c);
    basis[c] = t.is_unit() ? Int(0) : ord(t);
  }
  return basis;
}

}  // namespace finsupp
