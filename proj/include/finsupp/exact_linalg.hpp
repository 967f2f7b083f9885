#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "finsupp/errors.hpp"
#include "finsupp/numeric.hpp"

namespace finsupp {

// ---------------------------------------------------------------------------
// Integer matrices
// ---------------------------------------------------------------------------

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Int(0)) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static IntMatrix from_rows(const std::vector<Vec>& rws, int c) {
    IntMatrix m(static_cast<int>(rws.size()), c);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = rws[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
  }

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  void swap_rows(int i, int k) {
    for (int j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
  }
  void swap_cols(int j, int l) {
    for (int i = 0; i < rows; ++i) std::swap(at(i, j), at(i, l));
  }
};

/// Rank over Q, by fraction-free elimination.
inline int rank(IntMatrix m) {
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    m.swap_rows(r, piv);
    for (int i = r + 1; i < m.rows; ++i) {
      if (m.at(i, col) == 0) continue;
      Int g = gcd_int(m.at(i, col), m.at(r, col));
      Int ci = m.at(i, col) / g, cr = m.at(r, col) / g;
      for (int j = col; j < m.cols; ++j) m.at(i, j) = m.at(i, j) * cr - m.at(r, j) * ci;
    }
    ++r;
  }
  return r;
}

/// Determinant of a square matrix (Bareiss fraction-free elimination).
inline Int determinant(IntMatrix m) {
  if (m.rows != m.cols) throw DegenerateInput("determinant of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

struct SmithResult {
  std::vector<Int> factors;  // d_1 | d_2 | ... | d_r, positive, factors 1 retained
  int rank = 0;
  IntMatrix colops;  // unimodular V with U*A*V diagonal; pi(a) = a*V splits coordinates
};

namespace detail {

inline bool snf_find_pivot(const IntMatrix& m, int t, int& pi, int& pj) {
  using boost::multiprecision::abs;
  Int best = 0;
  pi = -1;
  pj = -1;
  for (int i = t; i < m.rows; ++i)
    for (int j = t; j < m.cols; ++j) {
      if (m.at(i, j) == 0) continue;
      Int v = abs(m.at(i, j));
      if (pi < 0 || v < best) {
        best = v;
        pi = i;
        pj = j;
      }
    }
  return pi >= 0;
}

}  // namespace detail

/// Invariant factors of the integer matrix: Z^cols / rowspace(A) is
/// Z^(cols-rank) + sum Z/d_i.  Factors equal to 1 are kept so that the
/// factor count equals the rank.
inline SmithResult smith_normal_form(IntMatrix m) {
  using boost::multiprecision::abs;
  SmithResult res;
  res.colops = IntMatrix::identity(m.cols);
  IntMatrix& V = res.colops;
  int t = 0;
  int lim = std::min(m.rows, m.cols);
  while (t < lim) {
    int pi, pj;
    if (!detail::snf_find_pivot(m, t, pi, pj)) break;
    m.swap_rows(t, pi);
    m.swap_cols(t, pj);
    V.swap_cols(t, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < m.rows; ++i) {
        while (m.at(i, t) != 0) {
          Int q = m.at(i, t) / m.at(t, t);
          if (q != 0)
            for (int j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
          if (m.at(i, t) != 0) {
            m.swap_rows(i, t);
            dirty = true;
          }
        }
      }
      for (int j = t + 1; j < m.cols; ++j) {
        while (m.at(t, j) != 0) {
          Int q = m.at(t, j) / m.at(t, t);
          if (q != 0)
            for (int i = 0; i < m.rows; ++i) {
              m.at(i, j) -= q * m.at(i, t);
            }
          if (q != 0)
            for (int i = 0; i < V.rows; ++i) V.at(i, j) -= q * V.at(i, t);
          if (m.at(t, j) != 0) {
            m.swap_cols(j, t);
            V.swap_cols(j, t);
            dirty = true;
          }
        }
      }
      if (!dirty) {
        // pivot must divide the remaining block, else absorb a bad row and redo
        for (int i = t + 1; i < m.rows && !dirty; ++i)
          for (int j = t + 1; j < m.cols && !dirty; ++j)
            if (m.at(i, j) % m.at(t, t) != 0) {
              for (int l = t; l < m.cols; ++l) m.at(t, l) += m.at(i, l);
              dirty = true;
            }
      }
    }
    ++t;
  }
  res.rank = t;
  for (int i = 0; i < t; ++i) res.factors.push_back(abs(m.at(i, i)));
  return res;
}

/// The quotient Z^d / saturation(span of the given vectors), presented by a
/// projection matrix, plus the torsion index [saturation : span].
struct LatticeQuotient {
  int rank = 0;                // rank of the sublattice
  IntMatrix proj;              // d x (d-rank); pi(a) = a * proj
  Int torsion_index = 1;       // product of invariant factors
};

inline LatticeQuotient lattice_quotient(const std::vector<Vec>& gens, int d) {
  LatticeQuotient q;
  if (gens.empty()) {
    q.rank = 0;
    q.proj = IntMatrix::identity(d);
    return q;
  }
  SmithResult s = smith_normal_form(IntMatrix::from_rows(gens, d));
  q.rank = s.rank;
  q.proj = IntMatrix(d, d - s.rank);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d - s.rank; ++j) q.proj.at(i, j) = s.colops.at(i, s.rank + j);
  for (const Int& f : s.factors) q.torsion_index *= f;
  return q;
}

inline Vec apply_projection(const IntMatrix& proj, const Vec& a) {
  Vec r(static_cast<std::size_t>(proj.cols), Int(0));
  for (int j = 0; j < proj.cols; ++j)
    for (int i = 0; i < proj.rows; ++i) r[static_cast<std::size_t>(j)] += a[static_cast<std::size_t>(i)] * proj.at(i, j);
  return r;
}

// ---------------------------------------------------------------------------
// Exact linear feasibility (Fourier-Motzkin)
// ---------------------------------------------------------------------------

enum class Rel { Ge, Eq };

/// coef . x >= rhs  (or == rhs)
struct LinConstraint {
  std::vector<Rat> coef;
  Rel rel = Rel::Ge;
  Rat rhs = 0;
};

struct FeasibleResult {
  bool feasible = false;
  std::vector<Rat> witness;  // valid point when feasible
};

namespace detail {

// Canonical integer-primitive form of an inequality; used to deduplicate and
// to keep only the strongest rhs per direction.
inline std::pair<Vec, Rat> normal_form(const std::vector<Rat>& coef, const Rat& rhs) {
  Int den = 1;
  for (const Rat& c : coef) den = den / gcd_int(den, denominator(c)) * denominator(c);
  Vec v(coef.size());
  Int g = 0;
  for (std::size_t i = 0; i < coef.size(); ++i) {
    v[i] = numerator(coef[i]) * (den / denominator(coef[i]));
    g = gcd_int(g, v[i]);
  }
  if (g == 0) return {v, rhs > 0 ? Rat(1) : Rat(0)};  // 0 >= rhs: only sign matters
  Rat r = rhs * Rat(den, g);
  for (Int& x : v) x /= g;
  return {v, r};
}

}  // namespace detail

/// Exact feasibility of a finite system of affine constraints, by equality
/// substitution followed by Fourier-Motzkin elimination.  Returns a rational
/// witness point when feasible.
inline FeasibleResult rational_feasible(std::vector<LinConstraint> cs, int nvars) {
  struct Definition {  // x_var = (rhs - sum coef_i x_i) / div
    int var;
    std::vector<Rat> coef;
    Rat rhs;
    Rat div;
  };
  std::vector<Definition> defs;

  // substitute equalities away
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k].rel != Rel::Eq) continue;
    int var = -1;
    for (int j = 0; j < nvars; ++j)
      if (cs[k].coef[static_cast<std::size_t>(j)] != 0) {
        var = j;
        break;
      }
    if (var < 0) {
      if (cs[k].rhs != 0) return {false, {}};
      cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(k));
      --k;
      continue;
    }
    Definition def{var, cs[k].coef, cs[k].rhs, cs[k].coef[static_cast<std::size_t>(var)]};
    def.coef[static_cast<std::size_t>(var)] = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i == k) continue;
      Rat& cv = cs[i].coef[static_cast<std::size_t>(var)];
      if (cv == 0) continue;
      Rat f = cv / def.div;
      for (int j = 0; j < nvars; ++j)
        cs[i].coef[static_cast<std::size_t>(j)] -= f * def.coef[static_cast<std::size_t>(j)];
      cs[i].rhs -= f * def.rhs;
      cv = 0;
    }
    defs.push_back(std::move(def));
    cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(k));
    --k;
  }

  // deduplicated inequality pool
  auto compact = [&](std::vector<LinConstraint>& pool) -> bool {
    std::map<Vec, Rat> best;
    for (const LinConstraint& c : pool) {
      auto [v, r] = detail::normal_form(c.coef, c.rhs);
      if (is_zero(v)) {
        if (r > 0) return false;
        continue;
      }
      auto it = best.find(v);
      if (it == best.end())
        best.emplace(std::move(v), r);
      else if (r > it->second)
        it->second = r;
    }
    pool.clear();
    for (auto& [v, r] : best) {
      LinConstraint c;
      c.coef.reserve(v.size());
      for (const Int& x : v) c.coef.emplace_back(x);
      c.rhs = r;
      pool.push_back(std::move(c));
    }
    return true;
  };
  if (!compact(cs)) return {false, {}};

  struct Frame {
    int var;
    std::vector<LinConstraint> lower;  // coef[var] > 0
    std::vector<LinConstraint> upper;  // coef[var] < 0
  };
  std::vector<Frame> frames;

  while (true) {
    // pick the variable with the fewest pairings
    int var = -1;
    long best_cost = 0;
    for (int j = 0; j < nvars; ++j) {
      long pos = 0, neg = 0;
      for (const LinConstraint& c : cs) {
        if (c.coef[static_cast<std::size_t>(j)] > 0) ++pos;
        if (c.coef[static_cast<std::size_t>(j)] < 0) ++neg;
      }
      if (pos + neg == 0) continue;
      long cost = pos * neg;
      if (var < 0 || cost < best_cost) {
        var = j;
        best_cost = cost;
      }
    }
    if (var < 0) break;

    Frame fr;
    fr.var = var;
    std::vector<LinConstraint> rest;
    for (LinConstraint& c : cs) {
      const Rat& cv = c.coef[static_cast<std::size_t>(var)];
      if (cv > 0)
        fr.lower.push_back(std::move(c));
      else if (cv < 0)
        fr.upper.push_back(std::move(c));
      else
        rest.push_back(std::move(c));
    }
    for (const LinConstraint& lo : fr.lower)
      for (const LinConstraint& up : fr.upper) {
        // (-u_v) * lo + l_v * up, coefficient of var cancels
        Rat lv = lo.coef[static_cast<std::size_t>(var)];
        Rat uv = -up.coef[static_cast<std::size_t>(var)];
        LinConstraint c;
        c.coef.resize(static_cast<std::size_t>(nvars));
        for (int j = 0; j < nvars; ++j)
          c.coef[static_cast<std::size_t>(j)] =
              uv * lo.coef[static_cast<std::size_t>(j)] + lv * up.coef[static_cast<std::size_t>(j)];
        c.rhs = uv * lo.rhs + lv * up.rhs;
        rest.push_back(std::move(c));
      }
    cs = std::move(rest);
    frames.push_back(std::move(fr));
    if (!compact(cs)) return {false, {}};
  }

  // feasible; reconstruct a witness
  std::vector<Rat> x(static_cast<std::size_t>(nvars), Rat(0));
  auto partial_value = [&](const LinConstraint& c, int var) {
    // (rhs - sum_{j != var} coef_j x_j) / coef_var
    Rat s = c.rhs;
    for (int j = 0; j < nvars; ++j)
      if (j != var) s -= c.coef[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    return s / c.coef[static_cast<std::size_t>(var)];
  };
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    std::optional<Rat> lo, hi;
    for (const LinConstraint& c : it->lower) {
      Rat v = partial_value(c, it->var);
      if (!lo || v > *lo) lo = v;
    }
    for (const LinConstraint& c : it->upper) {
      Rat v = partial_value(c, it->var);
      if (!hi || v < *hi) hi = v;
    }
    Rat val = 0;
    if (lo && hi)
      val = (*lo + *hi) / 2;
    else if (lo)
      val = *lo;
    else if (hi)
      val = *hi;
    x[static_cast<std::size_t>(it->var)] = val;
  }
  for (auto it = defs.rbegin(); it != defs.rend(); ++it) {
    Rat s = it->rhs;
    for (int j = 0; j < nvars; ++j) s -= it->coef[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(it->var)] = s / it->div;
  }
  return {true, std::move(x)};
}

// ---------------------------------------------------------------------------
// Facet enumeration for low-dimensional polyhedra conv(points) + cone(rays)
// ---------------------------------------------------------------------------

struct Polyhedron {
  int dim = 0;
  std::vector<Vec> points;
  std::vector<Vec> rays;
};

/// Supporting halfspace normal . a >= offset, tight on a (dim-1)-face.
struct Facet {
  Vec normal;  // primitive, inward
  Int offset;
  bool compact = false;  // all normal coordinates > 0
};

inline bool operator<(const Facet& a, const Facet& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}
inline bool operator==(const Facet& a, const Facet& b) {
  return a.normal == b.normal && a.offset == b.offset;
}

/// Primitive kernel vector of dim-1 directions in Z^dim (generalized cross
/// product); empty when the directions are dependent.
inline Vec hyperplane_normal(const std::vector<Vec>& dirs, int dim) {
  if (static_cast<int>(dirs.size()) != dim - 1) throw DegenerateInput("hyperplane_normal arity");
  if (dim == 1) return Vec{Int(1)};
  Vec n(static_cast<std::size_t>(dim));
  int sign = 1;
  for (int skip = 0; skip < dim; ++skip) {
    IntMatrix minor(dim - 1, dim - 1);
    for (int i = 0; i < dim - 1; ++i) {
      int cj = 0;
      for (int j = 0; j < dim; ++j) {
        if (j == skip) continue;
        minor.at(i, cj++) = dirs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
    }
    n[static_cast<std::size_t>(skip)] = sign * determinant(minor);
    sign = -sign;
  }
  if (is_zero(n)) return {};
  return primitive(std::move(n));
}

namespace detail {

/// p in conv(points) + cone(rays), via the separating-functional system.
inline bool in_hull(const std::vector<Vec>& points, const std::vector<Vec>& rays, const Vec& p) {
  int d = static_cast<int>(p.size());
  std::vector<LinConstraint> cs;
  for (const Vec& q : points) {
    LinConstraint c;
    for (const Int& x : q) c.coef.emplace_back(x);
    c.coef.emplace_back(-1);
    cs.push_back(std::move(c));  // w.q - t >= 0
  }
  for (const Vec& r : rays) {
    LinConstraint c;
    for (const Int& x : r) c.coef.emplace_back(x);
    c.coef.emplace_back(0);
    cs.push_back(std::move(c));  // w.r >= 0
  }
  LinConstraint sep;
  for (const Int& x : p) sep.coef.emplace_back(-Rat(x));
  sep.coef.emplace_back(1);
  sep.rhs = 1;
  cs.push_back(std::move(sep));
  return !rational_feasible(cs, d + 1).feasible;
}

/// Extreme points among `points` relative to cone(rays): conv(points)+cone
/// is unchanged when the others are dropped, and every facet is spanned by
/// extreme points and rays.
inline std::vector<Vec> extreme_points(const std::vector<Vec>& points, const std::vector<Vec>& rays) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Vec> others;
    others.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (others.empty() || !in_hull(others, rays, points[i])) out.push_back(points[i]);
  }
  return out;
}

inline void subsets_of_size(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      idx[static_cast<std::size_t>(depth)] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (k == 0)
    fn({});
  else if (k <= n)
    rec(0, 0);
}

inline std::vector<Facet> enumerate_facets(std::vector<Vec> points, const std::vector<Vec>& rays, int d) {
  if (points.size() > 12) points = extreme_points(points, rays);
  std::vector<Facet> out;
  auto consider = [&](const Vec& n0, const Int& c0) {
    for (int s = 0; s < 2; ++s) {
      Vec n = s ? negate(n0) : n0;
      Int c = s ? -c0 : c0;
      bool ok = true;
      for (const Vec& r : rays)
        if (dot(n, r) < 0) {
          ok = false;
          break;
        }
      Int minv;
      bool first = true;
      for (const Vec& p : points) {
        if (!ok) break;
        Int v = dot(n, p);
        if (first || v < minv) {
          minv = v;
          first = false;
        }
      }
      if (ok && minv == c) {
        Facet f{n, c, all_positive(n)};
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
        return;
      }
    }
  };

  if (d == 1) {
    Int c = dot(Vec{Int(1)}, points[0]);
    for (const Vec& p : points) c = std::min(c, p[0]);
    consider(Vec{Int(1)}, c);
    std::sort(out.begin(), out.end());
    return out;
  }

  int np = static_cast<int>(points.size());
  int nr = static_cast<int>(rays.size());
  for (int k = 1; k <= std::min(d, np); ++k) {
    if (d - k > nr) continue;
    subsets_of_size(np, k, [&](const std::vector<int>& ps) {
      subsets_of_size(nr, d - k, [&](const std::vector<int>& rs) {
        std::vector<Vec> dirs;
        dirs.reserve(static_cast<std::size_t>(d - 1));
        for (int i = 1; i < k; ++i)
          dirs.push_back(sub(points[static_cast<std::size_t>(ps[static_cast<std::size_t>(i)])],
                             points[static_cast<std::size_t>(ps[0])]));
        for (int ri : rs) dirs.push_back(rays[static_cast<std::size_t>(ri)]);
        Vec n = hyperplane_normal(dirs, d);
        if (n.empty()) return;
        consider(n, dot(n, points[static_cast<std::size_t>(ps[0])]));
      });
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Complete irredundant facet list of a full-dimensional polyhedron.
inline std::vector<Facet> polyhedron_facets(const Polyhedron& P) {
  if (P.points.empty()) throw DegenerateInput("polyhedron has no points");
  std::vector<Vec> dirs;
  for (std::size_t i = 1; i < P.points.size(); ++i) dirs.push_back(sub(P.points[i], P.points[0]));
  for (const Vec& r : P.rays) dirs.push_back(r);
  int dir_rank = dirs.empty() ? 0 : rank(IntMatrix::from_rows(dirs, P.dim));
  if (dir_rank < P.dim) throw DegenerateInput("polyhedron is not full-dimensional");
  return detail::enumerate_facets(P.points, P.rays, P.dim);
}

/// Facets of cone(rays), all offsets zero.  Works for non-pointed cones.
inline std::vector<Facet> cone_facets(const std::vector<Vec>& rays, int d) {
  std::vector<Vec> zero{Vec(static_cast<std::size_t>(d), Int(0))};
  return detail::enumerate_facets(zero, rays, d);
}

}  // namespace finsupp
