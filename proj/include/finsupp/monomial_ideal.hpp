#pragma once

#include <algorithm>
#include <vector>

#include "finsupp/errors.hpp"
#include "finsupp/exact_linalg.hpp"
#include "finsupp/numeric.hpp"

namespace finsupp {

namespace detail {

/// Minimal elements of a set of exponent vectors under componentwise <=.
/// Scanning in total-degree order means any dominator of a candidate is
/// already among the accepted minimal elements.
inline std::vector<Vec> minimalize(std::vector<Vec> gens) {
  std::sort(gens.begin(), gens.end(), [](const Vec& a, const Vec& b) {
    Int sa = sum(a), sb = sum(b);
    if (sa != sb) return sa < sb;
    return lex_less(a, b);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Vec> out;
  for (const Vec& g : gens) {
    bool dominated = false;
    for (const Vec& h : out)
      if (dominates(h, g)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(g);
  }
  sort_lex(out);
  return out;
}

}  // namespace detail

/// Monomial ideal in d local variables, stored as the lex-sorted antichain of
/// minimal generator exponents.  The unit ideal is the single zero vector.
class MonomialIdeal {
 public:
  static MonomialIdeal make(int dim, std::vector<Vec> raw) {
    if (raw.empty()) throw EmptyGenerators("a monomial ideal needs at least one generator");
    for (const Vec& g : raw) {
      if (static_cast<int>(g.size()) != dim) throw DegenerateInput("generator has wrong dimension");
      if (!all_nonnegative(g)) throw DegenerateInput("negative exponent in generator");
    }
    MonomialIdeal I;
    I.dim_ = dim;
    I.gens_ = detail::minimalize(std::move(raw));
    if (I.gens_.size() > 1 || !is_zero(I.gens_.front())) {
      // a unit among generators swallows everything
      for (const Vec& g : I.gens_)
        if (is_zero(g)) {
          I.gens_ = {Vec(static_cast<std::size_t>(dim), Int(0))};
          break;
        }
    }
    return I;
  }

  static MonomialIdeal unit(int dim) { return make(dim, {Vec(static_cast<std::size_t>(dim), Int(0))}); }

  static MonomialIdeal maximal(int dim) {
    std::vector<Vec> gens;
    for (int i = 0; i < dim; ++i) gens.push_back(unit_vector(dim, i));
    return make(dim, std::move(gens));
  }

  int dim() const { return dim_; }
  const std::vector<Vec>& gens() const { return gens_; }

  bool is_unit() const { return gens_.size() == 1 && is_zero(gens_.front()); }

  /// Proper and containing a power of every variable.
  bool is_m_primary() const {
    if (is_unit()) return false;
    for (int i = 0; i < dim_; ++i) {
      bool found = false;
      for (const Vec& g : gens_) {
        bool pure = true;
        for (int j = 0; j < dim_; ++j)
          if (j != i && g[static_cast<std::size_t>(j)] != 0) {
            pure = false;
            break;
          }
        if (pure) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  /// Monomial membership x^a in I.
  bool contains(const Vec& a) const {
    for (const Vec& g : gens_)
      if (dominates(g, a)) return true;
    return false;
  }

  bool operator==(const MonomialIdeal& o) const { return dim_ == o.dim_ && gens_ == o.gens_; }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

 private:
  int dim_ = 0;
  std::vector<Vec> gens_;
};

/// Order of I with respect to the maximal ideal: minimal total degree.
inline Int ord(const MonomialIdeal& I) {
  if (I.is_unit()) throw UnitIdeal("ord of the unit ideal");
  Int r = sum(I.gens().front());
  for (const Vec& g : I.gens()) r = std::min(r, sum(g));
  return r;
}

/// v(I) = min over generators of v . a; equals the minimum over the integral
/// closure.  The unit ideal gives 0.
inline Int valuation_value(const Vec& v, const MonomialIdeal& I) {
  Int r = dot(v, I.gens().front());
  for (const Vec& g : I.gens()) r = std::min(r, dot(v, g));
  return r;
}

/// Membership a in NP(gens) = conv(gens) + R_{>=0}^d, decided exactly via the
/// separating-functional system (Fourier-Motzkin in d+1 variables): a is
/// outside iff some w >= 0 has w.g >= t for all generators and w.a < t.
inline bool np_member(const std::vector<Vec>& gens, const Vec& a) {
  for (const Vec& g : gens)
    if (dominates(g, a)) return true;
  int d = static_cast<int>(a.size());
  std::vector<LinConstraint> cs;
  for (int i = 0; i < d; ++i) {
    LinConstraint c;
    c.coef.assign(static_cast<std::size_t>(d) + 1, Rat(0));
    c.coef[static_cast<std::size_t>(i)] = 1;
    cs.push_back(std::move(c));  // w_i >= 0
  }
  for (const Vec& g : gens) {
    LinConstraint c;
    c.coef.reserve(static_cast<std::size_t>(d) + 1);
    for (const Int& x : g) c.coef.emplace_back(x);
    c.coef.emplace_back(-1);
    cs.push_back(std::move(c));  // w.g - t >= 0
  }
  LinConstraint sep;
  sep.coef.reserve(static_cast<std::size_t>(d) + 1);
  for (const Int& x : a) sep.coef.emplace_back(-Rat(x));
  sep.coef.emplace_back(1);
  sep.rhs = 1;  // t - w.a >= 1 (homogeneous system, so any strict gap scales)
  cs.push_back(std::move(sep));
  return !rational_feasible(cs, d + 1).feasible;
}

/// Facet description of the Newton polyhedron conv(gens) + R_{>=0}^d.
inline std::vector<Facet> newton_facets(const MonomialIdeal& I) {
  Polyhedron P;
  P.dim = I.dim();
  P.points = I.gens();
  for (int i = 0; i < I.dim(); ++i) P.rays.push_back(unit_vector(I.dim(), i));
  return polyhedron_facets(P);
}

namespace detail {

/// Minimal lattice points of the region cut out by `inside`, enumerated over
/// the coordinate box in increasing total degree so minimality falls out of
/// the scan.
template <typename Pred>
std::vector<Vec> minimal_lattice_points(int d, const Vec& box, Pred inside) {
  std::vector<Vec> candidates;
  Vec cur(static_cast<std::size_t>(d), Int(0));
  std::function<void(int)> walk = [&](int pos) {
    if (pos == d) {
      candidates.push_back(cur);
      return;
    }
    for (Int v = 0; v <= box[static_cast<std::size_t>(pos)]; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
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
    if (!covered && inside(a)) out.push_back(a);
  }
  return out;
}

inline Vec generator_box(const MonomialIdeal& I, const Int& factor = 1) {
  Vec box(static_cast<std::size_t>(I.dim()), Int(0));
  for (const Vec& g : I.gens())
    for (int i = 0; i < I.dim(); ++i)
      box[static_cast<std::size_t>(i)] =
          std::max(box[static_cast<std::size_t>(i)], Int(factor * g[static_cast<std::size_t>(i)]));
  return box;
}

}  // namespace detail

/// Integral closure: minimal generators of the lattice points of the Newton
/// polyhedron.  In facet-enumerable dimension the halfspace description
/// decides membership by integer arithmetic; beyond that each candidate goes
/// through the exact feasibility test.
inline MonomialIdeal integral_closure(const MonomialIdeal& I) {
  if (I.is_unit()) return I;
  int d = I.dim();
  Vec box = detail::generator_box(I);
  std::vector<Vec> out;
  if (d <= 5) {
    std::vector<Facet> fs = newton_facets(I);
    out = detail::minimal_lattice_points(d, box, [&](const Vec& a) {
      for (const Facet& f : fs)
        if (dot(f.normal, a) < f.offset) return false;
      return true;
    });
  } else {
    out = detail::minimal_lattice_points(d, box, [&](const Vec& a) { return np_member(I.gens(), a); });
  }
  return MonomialIdeal::make(d, std::move(out));
}

inline bool is_complete(const MonomialIdeal& I) { return integral_closure(I) == I; }

/// Plain product, minimalized.
inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  std::vector<Vec> sums;
  sums.reserve(I.gens().size() * J.gens().size());
  for (const Vec& a : I.gens())
    for (const Vec& b : J.gens()) sums.push_back(add(a, b));
  return MonomialIdeal::make(I.dim(), std::move(sums));
}

inline MonomialIdeal power(const MonomialIdeal& I, int k) {
  MonomialIdeal r = MonomialIdeal::unit(I.dim());
  for (int i = 0; i < k; ++i) r = product(r, I);
  return r;
}

/// The *-product: integral closure of the ordinary product.
inline MonomialIdeal star_product(const MonomialIdeal& I, const MonomialIdeal& J) {
  return integral_closure(product(I, J));
}

/// Closure of I^k, via the scaled Newton polyhedron k*NP(I) when facets are
/// available.
inline MonomialIdeal star_power(const MonomialIdeal& I, int k) {
  if (I.is_unit() || k == 0) return MonomialIdeal::unit(I.dim());
  if (I.dim() > 5) return integral_closure(power(I, k));
  std::vector<Facet> fs = newton_facets(I);
  Vec box = detail::generator_box(I, k);
  std::vector<Vec> out = detail::minimal_lattice_points(I.dim(), box, [&](const Vec& a) {
    for (const Facet& f : fs)
      if (dot(f.normal, a) < k * f.offset) return false;
    return true;
  });
  return MonomialIdeal::make(I.dim(), std::move(out));
}

}  // namespace finsupp
