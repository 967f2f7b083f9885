#pragma once

#include <utility>
#include <vector>

#include "finsupp/inf_near.hpp"
#include "finsupp/monomial_ideal.hpp"

namespace finsupp {

/// The Rees valuations of an m-primary monomial ideal: primitive strictly
/// positive vectors paired with their value on the ideal.
struct ReesSet {
  std::vector<std::pair<Vec, Int>> entries;  // sorted by vector

  bool contains_vector(const Vec& v) const {
    for (const auto& [w, val] : entries)
      if (w == v) return true;
    return false;
  }
  std::vector<Vec> vectors() const {
    std::vector<Vec> r;
    for (const auto& [w, val] : entries) r.push_back(w);
    return r;
  }
};

/// Compact facets of the Newton polyhedron.  For a finitely supported ideal
/// every entry must be the order valuation of a base point; that containment
/// is asserted whenever the base-point tree exists.
inline ReesSet rees_valuations(const MonomialIdeal& I) {
  if (!I.is_m_primary()) throw NotMPrimary("Rees valuations need an m-primary ideal");
  ReesSet out;
  for (const Facet& f : newton_facets(I))
    if (f.compact) out.entries.emplace_back(f.normal, f.offset);

  bool finitely_supported = true;
  BasePointTree tree;
  try {
    tree = base_point_tree(I);
  } catch (const NotFinitelySupported&) {
    finitely_supported = false;
  }
  if (finitely_supported) {
    for (const auto& [v, val] : out.entries) {
      bool found = false;
      for (const auto& [c, m] : tree.nodes)
        if (order_valuation(c) == v) {
          found = true;
          break;
        }
      if (!found)
        throw ConstructionUnverified("a Rees valuation is not an order valuation of a base point");
    }
  }
  return out;
}

/// ord of the chain endpoint occurs among the Rees valuations of I.
inline bool order_in_rees(const QuadraticChain& c, const MonomialIdeal& I) {
  return rees_valuations(I).contains_vector(order_valuation(c));
}

}  // namespace finsupp
