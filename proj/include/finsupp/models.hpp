#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "finsupp/rees.hpp"
#include "finsupp/star_simple.hpp"
#include "finsupp/toric_chart.hpp"

namespace finsupp {

struct ModelChart {
  AffineChart chart;
  ChartAnalysis analysis;
  bool redundant = false;  // non-pointed cone: the center is not a vertex
};

/// A singular stratum of the model, identified across charts by the facet
/// valuations of its localized cone.
struct CensusEntry {
  std::vector<Vec> key;               // facet normals containing the face
  int stratum_dim = 0;
  int local_dim = 0;
  DivClassGroup cl;
  std::vector<std::size_t> chart_ids;
  bool maximal = false;  // generic point of a singular-locus component
};

struct ModelReport {
  bool regular = false;
  std::vector<CensusEntry> census;  // deduplicated singular faces
  int singular_locus_dim = -1;      // max stratum dimension, -1 when regular
};

struct ProjectiveModel {
  MonomialIdeal ideal;  // the closed ideal that was blown up
  bool saturated = false;
  std::vector<ModelChart> charts;
  ModelReport report;

  /// Canonical identity: the set of saturated chart cones.
  std::vector<std::vector<Vec>> chart_keys() const {
    std::vector<std::vector<Vec>> keys;
    for (const ModelChart& mc : charts) keys.push_back(mc.chart.facet_key());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
  }
};

namespace detail {

inline ModelReport build_census(const std::vector<ModelChart>& charts) {
  ModelReport rep;
  std::map<std::vector<Vec>, CensusEntry> dedup;
  for (std::size_t ci = 0; ci < charts.size(); ++ci) {
    for (const FaceReport& f : charts[ci].analysis.singular) {
      auto it = dedup.find(f.prime.facet_normals);
      if (it == dedup.end()) {
        CensusEntry e;
        e.key = f.prime.facet_normals;
        e.stratum_dim = f.prime.stratum_dim;
        e.local_dim = f.prime.height;
        e.cl = f.cl;
        e.chart_ids.push_back(ci);
        dedup.emplace(e.key, std::move(e));
      } else {
        it->second.chart_ids.push_back(ci);
        if (it->second.local_dim != f.prime.height || !(it->second.cl == f.cl))
          throw ConstructionUnverified("the same stratum analyzed differently in two charts");
      }
    }
  }
  for (auto& [k, e] : dedup) rep.census.push_back(std::move(e));
  // a stratum is a component's generic point when no other singular stratum
  // is more generic: strictly fewer facet valuations through it
  for (CensusEntry& e : rep.census) {
    e.maximal = true;
    for (const CensusEntry& o : rep.census) {
      if (o.key == e.key) continue;
      if (std::includes(e.key.begin(), e.key.end(), o.key.begin(), o.key.end())) e.maximal = false;
    }
    if (!e.maximal) continue;
  }
  rep.regular = rep.census.empty();
  rep.singular_locus_dim = -1;
  for (const CensusEntry& e : rep.census) rep.singular_locus_dim = std::max(rep.singular_locus_dim, e.stratum_dim);
  return rep;
}

}  // namespace detail

/// Proj of the Rees algebra (saturate = false) or of its integral closure
/// (saturate = true): one chart per minimal generator of the closed ideal.
inline ProjectiveModel blowup_model(const MonomialIdeal& I, bool saturate) {
  if (!I.is_m_primary()) throw NotMPrimary("blowup models need an m-primary ideal");
  ProjectiveModel model;
  model.ideal = integral_closure(I);
  model.saturated = saturate;
  for (const Vec& g : model.ideal.gens()) {
    ModelChart mc;
    mc.chart = chart(model.ideal, g, saturate);
    mc.analysis = analyze_chart(mc.chart);
    mc.redundant = !mc.chart.pointed;
    model.charts.push_back(std::move(mc));
  }
  model.report = detail::build_census(model.charts);

  // the charts jointly cover: every Rees valuation is a facet valuation of
  // some chart
  ReesSet rees = rees_valuations(model.ideal);
  for (const auto& [v, val] : rees.entries) {
    bool found = false;
    for (const ModelChart& mc : model.charts) {
      for (const Facet& f : mc.chart.facets)
        if (f.normal == v) {
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) throw ConstructionUnverified("a Rees valuation is not a facet valuation of any chart");
  }
  return model;
}

inline ProjectiveModel normalized_blowup(const MonomialIdeal& I) { return blowup_model(I, true); }

// ---------------------------------------------------------------------------
// The saturated regular model of a base-point configuration
// ---------------------------------------------------------------------------

/// A finite tree shape of infinitely near points: the chains must be closed
/// under truncation and share the ambient dimension.
struct GammaShape {
  int dim = 0;
  std::vector<QuadraticChain> chains;  // sorted, prefix-closed, root included
};

inline GammaShape make_gamma(int dim, std::vector<QuadraticChain> chains) {
  GammaShape g;
  g.dim = dim;
  chains.push_back(QuadraticChain(dim, {}));
  std::sort(chains.begin(), chains.end());
  chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
  for (const QuadraticChain& c : chains) {
    if (c.dim != dim) throw InvalidGamma("chains of mixed ambient dimension");
    if (c.length() > 0) {
      QuadraticChain p = c.parent();
      if (!std::binary_search(chains.begin(), chains.end(), p))
        throw InvalidGamma("configuration is not closed under truncation");
    }
  }
  g.chains = std::move(chains);
  return g;
}

inline std::vector<QuadraticChain> gamma_leaves(const GammaShape& g) {
  std::vector<QuadraticChain> leaves;
  for (const QuadraticChain& c : g.chains) {
    bool has_child = false;
    for (const QuadraticChain& o : g.chains)
      if (o.length() == c.length() + 1 && c.is_prefix_of(o)) has_child = true;
    if (!has_child) leaves.push_back(c);
  }
  return leaves;
}

/// The ideal whose blowup is the saturated regular model: the *-product of
/// the special *-simple ideals of all points of the configuration.
inline MonomialIdeal gamma_ideal(const GammaShape& g, const std::map<QuadraticChain, Int>* exponents = nullptr) {
  MonomialIdeal I = MonomialIdeal::unit(g.dim);
  for (const QuadraticChain& c : g.chains) {
    Int e = 1;
    if (exponents) {
      auto it = exponents->find(c);
      e = (it == exponents->end()) ? Int(0) : it->second;
    }
    MonomialIdeal P = special_star_simple(c);
    for (Int i = 0; i < e; ++i) I = star_product(I, P);
  }
  return I;
}

/// Blow up every point of the configuration: the result must be regular, and
/// its base points must be exactly the configuration.
inline ProjectiveModel x_gamma(const GammaShape& g) {
  MonomialIdeal I = gamma_ideal(g);
  BasePointTree t = base_point_tree(I);
  if (t.size() != g.chains.size()) throw ConstructionUnverified("base points of the product differ from the configuration");
  for (const QuadraticChain& c : g.chains)
    if (!t.contains(c)) throw ConstructionUnverified("base points of the product differ from the configuration");
  ProjectiveModel model = blowup_model(I, false);
  if (!model.report.regular)
    throw ConstructionUnverified("the saturated regular model came out singular: construction bug");
  return model;
}

// ---------------------------------------------------------------------------
// Saturated factorization decision
// ---------------------------------------------------------------------------

struct SaturatedFactorization {
  bool saturated = false;
  bool rees_matches_base_points = false;
  std::vector<Vec> base_point_valuations;  // sorted
  ReesSet rees;
  ModelReport report;  // of the normalized blowup (when computed)
};

/// Theorem-backed decision: the normalized blowup is regular iff the ideal
/// has a saturated factorization.  The Rees-set equality is a necessary
/// condition checked first.
inline SaturatedFactorization saturated_factorization(const MonomialIdeal& I) {
  if (!is_complete(I)) throw NotComplete("saturated factorization is about complete ideals");
  SaturatedFactorization out;
  BasePointTree t = base_point_tree(I);
  for (const auto& [c, m] : t.nodes) out.base_point_valuations.push_back(order_valuation(c));
  sort_lex(out.base_point_valuations);
  out.rees = rees_valuations(I);
  std::vector<Vec> rv = out.rees.vectors();
  sort_lex(rv);
  out.rees_matches_base_points = (rv == out.base_point_valuations);
  if (!out.rees_matches_base_points) {
    out.saturated = false;  // necessary condition fails; no model needed
    return out;
  }
  ProjectiveModel model = normalized_blowup(I);
  out.report = model.report;
  out.saturated = model.report.regular;
  return out;
}

// ---------------------------------------------------------------------------
// Counting distinct models over a configuration (experimental)
// ---------------------------------------------------------------------------

struct DistinctModels {
  int count = 0;
  // one representative exponent pattern per model class
  std::vector<std::map<QuadraticChain, Int>> representatives;
};

/// Models Proj of the normalized Rees algebra over all complete ideals with
/// the given base points: terminal points always occur with exponent one,
/// interior supports range over all subsets.  Counts are reported without
/// asserting anything beyond the computed classes.
inline DistinctModels distinct_models(const GammaShape& g, long budget = 4096) {
  std::vector<QuadraticChain> leaves = gamma_leaves(g);
  std::vector<QuadraticChain> interior;
  for (const QuadraticChain& c : g.chains)
    if (std::find(leaves.begin(), leaves.end(), c) == leaves.end()) interior.push_back(c);
  if (interior.size() > 20 || (1L << interior.size()) > budget)
    throw SearchBudgetExceeded("too many interior-support patterns");

  std::map<std::vector<std::vector<Vec>>, std::map<QuadraticChain, Int>> classes;
  for (long mask = 0; mask < (1L << interior.size()); ++mask) {
    std::map<QuadraticChain, Int> exps;
    for (const QuadraticChain& c : leaves) exps[c] = 1;
    for (std::size_t i = 0; i < interior.size(); ++i)
      if (mask & (1L << i)) exps[interior[i]] = 1;
    MonomialIdeal I = gamma_ideal(g, &exps);
    ProjectiveModel model = normalized_blowup(I);
    classes.emplace(model.chart_keys(), exps);
  }
  DistinctModels out;
  out.count = static_cast<int>(classes.size());
  for (auto& [k, e] : classes) out.representatives.push_back(e);
  return out;
}

}  // namespace finsupp
