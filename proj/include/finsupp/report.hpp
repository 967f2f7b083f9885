#pragma once

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "finsupp/models.hpp"
#include "finsupp/monomial_io.hpp"
#include "finsupp/rees.hpp"
#include "finsupp/star_simple.hpp"

namespace finsupp::report {

using json = nlohmann::ordered_json;

/// Arbitrary-precision integers: JSON number while it fits, decimal string
/// beyond that.
inline json json_int(const Int& v) {
  static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
  static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
  if (v >= lo && v <= hi) return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

inline json json_vec(const Vec& a) {
  json r = json::array();
  for (const Int& x : a) r.push_back(json_int(x));
  return r;
}

inline json json_vecs(const std::vector<Vec>& vs) {
  json r = json::array();
  for (const Vec& v : vs) r.push_back(json_vec(v));
  return r;
}

inline json chain_json(const QuadraticChain& c, const std::vector<std::string>& vars) {
  json r = json::array();
  for (int j : c.dirs) r.push_back(vars[static_cast<std::size_t>(j)]);
  return r;
}

inline json ideal_json(const MonomialIdeal& I, const std::vector<std::string>& vars) {
  json r;
  r["dimension"] = I.dim();
  r["generators"] = json_vecs(I.gens());
  json mono = json::array();
  for (const Vec& g : I.gens()) mono.push_back(format_monomial(g, vars));
  r["monomials"] = mono;
  return r;
}

inline json tree_json(const BasePointTree& t, const std::vector<std::string>& vars) {
  json nodes = json::array();
  for (const auto& [c, m] : t.nodes) {
    json n;
    n["chain"] = chain_json(c, vars);
    n["multiplicity"] = json_int(m);
    n["order_valuation"] = json_vec(order_valuation(c));
    nodes.push_back(std::move(n));
  }
  json r;
  r["size"] = t.nodes.size();
  r["points"] = std::move(nodes);
  return r;
}

inline json rees_json(const ReesSet& rs, const BasePointTree* tree, const std::vector<std::string>& vars) {
  json entries = json::array();
  for (const auto& [v, val] : rs.entries) {
    json e;
    e["valuation"] = json_vec(v);
    e["value"] = json_int(val);
    if (tree) {
      for (const auto& [c, m] : tree->nodes)
        if (order_valuation(c) == v) {
          e["chain"] = chain_json(c, vars);
          break;
        }
    }
    entries.push_back(std::move(e));
  }
  json r;
  r["count"] = rs.entries.size();
  r["entries"] = std::move(entries);
  return r;
}

inline json factorization_json(const Factorization& f, const std::vector<std::string>& vars) {
  json factors = json::array();
  for (const auto& [c, e] : f.exponents) {
    json x;
    x["chain"] = chain_json(c, vars);
    x["exponent"] = json_int(e);
    factors.push_back(std::move(x));
  }
  json r;
  r["factors"] = std::move(factors);
  return r;
}

inline json special_json(const SpecialStarSimple& s, const QuadraticChain& c, const std::vector<std::string>& vars) {
  json r;
  r["chain"] = chain_json(c, vars);
  r["ideal"] = ideal_json(s.ideal, vars);
  json basis = json::array(), values = json::array();
  for (const Int& b : s.chain_basis) basis.push_back(json_int(b));
  for (const Int& v : s.chain_values) values.push_back(json_int(v));
  r["point_basis"] = std::move(basis);
  r["chain_values"] = std::move(values);
  r["completeness_checked"] = s.completeness_checked;
  return r;
}

inline json class_group_json(const DivClassGroup& cl) {
  json r;
  r["free_rank"] = cl.free_rank;
  json t = json::array();
  for (const Int& f : cl.torsion) t.push_back(json_int(f));
  r["torsion"] = std::move(t);
  r["description"] = cl.to_string();
  return r;
}

inline json face_json(const FaceReport& f, const std::vector<std::string>& vars) {
  json r;
  r["facet_valuations"] = json_vecs(f.prime.facet_normals);
  r["stratum_dim"] = f.prime.stratum_dim;
  r["height"] = f.prime.height;
  r["smooth"] = f.smooth;
  r["embedding_dim"] = f.embedding_dim;
  r["class_group"] = class_group_json(f.cl);
  return r;
}

inline json chart_json(const AffineChart& ch, const ChartAnalysis& an, const std::vector<std::string>& vars) {
  json r;
  r["center"] = format_monomial(ch.center, vars);
  json gens = json::array(), laurent = json::array();
  for (const Vec& g : ch.gens) {
    gens.push_back(json_vec(g));
    laurent.push_back(format_laurent(g, vars));
  }
  r["generators"] = std::move(gens);
  r["ring_generators"] = std::move(laurent);
  r["pointed"] = ch.pointed;
  r["saturated"] = ch.saturated_flag;
  if (!ch.pointed) {
    json lin = json::array();
    for (const Vec& u : ch.units_basis) lin.push_back(format_laurent(u, vars));
    r["unit_monomials"] = std::move(lin);
  }
  r["normal"] = an.normal;
  r["smooth"] = an.smooth;
  r["embedding_dim"] = an.embedding_dim;
  r["class_group"] = class_group_json(an.cl);
  json facets = json::array();
  for (const Facet& f : ch.facets) facets.push_back(json_vec(f.normal));
  r["facet_valuations"] = std::move(facets);
  json sing = json::array();
  for (const FaceReport& f : an.singular) sing.push_back(face_json(f, vars));
  r["singular_faces"] = std::move(sing);
  return r;
}

inline json model_json(const ProjectiveModel& m, const std::vector<std::string>& vars) {
  json r;
  r["ideal"] = ideal_json(m.ideal, vars);
  r["normalized"] = m.saturated;
  r["regular"] = m.report.regular;
  r["singular_locus_dim"] = m.report.singular_locus_dim;
  json census = json::array();
  for (const CensusEntry& e : m.report.census) {
    json c;
    c["facet_valuations"] = json_vecs(e.key);
    c["stratum_dim"] = e.stratum_dim;
    c["local_dim"] = e.local_dim;
    c["class_group"] = class_group_json(e.cl);
    c["component_generic_point"] = e.maximal;
    json charts = json::array();
    for (std::size_t ci : e.chart_ids) charts.push_back(format_monomial(m.charts[ci].chart.center, vars));
    c["charts"] = std::move(charts);
    census.push_back(std::move(c));
  }
  r["singular_census"] = std::move(census);
  json charts = json::array();
  for (const ModelChart& mc : m.charts) {
    json c = chart_json(mc.chart, mc.analysis, vars);
    c["redundant"] = mc.redundant;
    charts.push_back(std::move(c));
  }
  r["charts"] = std::move(charts);
  return r;
}

inline const char* flag_str(Flag f) {
  switch (f) {
    case Flag::Yes:
      return "yes";
    case Flag::No:
      return "no";
    default:
      return "unknown within bound";
  }
}

inline json conditions_json(const SaturationConditions& sc) {
  json r;
  r["product_divides"] = sc.product_divides;
  r["each_special_divides"] = sc.each_divides;
  r["product_divides_power"] = flag_str(sc.product_divides_power);
  if (sc.product_divides_power == Flag::Yes) r["power"] = sc.power_found;
  r["transforms_divisible_by_maximal"] = sc.transforms_divisible;
  r["power_transforms_divisible"] = flag_str(sc.power_transforms_divisible);
  if (sc.power_transforms_divisible == Flag::Yes) r["transform_power"] = sc.transform_power_found;
  return r;
}

inline json satfact_json(const SaturatedFactorization& sf, const std::vector<std::string>& vars) {
  json r;
  r["saturated_factorization"] = sf.saturated;
  r["rees_matches_base_points"] = sf.rees_matches_base_points;
  r["rees"] = rees_json(sf.rees, nullptr, vars);
  r["base_point_valuations"] = json_vecs(sf.base_point_valuations);
  if (sf.rees_matches_base_points) {
    r["regular"] = sf.report.regular;
    r["singular_points"] = sf.report.census.size();
  }
  return r;
}

inline json distinct_models_json(const DistinctModels& dm, const std::vector<std::string>& vars) {
  json r;
  r["experimental"] = true;
  r["count"] = dm.count;
  json reps = json::array();
  for (const auto& e : dm.representatives) {
    json one = json::array();
    for (const auto& [c, exp] : e) {
      if (exp == 0) continue;
      json f;
      f["chain"] = chain_json(c, vars);
      f["exponent"] = json_int(exp);
      one.push_back(std::move(f));
    }
    reps.push_back(std::move(one));
  }
  r["representatives"] = std::move(reps);
  return r;
}

}  // namespace finsupp::report
