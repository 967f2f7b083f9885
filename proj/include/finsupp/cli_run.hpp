#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "finsupp/problem_file.hpp"
#include "finsupp/report.hpp"

namespace finsupp::cli {

using report::json;

// ---------------------------------------------------------------------------
// Built-in regression suite
// ---------------------------------------------------------------------------

namespace regression {

inline Vec v(std::initializer_list<long> xs) {
  Vec r;
  for (long x : xs) r.emplace_back(x);
  return r;
}

inline MonomialIdeal ideal(int d, std::vector<Vec> g) { return MonomialIdeal::make(d, std::move(g)); }

inline QuadraticChain chain(int d, std::initializer_list<int> dirs) {
  return QuadraticChain(d, std::vector<int>(dirs));
}

inline MonomialIdeal two_branch_simple() {
  return ideal(3, {v({1, 0, 1}), v({0, 2, 0}), v({0, 0, 3}), v({0, 1, 2}), v({2, 1, 0}), v({3, 0, 0})});
}

inline MonomialIdeal two_branch_product() {
  return ideal(3, {v({1, 1, 3}), v({2, 0, 3}), v({0, 3, 2}), v({1, 2, 2}), v({2, 1, 2}), v({3, 0, 2}),
                   v({0, 4, 1}), v({1, 3, 1}), v({2, 2, 1}), v({3, 1, 1}), v({0, 5, 0}), v({1, 4, 0}),
                   v({2, 3, 0}), v({0, 1, 5}), v({1, 0, 5}), v({0, 2, 4}), v({5, 0, 1}), v({4, 2, 0}),
                   v({5, 1, 0}), v({0, 0, 7}), v({7, 0, 0})});
}

struct Check {
  std::string name;
  std::function<bool()> fn;
};

inline std::vector<Check> checks() {
  std::vector<Check> cs;
  auto add = [&](std::string name, std::function<bool()> fn) { cs.push_back({std::move(name), std::move(fn)}); };

  add("special_first_neighborhood_d3", [] {
    return special_star_simple(chain(3, {0})) == ideal(3, {v({2, 0, 0}), v({0, 1, 0}), v({0, 0, 1})});
  });
  add("special_first_neighborhood_general_d", [] {
    for (int d = 2; d <= 6; ++d) {
      std::vector<Vec> g;
      Vec x2(static_cast<std::size_t>(d), Int(0));
      x2[0] = 2;
      g.push_back(x2);
      for (int i = 1; i < d; ++i) g.push_back(unit_vector(d, i));
      if (special_star_simple(QuadraticChain(d, {0})) != MonomialIdeal::make(d, g)) return false;
    }
    return true;
  });
  add("special_second_neighborhood_d3", [] {
    return special_star_simple(chain(3, {0, 1})) ==
           ideal(3, {v({3, 0, 0}), v({2, 1, 0}), v({1, 0, 1}), v({0, 2, 0}), v({0, 1, 1}), v({0, 0, 2})});
  });
  add("special_second_neighborhood_d2", [] {
    return special_star_simple(chain(2, {0, 1})) == ideal(2, {v({3, 0}), v({2, 1}), v({0, 2})});
  });
  add("special_second_neighborhood_generator_counts", [] {
    for (int d = 2; d <= 6; ++d) {
      std::size_t expect = static_cast<std::size_t>(d) * (d + 1) / 2;
      if (special_star_simple(QuadraticChain(d, {0, 1})).gens().size() != expect) return false;
    }
    return special_star_simple(QuadraticChain(4, {0, 1})).gens().size() == 10;
  });
  add("special_second_branch_pair", [] {
    return special_star_simple(chain(3, {2})) == ideal(3, {v({0, 0, 2}), v({1, 0, 0}), v({0, 1, 0})}) &&
           special_star_simple(chain(3, {2, 1})) ==
               ideal(3, {v({0, 0, 3}), v({0, 1, 2}), v({1, 0, 1}), v({0, 2, 0}), v({1, 1, 0}), v({2, 0, 0})});
  });
  add("order_valuation_tables", [] {
    return order_valuation(chain(3, {})) == v({1, 1, 1}) && order_valuation(chain(3, {0})) == v({1, 2, 2}) &&
           order_valuation(chain(3, {0, 1})) == v({2, 3, 4}) && order_valuation(chain(3, {2})) == v({2, 2, 1}) &&
           order_valuation(chain(3, {2, 1})) == v({4, 3, 2}) && order_valuation(chain(2, {0})) == v({1, 2}) &&
           order_valuation(chain(2, {0, 1})) == v({2, 3});
  });
  add("transform_of_m_times_second_neighborhood", [] {
    MonomialIdeal I = product(MonomialIdeal::maximal(3), special_star_simple(chain(3, {0, 1})));
    auto [r, t] = transform(I, 0);
    return r == 3 && t == ideal(3, {v({1, 0, 0}), v({0, 2, 0}), v({0, 0, 1})});
  });
  add("rees_second_neighborhood_d3", [] {
    ReesSet r = rees_valuations(special_star_simple(chain(3, {0, 1})));
    return r.entries.size() == 2 && r.entries[0] == std::pair<Vec, Int>(v({1, 1, 1}), 2) &&
           r.entries[1] == std::pair<Vec, Int>(v({2, 3, 4}), 6);
  });
  add("rees_second_neighborhood_d2", [] {
    ReesSet r = rees_valuations(special_star_simple(chain(2, {0, 1})));
    return r.entries.size() == 1 && r.entries[0] == std::pair<Vec, Int>(v({2, 3}), 6);
  });
  add("rees_two_branch_simple", [] {
    ReesSet r = rees_valuations(two_branch_simple());
    return r.entries.size() == 2 && r.entries[0].first == v({2, 3, 4}) && r.entries[1].first == v({4, 3, 2});
  });
  add("rees_of_products_share_all_chain_valuations", [] {
    MonomialIdeal p1p2 = star_product(special_star_simple(chain(3, {0})), special_star_simple(chain(3, {0, 1})));
    ReesSet a = rees_valuations(p1p2);
    ReesSet b = rees_valuations(star_product(MonomialIdeal::maximal(3), p1p2));
    return a.vectors() == b.vectors() && a.entries.size() == 3 && a.contains_vector(v({1, 1, 1})) &&
           a.contains_vector(v({1, 2, 2})) && a.contains_vector(v({2, 3, 4}));
  });
  add("order_valuation_not_always_rees", [] {
    return !order_in_rees(chain(2, {}), special_star_simple(chain(2, {0}))) &&
           !order_in_rees(chain(3, {}), special_star_simple(chain(3, {0}))) &&
           order_in_rees(chain(3, {}), MonomialIdeal::maximal(3));
  });
  add("product_identity_with_m_squared", [] {
    MonomialIdeal lhs = star_product(special_star_simple(chain(3, {0, 1})), special_star_simple(chain(3, {2, 1})));
    MonomialIdeal m2 = power(MonomialIdeal::maximal(3), 2);
    return lhs == star_product(two_branch_simple(), m2);
  });
  add("divisibility_of_the_two_branch_product", [] {
    MonomialIdeal I = integral_closure(two_branch_product());
    MonomialIdeal p1 = special_star_simple(chain(3, {0})), p2 = special_star_simple(chain(3, {0, 1}));
    MonomialIdeal p3 = special_star_simple(chain(3, {2})), p4 = special_star_simple(chain(3, {2, 1}));
    MonomialIdeal big = star_product(star_product(p1, p2), star_product(p3, p4));
    return star_divides(p2, I) && star_divides(p4, I) && ord(big) == 6 && ord(I) == 5 && !star_divides(big, I);
  });
  add("factorization_of_the_two_branch_product", [] {
    Factorization f = lipman_factorization(integral_closure(two_branch_product()));
    return f.exponents.at(chain(3, {})) == -1 && f.exponents.at(chain(3, {0})) == 1 &&
           f.exponents.at(chain(3, {0, 1})) == 1 && f.exponents.at(chain(3, {2})) == 1 &&
           f.exponents.at(chain(3, {2, 1})) == 1;
  });
  add("two_branch_simple_is_simple_but_not_special", [] {
    MonomialIdeal J = two_branch_simple();
    if (!star_simplicity_check(J).simple) return false;
    for (const auto& [c, m] : base_point_tree(J).nodes)
      if (special_star_simple(c) == J) return false;
    return true;
  });
  add("conditions_two_branch_product", [] {
    SaturationConditions sc = saturation_conditions(integral_closure(two_branch_product()));
    return !sc.product_divides && sc.each_divides;
  });
  add("conditions_full_three_point_product", [] {
    MonomialIdeal I = star_product(MonomialIdeal::maximal(3),
                                   star_product(special_star_simple(chain(3, {0})), special_star_simple(chain(3, {0, 1}))));
    SaturationConditions sc = saturation_conditions(I);
    return sc.product_divides && sc.each_divides && sc.product_divides_power == Flag::Yes &&
           sc.transforms_divisible && sc.power_transforms_divisible == Flag::Yes;
  });
  add("conditions_second_neighborhood_alone", [] {
    SaturationConditions sc = saturation_conditions(special_star_simple(chain(3, {0, 1})));
    return !sc.each_divides && !sc.product_divides;
  });
  add("model_full_product_regular", [] {
    MonomialIdeal I = star_product(MonomialIdeal::maximal(3),
                                   star_product(special_star_simple(chain(3, {0})), special_star_simple(chain(3, {0, 1}))));
    ProjectiveModel m = normalized_blowup(I);
    GammaShape g = make_gamma(3, {chain(3, {0}), chain(3, {0, 1})});
    return m.report.regular && x_gamma(g).chart_keys() == m.chart_keys();
  });
  add("model_same_rees_one_singular_point", [] {
    MonomialIdeal I = star_product(special_star_simple(chain(3, {0})), special_star_simple(chain(3, {0, 1})));
    SaturatedFactorization sf = saturated_factorization(I);
    return !sf.saturated && sf.rees_matches_base_points && sf.report.census.size() == 1 &&
           sf.report.census[0].cl == DivClassGroup{1, {}};
  });
  add("model_second_neighborhood_census", [] {
    MonomialIdeal P2 = special_star_simple(chain(3, {0, 1}));
    AffineChart C = chart(P2, v({0, 0, 2}), true);
    if (!analyze_chart(C).smooth) return false;
    AffineChart A = chart(P2, v({0, 2, 0}), true);
    ChartAnalysis an = analyze_chart(A);
    if (an.embedding_dim != 6 || an.singular.size() != 1 || an.singular[0].prime.stratum_dim != 0) return false;
    if (multiplicity_at_vertex(A) != 4) return false;
    AffineChart D = chart(P2, v({3, 0, 0}), true);
    auto [q, h] = valuation_center(D, v({1, 2, 2}));
    if (h != 2) return false;
    ChartAnalysis dn = analyze_chart(D);
    for (const FaceReport& f : dn.singular)
      if (f.prime.facet_normals == q.facet_normals)
        return f.prime.height == 2 && multiplicity_at_face(f) == 2;
    return false;
  });
  add("model_first_neighborhood_loci", [] {
    MonomialIdeal p1_2 = special_star_simple(QuadraticChain(2, {0}));
    ProjectiveModel m2 = normalized_blowup(p1_2);
    if (m2.report.census.size() != 1 || !(m2.report.census[0].cl == DivClassGroup{0, {2}})) return false;
    MonomialIdeal p1_3 = special_star_simple(QuadraticChain(3, {0}));
    if (normalized_blowup(p1_3).report.singular_locus_dim != 1) return false;
    return !saturated_factorization(p1_3).saturated;
  });
  add("plane_chart_class_groups", [] {
    MonomialIdeal P2 = special_star_simple(chain(2, {0, 1}));
    return analyze_chart(chart(P2, v({0, 2}))).cl == DivClassGroup{0, {3}} &&
           analyze_chart(chart(P2, v({3, 0}))).cl == DivClassGroup{0, {2}};
  });
  add("product_chart_infinite_cyclic_class_group", [] {
    MonomialIdeal I = star_product(special_star_simple(chain(3, {0})), special_star_simple(chain(3, {0, 1})));
    AffineChart A = chart(I, v({0, 3, 0}));
    return analyze_chart(A).cl == DivClassGroup{1, {}};
  });
  add("two_branch_chart_class_groups", [] {
    AffineChart A = chart(two_branch_simple(), v({1, 0, 1}));
    ChartAnalysis an = analyze_chart(A);
    if (!(an.cl == DivClassGroup{0, {2, 6}}) || an.embedding_dim != 8) return false;
    Vec u = v({-1, 0, 2});
    std::vector<Vec> containing;
    for (const Facet& f : A.facets)
      if (dot(f.normal, u) == 0) containing.push_back(f.normal);
    sort_lex(containing);
    for (const FaceReport& f : an.faces)
      if (f.prime.facet_normals == containing) return f.cl == DivClassGroup{0, {2}};
    return false;
  });
  add("two_branch_chart_center_heights", [] {
    AffineChart A = chart(two_branch_simple(), v({1, 0, 1}));
    std::vector<QuadraticChain> chains = {chain(3, {}), chain(3, {0}), chain(3, {0, 1}), chain(3, {2}),
                                          chain(3, {2, 1})};
    std::vector<int> expect = {2, 2, 1, 2, 1};
    for (std::size_t i = 0; i < chains.size(); ++i)
      if (valuation_center(A, order_valuation(chains[i])).second != expect[i]) return false;
    return true;
  });
  add("two_branch_chart_principal_divisors", [] {
    AffineChart A = chart(two_branch_simple(), v({1, 0, 1}));
    auto coeff = [&](const Vec& mono, const Vec& normal) -> Int {
      for (std::size_t i = 0; i < A.facets.size(); ++i)
        if (A.facets[i].normal == normal) return principal_divisor(A, mono)[i];
      return -1;
    };
    Vec q2 = v({2, 3, 4}), q4 = v({4, 3, 2});
    if (coeff(v({1, 0, 0}), q2) != 2 || coeff(v({1, 0, 0}), q4) != 4) return false;
    if (coeff(v({0, 0, 1}), q2) != 4 || coeff(v({0, 0, 1}), q4) != 2) return false;
    if (coeff(v({-1, 0, 2}), q2) != 6 || coeff(v({-1, 0, 2}), q4) != 0) return false;
    if (coeff(v({2, 0, -1}), q2) != 0 || coeff(v({2, 0, -1}), q4) != 6) return false;
    MonomialIdeal I = star_product(special_star_simple(chain(3, {0})), special_star_simple(chain(3, {0, 1})));
    AffineChart B = chart(I, v({0, 3, 0}));
    auto coeff_b = [&](const Vec& mono, const Vec& normal) -> Int {
      for (std::size_t i = 0; i < B.facets.size(); ++i)
        if (B.facets[i].normal == normal) return principal_divisor(B, mono)[i];
      return -1;
    };
    return coeff_b(v({0, 1, 0}), v({1, 1, 1})) == 1 && coeff_b(v({0, 1, 0}), v({2, 3, 4})) == 3;
  });
  add("two_branch_chart_reduction_and_multiplicity", [] {
    AffineChart A = chart(two_branch_simple(), v({1, 0, 1}));
    return reduction_check(A, {v({-1, 0, 2}), v({2, 0, -1}), v({-1, 2, -1})}) && multiplicity_at_vertex(A) == 6;
  });
  add("two_branch_chart_order_function_witness", [] {
    AffineChart A = chart(two_branch_simple(), v({1, 0, 1}));
    AdicOrder ord(A.gens, A.grading);
    return ord.order(v({0, 1, 0})) == 1 && ord.order(v({0, 2, 0})) >= 3;
  });
  add("distinct_model_counts", [] {
    return distinct_models(make_gamma(3, {})).count == 1 &&
           distinct_models(make_gamma(3, {chain(3, {0})})).count == 2 &&
           distinct_models(make_gamma(3, {chain(3, {0}), chain(3, {0, 1})})).count == 4;
  });
  return cs;
}

}  // namespace regression

inline int run_paper_examples(std::ostream& out, bool as_json) {
  auto checks = regression::checks();
  int failed = 0;
  json results = json::array();
  for (const auto& c : checks) {
    bool ok = false;
    std::string error;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (!ok) ++failed;
    if (as_json) {
      json r;
      r["name"] = c.name;
      r["passed"] = ok;
      if (!error.empty()) r["error"] = error;
      results.push_back(std::move(r));
    } else {
      out << (ok ? "PASS" : "FAIL") << "  " << c.name;
      if (!error.empty()) out << "  (" << error << ")";
      out << "\n";
    }
  }
  if (as_json) {
    json top;
    top["total"] = checks.size();
    top["failed"] = failed;
    top["results"] = std::move(results);
    out << top.dump(2) << "\n";
  } else {
    out << checks.size() - failed << "/" << checks.size() << " regressions passed\n";
  }
  return failed == 0 ? 0 : 2;
}

// ---------------------------------------------------------------------------
// Command dispatch
// ---------------------------------------------------------------------------

namespace detail {

inline ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_file(ss.str());
}

inline const MonomialIdeal& pick_ideal(const ProblemFile& pf, const std::string& name) {
  auto it = pf.ideals.find(name);
  if (it == pf.ideals.end()) throw InputError("no ideal named '" + name + "' in the problem file");
  return it->second;
}

inline const QuadraticChain& pick_chain(const ProblemFile& pf, const std::string& name) {
  auto it = pf.chains.find(name);
  if (it == pf.chains.end()) throw InputError("no chain named '" + name + "' in the problem file");
  return it->second;
}

inline const GammaShape& pick_gamma(const ProblemFile& pf, const std::string& name) {
  auto it = pf.gammas.find(name);
  if (it == pf.gammas.end()) throw InputError("no configuration named '" + name + "' in the problem file");
  return it->second;
}

inline void print_model_text(const ProjectiveModel& m, const std::vector<std::string>& vars, std::ostream& out) {
  out << "regular: " << (m.report.regular ? "true" : "false") << "\n";
  out << "singular points: " << m.report.census.size() << "\n";
  if (!m.report.regular) out << "singular locus dimension: " << m.report.singular_locus_dim << "\n";
  for (const CensusEntry& e : m.report.census) {
    out << "  stratum dim " << e.stratum_dim << ", local ring dim " << e.local_dim << ", Cl = "
        << e.cl.to_string() << (e.maximal ? " (component generic point)" : "") << ", charts:";
    for (std::size_t ci : e.chart_ids) out << " " << format_monomial(m.charts[ci].chart.center, vars);
    out << "\n";
  }
}

}  // namespace detail

/// Entry point shared by the binary and the test suite.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finsupp: exact computations with finitely supported complete monomial ideals"};
  app.require_subcommand(1);

  std::string file, ideal_name, chain_name, gamma_name, at_monomial;
  bool as_json = false, normalized = false, saturate = false;
  long bound = 6;

  auto add_common = [&](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("file", file, "problem file (TOML subset)")->required();
    sub->add_flag("--json", as_json, "emit JSON instead of text");
  };

  CLI::App* bp = app.add_subcommand("basepoints", "base point tree of an ideal");
  add_common(bp, true);
  bp->add_option("--ideal", ideal_name, "ideal name")->required();

  CLI::App* fa = app.add_subcommand("factorize", "factorization into special *-simple ideals");
  add_common(fa, true);
  fa->add_option("--ideal", ideal_name, "ideal name")->required();

  CLI::App* re = app.add_subcommand("rees", "Rees valuations of an ideal");
  add_common(re, true);
  re->add_option("--ideal", ideal_name, "ideal name")->required();

  CLI::App* sp = app.add_subcommand("special", "special *-simple ideal of a chain");
  add_common(sp, true);
  sp->add_option("--chain", chain_name, "chain name")->required();

  CLI::App* bl = app.add_subcommand("blowup", "model report for the blowup of an ideal");
  add_common(bl, true);
  bl->add_option("--ideal", ideal_name, "ideal name");
  bl->add_flag("--normalized", normalized, "blow up the integral closure of the Rees algebra");
  bl->add_option("--gamma", gamma_name, "blow up a base point configuration instead");

  CLI::App* ch = app.add_subcommand("chart", "analyze one affine chart");
  add_common(ch, true);
  ch->add_option("--ideal", ideal_name, "ideal name")->required();
  ch->add_option("--at", at_monomial, "chart center (a minimal generator, as a monomial)")->required();
  ch->add_flag("--saturate", saturate, "saturate the chart semigroup");

  CLI::App* co = app.add_subcommand("conditions", "saturated-factorization conditions (1)-(5)");
  add_common(co, true);
  co->add_option("--ideal", ideal_name, "ideal name")->required();
  co->add_option("--bound", bound, "power search bound for conditions (3) and (5)");

  CLI::App* mc = app.add_subcommand("models-count", "count distinct models over a configuration (experimental)");
  add_common(mc, true);
  mc->add_option("--gamma", gamma_name, "configuration name")->required();

  CLI::App* pe = app.add_subcommand("paper-examples", "run the built-in regression suite");
  add_common(pe, false);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (pe->parsed()) return run_paper_examples(out, as_json);

    ProblemFile pf = detail::load_problem(file);
    const std::vector<std::string>& vars = pf.variables;

    if (bp->parsed()) {
      BasePointTree t = base_point_tree(detail::pick_ideal(pf, ideal_name));
      if (as_json) {
        out << report::tree_json(t, vars).dump(2) << "\n";
      } else {
        out << t.size() << " base points\n";
        for (const auto& [c, m] : t.nodes)
          out << "  " << format_chain(c.dirs, vars) << "  multiplicity " << m.str() << "  ord "
              << to_string(order_valuation(c)) << "\n";
      }
    } else if (fa->parsed()) {
      Factorization f = lipman_factorization(detail::pick_ideal(pf, ideal_name));
      if (as_json) {
        out << report::factorization_json(f, vars).dump(2) << "\n";
      } else {
        for (const auto& [c, e] : f.exponents)
          out << "  " << format_chain(c.dirs, vars) << " ^ " << e.str() << "\n";
      }
    } else if (re->parsed()) {
      const MonomialIdeal& I = detail::pick_ideal(pf, ideal_name);
      ReesSet r = rees_valuations(I);
      BasePointTree t;
      const BasePointTree* tp = nullptr;
      try {
        t = base_point_tree(I);
        tp = &t;
      } catch (const MathError&) {
      }
      if (as_json) {
        out << report::rees_json(r, tp, vars).dump(2) << "\n";
      } else {
        out << r.entries.size() << " Rees valuations\n";
        for (const auto& [w, val] : r.entries)
          out << "  " << to_string(w) << "  value " << val.str() << "\n";
      }
    } else if (sp->parsed()) {
      const QuadraticChain& c = detail::pick_chain(pf, chain_name);
      SpecialStarSimple s = special_star_simple_full(c);
      if (as_json) {
        out << report::special_json(s, c, vars).dump(2) << "\n";
      } else {
        out << "P" << format_chain(c.dirs, vars) << " = (";
        for (std::size_t i = 0; i < s.ideal.gens().size(); ++i)
          out << (i ? ", " : "") << format_monomial(s.ideal.gens()[i], vars);
        out << ")\n";
      }
    } else if (bl->parsed()) {
      if (!gamma_name.empty()) {
        ProjectiveModel m = x_gamma(detail::pick_gamma(pf, gamma_name));
        if (as_json)
          out << report::model_json(m, vars).dump(2) << "\n";
        else
          detail::print_model_text(m, vars, out);
      } else {
        if (ideal_name.empty()) throw InputError("blowup needs --ideal or --gamma");
        ProjectiveModel m = blowup_model(detail::pick_ideal(pf, ideal_name), normalized);
        if (as_json)
          out << report::model_json(m, vars).dump(2) << "\n";
        else
          detail::print_model_text(m, vars, out);
      }
    } else if (ch->parsed()) {
      const MonomialIdeal& I = detail::pick_ideal(pf, ideal_name);
      Vec g = parse_monomial(at_monomial, vars);
      AffineChart c = chart(I, g, saturate);
      ChartAnalysis an = analyze_chart(c);
      if (as_json) {
        out << report::chart_json(c, an, vars).dump(2) << "\n";
      } else {
        out << "chart at " << format_monomial(g, vars) << ": ";
        for (std::size_t i = 0; i < c.gens.size(); ++i) out << (i ? ", " : "") << format_laurent(c.gens[i], vars);
        out << "\n  pointed: " << (c.pointed ? "true" : "false") << ", normal: " << (an.normal ? "true" : "false")
            << ", smooth: " << (an.smooth ? "true" : "false") << "\n";
        if (!an.faces.empty())
          out << "  embedding dim " << an.embedding_dim << ", Cl = " << an.cl.to_string() << ", singular faces: "
              << an.singular.size() << "\n";
      }
    } else if (co->parsed()) {
      SaturationConditions sc = saturation_conditions(detail::pick_ideal(pf, ideal_name), static_cast<int>(bound));
      if (as_json) {
        out << report::conditions_json(sc).dump(2) << "\n";
      } else {
        out << "(1) product of all specials divides:     " << (sc.product_divides ? "true" : "false") << "\n"
            << "(2) every special divides:               " << (sc.each_divides ? "true" : "false") << "\n"
            << "(3) product divides a power:             " << report::flag_str(sc.product_divides_power);
        if (sc.product_divides_power == Flag::Yes) out << " (k = " << sc.power_found << ")";
        out << "\n(4) transforms divisible by maximal:     " << (sc.transforms_divisible ? "true" : "false") << "\n"
            << "(5) power transforms divisible:          " << report::flag_str(sc.power_transforms_divisible);
        if (sc.power_transforms_divisible == Flag::Yes) out << " (k = " << sc.transform_power_found << ")";
        out << "\n";
      }
    } else if (mc->parsed()) {
      DistinctModels dm = distinct_models(detail::pick_gamma(pf, gamma_name));
      if (as_json) {
        out << report::distinct_models_json(dm, vars).dump(2) << "\n";
      } else {
        out << "distinct models: " << dm.count << " (experimental)\n";
      }
    }
    return 0;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace finsupp::cli
