#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "finsupp/models.hpp"
#include "fixtures.hpp"

using namespace finsupp;
using fixtures::chain;
using fixtures::v;

namespace {

MonomialIdeal p1p2() { return star_product(fixtures::p1(3), fixtures::p2(3)); }
MonomialIdeal mp1p2() { return star_product(fixtures::max_ideal(3), p1p2()); }

}  // namespace

TEST_CASE("normalized blowups of the three-point chain ideals") {
  ProjectiveModel full = normalized_blowup(mp1p2());
  CHECK(full.report.regular);
  CHECK(full.report.census.empty());

  ProjectiveModel partial = normalized_blowup(p1p2());
  CHECK_FALSE(partial.report.regular);
  REQUIRE(partial.report.census.size() == 1);
  CHECK(partial.report.census[0].stratum_dim == 0);
  CHECK(partial.report.census[0].local_dim == 3);
  CHECK(partial.report.census[0].cl == DivClassGroup{1, {}});
  CHECK(partial.report.singular_locus_dim == 0);
}

TEST_CASE("normalized blowup of the second-neighborhood ideal") {
  ProjectiveModel m = normalized_blowup(fixtures::p2(3));
  CHECK_FALSE(m.report.regular);
  CHECK(m.report.singular_locus_dim == 1);

  // components: the vertex of the y^2 chart and the height-2 center curve
  int maximal = 0, dim0 = 0, dim1 = 0;
  for (const CensusEntry& e : m.report.census) {
    if (e.maximal) {
      ++maximal;
      if (e.stratum_dim == 0) ++dim0;
      if (e.stratum_dim == 1) ++dim1;
    }
  }
  CHECK(maximal == 2);
  CHECK(dim0 == 1);
  CHECK(dim1 == 1);

  // the curve stratum is seen from two charts
  for (const CensusEntry& e : m.report.census)
    if (e.stratum_dim == 1) CHECK(e.chart_ids.size() == 2);
}

TEST_CASE("first-neighborhood models have singular locus of dimension d-2") {
  ProjectiveModel m2 = normalized_blowup(fixtures::p1(2));
  CHECK_FALSE(m2.report.regular);
  REQUIRE(m2.report.census.size() == 1);
  CHECK(m2.report.census[0].cl == DivClassGroup{0, {2}});  // torsion, hypothesis fails
  CHECK(m2.report.singular_locus_dim == 0);

  ProjectiveModel m3 = normalized_blowup(fixtures::p1(3));
  CHECK(m3.report.singular_locus_dim == 1);

  ProjectiveModel m4 = normalized_blowup(fixtures::p1(4));
  CHECK(m4.report.singular_locus_dim == 2);
}

TEST_CASE("everything under a missing order valuation is singular") {
  // when ord of a base point is not a Rees valuation, each chart point below
  // it is singular
  struct Case {
    MonomialIdeal ideal;
    Vec missing;
  };
  std::vector<Case> cases = {{fixtures::p1(3), v({1, 1, 1})},
                             {star_product(fixtures::max_ideal(3), fixtures::p2(3)), v({1, 2, 2})}};
  for (const Case& cs : cases) {
    CHECK_FALSE(rees_valuations(cs.ideal).contains_vector(cs.missing));
    ProjectiveModel m = normalized_blowup(cs.ideal);
    for (const ModelChart& mc : m.charts) {
      bool chart_below = true;
      for (const Vec& g : mc.chart.gens)
        if (dot(cs.missing, g) < 0) chart_below = false;
      if (!chart_below) continue;
      for (const FaceReport& f : mc.analysis.faces) {
        // the localization lies below the valuation when it vanishes on the
        // inverted face generators
        bool below = true;
        for (int gi : f.prime.tight)
          if (dot(cs.missing, mc.chart.gens[static_cast<std::size_t>(gi)]) != 0) below = false;
        for (const Vec& u : mc.chart.units_basis)
          if (dot(cs.missing, u) != 0) below = false;
        if (below) CHECK_FALSE(f.smooth);
      }
    }
  }
}

TEST_CASE("saturated regular models are regular and match the full product blowup") {
  GammaShape g = make_gamma(3, {chain(3, {0}), chain(3, {0, 1})});
  ProjectiveModel xg = x_gamma(g);
  CHECK(xg.report.regular);
  ProjectiveModel nb = normalized_blowup(mp1p2());
  CHECK(xg.chart_keys() == nb.chart_keys());

  ProjectiveModel root_only = x_gamma(make_gamma(3, {}));
  CHECK(root_only.report.regular);
  CHECK(root_only.chart_keys() == normalized_blowup(fixtures::max_ideal(3)).chart_keys());

  GammaShape two_branch = make_gamma(3, {chain(3, {0}), chain(3, {0, 1}), chain(3, {2}), chain(3, {2, 1})});
  CHECK(x_gamma(two_branch).report.regular);

  CHECK_THROWS_AS(make_gamma(3, {chain(3, {0, 1}), chain(3, {2, 1})}), InvalidGamma);
}

TEST_CASE("random configurations give regular saturated models") {
  std::mt19937_64 rng(24601);
  for (int trial = 0; trial < 8; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2);
    std::vector<QuadraticChain> chains;
    int n = 1 + static_cast<int>(rng() % 4);
    QuadraticChain cur(d, {});
    for (int i = 0; i < n; ++i) {
      if (cur.length() < 3 && rng() % 2) {
        cur = cur.child(static_cast<int>(rng() % static_cast<unsigned long>(d)));
      } else {
        cur = QuadraticChain(d, {static_cast<int>(rng() % static_cast<unsigned long>(d))});
      }
      chains.push_back(cur);
    }
    GammaShape g = make_gamma(d, chains);
    REQUIRE(g.chains.size() <= 6);
    CHECK(x_gamma(g).report.regular);
  }
}

TEST_CASE("saturated factorization decisions") {
  SaturatedFactorization yes = saturated_factorization(mp1p2());
  CHECK(yes.saturated);
  CHECK(yes.rees_matches_base_points);

  // same Rees valuations, yet one singular point
  SaturatedFactorization no = saturated_factorization(p1p2());
  CHECK_FALSE(no.saturated);
  CHECK(no.rees_matches_base_points);
  CHECK(no.report.census.size() == 1);

  SaturatedFactorization p1d = saturated_factorization(fixtures::p1(3));
  CHECK_FALSE(p1d.saturated);
  CHECK_FALSE(p1d.rees_matches_base_points);

  CHECK(saturated_factorization(fixtures::max_ideal(3)).saturated);
}

TEST_CASE("nontorsion class groups at singular points when the hypothesis holds") {
  // whenever every base-point order valuation is a Rees valuation, singular
  // strata must have nontorsion divisor class group
  std::vector<MonomialIdeal> corpus = {p1p2(), mp1p2(), fixtures::p2(3), fixtures::j_two_branch(),
                                       fixtures::p1(3), fixtures::p1(2), fixtures::p2(2)};
  for (const MonomialIdeal& I : corpus) {
    ReesSet rees = rees_valuations(I);
    BasePointTree t = base_point_tree(I);
    bool hypothesis = true;
    for (const auto& [c, m] : t.nodes)
      if (!rees.contains_vector(order_valuation(c))) hypothesis = false;
    ProjectiveModel model = normalized_blowup(I);
    if (hypothesis)
      for (const CensusEntry& e : model.report.census) CHECK_FALSE(e.cl.is_torsion());
  }
}

TEST_CASE("model counts over small configurations") {
  CHECK(distinct_models(make_gamma(3, {})).count == 1);
  CHECK(distinct_models(make_gamma(3, {chain(3, {0})})).count == 2);
  CHECK(distinct_models(make_gamma(3, {chain(3, {0}), chain(3, {0, 1})})).count == 4);
  CHECK(distinct_models(make_gamma(2, {chain(2, {0}), chain(2, {0, 1})})).count == 4);
}
