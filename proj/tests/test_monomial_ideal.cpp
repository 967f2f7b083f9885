#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "finsupp/monomial_ideal.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace finsupp;
using fixtures::ideal;
using fixtures::v;

namespace {

MonomialIdeal random_ideal(std::mt19937_64& rng, int d, int max_exp, int extra_gens, bool primary) {
  std::uniform_int_distribution<long> e(0, max_exp);
  std::vector<Vec> gens;
  if (primary) {
    for (int i = 0; i < d; ++i) {
      Vec g(static_cast<std::size_t>(d), Int(0));
      g[static_cast<std::size_t>(i)] = 1 + static_cast<long>(rng() % static_cast<unsigned long>(max_exp));
      gens.push_back(std::move(g));
    }
  }
  for (int k = 0; k < extra_gens; ++k) {
    Vec g(static_cast<std::size_t>(d));
    bool nonzero = false;
    for (int i = 0; i < d; ++i) {
      g[static_cast<std::size_t>(i)] = e(rng);
      if (g[static_cast<std::size_t>(i)] != 0) nonzero = true;
    }
    if (nonzero) gens.push_back(std::move(g));
  }
  if (gens.empty()) gens.push_back(unit_vector(d, 0));
  return MonomialIdeal::make(d, std::move(gens));
}

}  // namespace

TEST_CASE("minimal generators") {
  MonomialIdeal I = ideal(2, {v({2, 0}), v({1, 1}), v({0, 2}), v({2, 1})});
  CHECK(I.gens() == std::vector<Vec>{v({0, 2}), v({1, 1}), v({2, 0})});

  CHECK(fixtures::p2(3).gens().size() == 6);
  CHECK(fixtures::p2(4).gens().size() == 10);

  CHECK_THROWS_AS(MonomialIdeal::make(2, {}), EmptyGenerators);
}

TEST_CASE("m-primary detection") {
  CHECK(fixtures::p2(3).is_m_primary());
  CHECK(fixtures::max_ideal(4).is_m_primary());
  CHECK_FALSE(ideal(2, {v({1, 1})}).is_m_primary());
  CHECK_FALSE(MonomialIdeal::unit(2).is_m_primary());
  CHECK_FALSE(ideal(3, {v({3, 0, 0}), v({0, 2, 0}), v({1, 0, 1})}).is_m_primary());
}

TEST_CASE("order") {
  CHECK(ord(fixtures::i_two_branch()) == 5);
  CHECK(ord(power(fixtures::max_ideal(3), 4)) == 4);
  CHECK(ord(fixtures::p2(3)) == 2);
  CHECK_THROWS_AS(ord(MonomialIdeal::unit(2)), UnitIdeal);
}

TEST_CASE("integral closure pinned cases") {
  CHECK(integral_closure(ideal(2, {v({2, 0}), v({0, 2})})) == ideal(2, {v({2, 0}), v({1, 1}), v({0, 2})}));
  CHECK(integral_closure(fixtures::p2(3)) == fixtures::p2(3));

  MonomialIdeal C = integral_closure(ideal(3, {v({3, 0, 0}), v({0, 2, 0}), v({1, 0, 1})}));
  CHECK_FALSE(C.contains(v({0, 1, 1})));  // yz stays outside
  CHECK(C.contains(v({2, 1, 0})));
}

TEST_CASE("star product pinned cases") {
  MonomialIdeal m = fixtures::max_ideal(3);
  MonomialIdeal lhs = star_product(fixtures::p2(3), fixtures::p4());
  MonomialIdeal rhs = star_product(fixtures::j_two_branch(), star_product(m, m));
  CHECK(lhs == rhs);

  MonomialIdeal I = ideal(3, {v({3, 0, 0}), v({0, 2, 0}), v({1, 0, 1})});
  CHECK(star_product(I, MonomialIdeal::unit(3)) == integral_closure(I));

  CHECK(star_product(m, m) == power(m, 2));
}

TEST_CASE("valuation values") {
  CHECK(valuation_value(v({2, 3, 4}), fixtures::p2(3)) == 6);
  CHECK(valuation_value(v({1, 1, 1}), fixtures::i_two_branch()) == ord(fixtures::i_two_branch()));
  CHECK(valuation_value(v({1, 2, 2}), fixtures::p2(3)) == 3);
}

TEST_CASE("closure properties on random ideals") {
  std::mt19937_64 rng(90210);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2);
    MonomialIdeal I = random_ideal(rng, d, 5, 3, trial % 2 == 0);
    MonomialIdeal C = integral_closure(I);

    // extensive, idempotent
    for (const Vec& g : I.gens()) CHECK(C.contains(g));
    CHECK(integral_closure(C) == C);

    // m-primary preserved both ways
    CHECK(I.is_m_primary() == C.is_m_primary());

    // monotone under adding a generator
    std::vector<Vec> bigger = I.gens();
    bigger.push_back(Vec(static_cast<std::size_t>(d), Int(1)));
    MonomialIdeal C2 = integral_closure(MonomialIdeal::make(d, bigger));
    for (const Vec& g : C.gens()) CHECK(C2.contains(g));
  }
}

TEST_CASE("closure agrees with simplex oracle") {
  std::mt19937_64 rng(5551212);
  std::uniform_int_distribution<long> e(0, 6);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2);
    MonomialIdeal I = random_ideal(rng, d, 6, 3, true);
    MonomialIdeal C = integral_closure(I);
    for (int probe = 0; probe < 20; ++probe) {
      Vec a(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) a[static_cast<std::size_t>(i)] = e(rng);
      bool main_path = C.contains(a);
      bool oracle_path = oracle::brute_np_membership(I.gens(), a);
      REQUIRE(main_path == oracle_path);
      ++checked;
    }
  }
  CHECK(checked == 600);
}

TEST_CASE("closure of powers matches scaled polyhedron") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 10; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2);
    MonomialIdeal I = random_ideal(rng, d, 3, 2, true);
    for (int k = 1; k <= 3; ++k) {
      MonomialIdeal Ck = integral_closure(power(I, k));
      for (const Vec& g : Ck.gens()) CHECK(oracle::brute_np_membership(power(I, k).gens(), g));
      for (const Vec& g : I.gens()) CHECK(Ck.contains(scale(k, g)));
    }
  }
}

TEST_CASE("valuations are additive over star products") {
  std::mt19937_64 rng(246810);
  std::uniform_int_distribution<long> e(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    int d = 2 + static_cast<int>(rng() % 2);
    MonomialIdeal I = random_ideal(rng, d, 4, 2, true);
    MonomialIdeal J = random_ideal(rng, d, 4, 2, true);
    MonomialIdeal S = star_product(I, J);
    CHECK(is_complete(S));
    for (int probe = 0; probe < 5; ++probe) {
      Vec w(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) w[static_cast<std::size_t>(i)] = e(rng);
      CHECK(valuation_value(w, S) == valuation_value(w, I) + valuation_value(w, J));
    }
  }
}
