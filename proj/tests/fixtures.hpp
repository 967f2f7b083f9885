#pragma once

// Shared construction helpers for the test suites: the recurring ideals and
// chains from the regression corpus.

#include <initializer_list>
#include <vector>

#include "finsupp/inf_near.hpp"
#include "finsupp/monomial_ideal.hpp"

namespace finsupp::fixtures {

inline Vec v(std::initializer_list<long> xs) {
  Vec r;
  for (long x : xs) r.emplace_back(x);
  return r;
}

inline MonomialIdeal ideal(int d, std::vector<Vec> gens) { return MonomialIdeal::make(d, std::move(gens)); }

inline MonomialIdeal max_ideal(int d) { return MonomialIdeal::maximal(d); }

/// (x^2, y, z, ...)
inline MonomialIdeal p1(int d) {
  std::vector<Vec> g;
  Vec x2(static_cast<std::size_t>(d), Int(0));
  x2[0] = 2;
  g.push_back(x2);
  for (int i = 1; i < d; ++i) g.push_back(unit_vector(d, i));
  return ideal(d, std::move(g));
}

/// (x^3, x^2 y, x z_i, (y, z_1..z_{d-2})^2) with coordinates (x, y, z_1, ...).
inline MonomialIdeal p2(int d) {
  std::vector<Vec> g;
  Vec a(static_cast<std::size_t>(d), Int(0));
  a[0] = 3;
  g.push_back(a);  // x^3
  a.assign(static_cast<std::size_t>(d), Int(0));
  a[0] = 2;
  a[1] = 1;
  g.push_back(a);  // x^2 y
  for (int i = 2; i < d; ++i) {
    a.assign(static_cast<std::size_t>(d), Int(0));
    a[0] = 1;
    a[static_cast<std::size_t>(i)] = 1;
    g.push_back(a);  // x z_i
  }
  for (int i = 1; i < d; ++i)
    for (int j = i; j < d; ++j) {
      a.assign(static_cast<std::size_t>(d), Int(0));
      a[static_cast<std::size_t>(i)] += 1;
      a[static_cast<std::size_t>(j)] += 1;
      g.push_back(a);  // (y, z)^2
    }
  return ideal(d, std::move(g));
}

/// (z^2, x, y) in dimension 3.
inline MonomialIdeal p3() { return ideal(3, {v({0, 0, 2}), v({1, 0, 0}), v({0, 1, 0})}); }

/// (z^3, z^2 y, z x, y^2, y x, x^2) in dimension 3.
inline MonomialIdeal p4() {
  return ideal(3, {v({0, 0, 3}), v({0, 1, 2}), v({1, 0, 1}), v({0, 2, 0}), v({1, 1, 0}), v({2, 0, 0})});
}

/// The two-branch *-simple ideal (xz, y^2, z^3, yz^2, x^2y, x^3).
inline MonomialIdeal j_two_branch() {
  return ideal(3, {v({1, 0, 1}), v({0, 2, 0}), v({0, 0, 3}), v({0, 1, 2}), v({2, 1, 0}), v({3, 0, 0})});
}

/// J * m * P_1 * P_3, via its 21 published generators.
inline MonomialIdeal i_two_branch() {
  return ideal(3, {v({1, 1, 3}), v({2, 0, 3}), v({0, 3, 2}), v({1, 2, 2}), v({2, 1, 2}), v({3, 0, 2}),
                   v({0, 4, 1}), v({1, 3, 1}), v({2, 2, 1}), v({3, 1, 1}), v({0, 5, 0}), v({1, 4, 0}),
                   v({2, 3, 0}), v({0, 1, 5}), v({1, 0, 5}), v({0, 2, 4}), v({5, 0, 1}), v({4, 2, 0}),
                   v({5, 1, 0}), v({0, 0, 7}), v({7, 0, 0})});
}

inline QuadraticChain chain(int d, std::initializer_list<int> dirs) {
  return QuadraticChain(d, std::vector<int>(dirs));
}

}  // namespace finsupp::fixtures
