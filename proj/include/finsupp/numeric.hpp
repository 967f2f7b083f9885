#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace finsupp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Lattice vector with exact integer entries.
using Vec = std::vector<Int>;

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec negate(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Vec scale(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Int sum(const Vec& a) { return std::accumulate(a.begin(), a.end(), Int(0)); }

inline bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

inline bool all_nonnegative(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x >= 0; });
}

inline bool all_positive(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x > 0; });
}

/// Componentwise a <= b.
inline bool dominates(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Int gcd_int(Int a, Int b) {
  using boost::multiprecision::abs;
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int gcd_vec(const Vec& a) {
  Int g = 0;
  for (const Int& x : a) g = gcd_int(g, x);
  return g;
}

/// Divide out the gcd; the zero vector is returned unchanged.
inline Vec primitive(Vec a) {
  Int g = gcd_vec(a);
  if (g > 1)
    for (Int& x : a) x /= g;
  return a;
}

inline Vec unit_vector(int d, int j) {
  Vec e(d, Int(0));
  e[j] = 1;
  return e;
}

inline bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_lex(std::vector<Vec>& v) { std::sort(v.begin(), v.end(), lex_less); }

inline std::string to_string(const Vec& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].str();
  }
  return s + ")";
}

/// Ceiling of a/b for b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b < a) ++q;
  return q;
}

}  // namespace finsupp
