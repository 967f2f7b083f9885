#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "finsupp/errors.hpp"
#include "finsupp/numeric.hpp"

namespace finsupp {

inline std::vector<std::string> default_variables(int d) {
  static const char* names[] = {"x", "y", "z"};
  std::vector<std::string> v;
  if (d <= 3) {
    for (int i = 0; i < d; ++i) v.push_back(names[i]);
  } else {
    v.push_back("x");
    v.push_back("y");
    for (int i = 2; i < d; ++i) v.push_back("z" + std::to_string(i - 1));
  }
  return v;
}

/// Parse "x^3 y z^2" (or "x^3*y*z^2", or "1") against a variable list.
inline Vec parse_monomial(const std::string& text, const std::vector<std::string>& vars) {
  Vec a(vars.size(), Int(0));
  std::size_t i = 0;
  auto skip_sep = [&]() {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '*')) ++i;
  };
  skip_sep();
  if (i < text.size() && text[i] == '1' && (i + 1 == text.size() || text[i + 1] == ' ')) {
    ++i;
    skip_sep();
    if (i == text.size()) return a;
  }
  while (i < text.size()) {
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    std::string name = text.substr(start, i - start);
    int var = -1;
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (vars[k] == name) var = static_cast<int>(k);
    if (var < 0) throw InputError("unknown variable '" + name + "' in monomial '" + text + "'");
    Int e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t es = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (es == i) throw InputError("missing exponent after '^' in monomial '" + text + "'");
      e = Int(text.substr(es, i - es));
    }
    a[static_cast<std::size_t>(var)] += e;
    skip_sep();
  }
  return a;
}

/// "x^3 y" style; "1" for the zero vector.  Exponents must be nonnegative.
inline std::string format_monomial(const Vec& a, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += vars[i];
    if (a[i] != 1) s += "^" + a[i].str();
  }
  return s.empty() ? "1" : s;
}

/// Laurent form "y^2/(x z)" for vectors with negative entries.
inline std::string format_laurent(const Vec& a, const std::vector<std::string>& vars) {
  Vec num(a.size(), Int(0)), den(a.size(), Int(0));
  bool has_den = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0) num[i] = a[i];
    if (a[i] < 0) {
      den[i] = -a[i];
      has_den = true;
    }
  }
  if (!has_den) return format_monomial(num, vars);
  std::string d = format_monomial(den, vars);
  bool simple = d.find(' ') == std::string::npos && d.find('^') == std::string::npos;
  return format_monomial(num, vars) + "/" + (simple ? d : "(" + d + ")");
}

inline std::string format_chain(const std::vector<int>& dirs, const std::vector<std::string>& vars) {
  std::string s = "[";
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (i) s += ",";
    s += vars[static_cast<std::size_t>(dirs[i])];
  }
  return s + "]";
}

}  // namespace finsupp
