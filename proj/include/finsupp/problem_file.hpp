#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "finsupp/errors.hpp"
#include "finsupp/models.hpp"
#include "finsupp/monomial_io.hpp"

namespace finsupp {

// A flat key/value + array text format (TOML-compatible subset): top-level
// keys, [section.name] tables, integer/string/array values.  Arrays may span
// lines; # starts a comment.

namespace toml {

struct Value {
  enum class Kind { Integer, String, Array } kind = Kind::Integer;
  Int integer;
  std::string string;
  std::vector<Value> array;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg);
  }

  void skip_space(bool with_newlines) {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || (with_newlines && c == '\n')) {
        advance();
      } else {
        break;
      }
    }
  }

  bool done() {
    skip_space(true);
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string bare_key() {
    skip_space(false);
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '-'))
      advance();
    if (start == pos_) fail("expected a key");
    return text_.substr(start, pos_ - start);
  }

  Value value() {
    skip_space(true);
    char c = peek();
    if (c == '"') return string_value();
    if (c == '[') return array_value();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return integer_value();
    fail("expected an integer, string, or array");
  }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Value string_value() {
    expect('"');
    std::string s;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      s += text_[pos_];
      advance();
    }
    if (pos_ >= text_.size()) fail("unterminated string");
    expect('"');
    Value v;
    v.kind = Value::Kind::String;
    v.string = std::move(s);
    return v;
  }

  Value integer_value() {
    std::size_t start = pos_;
    if (peek() == '-') advance();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    if (pos_ == start || (text_[start] == '-' && pos_ == start + 1)) fail("malformed integer");
    Value v;
    v.kind = Value::Kind::Integer;
    v.integer = Int(text_.substr(start, pos_ - start));
    return v;
  }

  Value array_value() {
    expect('[');
    Value v;
    v.kind = Value::Kind::Array;
    skip_space(true);
    while (peek() != ']') {
      v.array.push_back(value());
      skip_space(true);
      if (peek() == ',') {
        advance();
        skip_space(true);
      } else if (peek() != ']') {
        fail("expected ',' or ']' in array");
      }
    }
    expect(']');
    return v;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct Document {
  // flattened: "" for top level, else "section" or "section.name"
  std::map<std::string, std::map<std::string, Value>> tables;
};

inline Document parse(const std::string& text) {
  Parser p(text);
  Document doc;
  std::string current;
  while (!p.done()) {
    if (p.peek() == '[') {
      p.expect('[');
      std::string name = p.bare_key();
      while (p.peek() == '.') {
        p.expect('.');
        name += "." + p.bare_key();
      }
      p.expect(']');
      current = name;
      doc.tables[current];
    } else {
      std::string key = p.bare_key();
      p.skip_space(false);
      p.expect('=');
      Value v = p.value();
      auto& table = doc.tables[current];
      if (!table.emplace(key, std::move(v)).second) p.fail("duplicate key '" + key + "'");
    }
  }
  return doc;
}

}  // namespace toml

/// Parsed problem description: named ideals, chains, and configurations over
/// one ambient dimension.
struct ProblemFile {
  int dimension = 0;
  std::vector<std::string> variables;
  std::map<std::string, MonomialIdeal> ideals;
  std::map<std::string, QuadraticChain> chains;
  std::map<std::string, GammaShape> gammas;
  std::map<std::string, Int> params;

  int direction_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
      if (variables[i] == name) return static_cast<int>(i);
    throw InputError("unknown direction '" + name + "'");
  }
};

namespace detail {

inline std::vector<int> parse_directions(const ProblemFile& pf, const toml::Value& arr) {
  if (arr.kind != toml::Value::Kind::Array) throw InputError("directions must be an array");
  std::vector<int> dirs;
  for (const toml::Value& e : arr.array) {
    if (e.kind == toml::Value::Kind::String)
      dirs.push_back(pf.direction_index(e.string));
    else if (e.kind == toml::Value::Kind::Integer)
      dirs.push_back(static_cast<int>(e.integer) - 1);  // 1-based coordinate index
    else
      throw InputError("directions must be variable names or 1-based indices");
  }
  return dirs;
}

}  // namespace detail

inline ProblemFile parse_problem_file(const std::string& text) {
  toml::Document doc = toml::parse(text);
  ProblemFile pf;

  auto top = doc.tables.find("");
  if (top != doc.tables.end()) {
    auto dim = top->second.find("dimension");
    if (dim != top->second.end()) {
      if (dim->second.kind != toml::Value::Kind::Integer) throw InputError("dimension must be an integer");
      pf.dimension = static_cast<int>(dim->second.integer);
    }
    auto vars = top->second.find("variables");
    if (vars != top->second.end()) {
      if (vars->second.kind != toml::Value::Kind::Array) throw InputError("variables must be an array of strings");
      for (const toml::Value& v : vars->second.array) {
        if (v.kind != toml::Value::Kind::String) throw InputError("variables must be strings");
        pf.variables.push_back(v.string);
      }
    }
  }
  if (pf.dimension == 0 && !pf.variables.empty()) pf.dimension = static_cast<int>(pf.variables.size());
  if (pf.dimension == 0) throw InputError("missing dimension");
  if (pf.dimension < 2) throw InputError("dimension must be at least 2");
  if (pf.variables.empty()) pf.variables = default_variables(pf.dimension);
  if (static_cast<int>(pf.variables.size()) != pf.dimension)
    throw InputError("variable list does not match the dimension");

  for (const auto& [section, table] : doc.tables) {
    if (section.empty()) continue;
    std::size_t dotpos = section.find('.');
    std::string kind = section.substr(0, dotpos);
    std::string name = dotpos == std::string::npos ? "" : section.substr(dotpos + 1);
    if (kind == "params") {
      for (const auto& [k, v] : table) {
        if (v.kind != toml::Value::Kind::Integer) throw InputError("params must be integers");
        pf.params[k] = v.integer;
      }
      continue;
    }
    if (name.empty()) throw InputError("section [" + section + "] needs a name, e.g. [" + kind + ".A]");
    if (kind == "ideals") {
      auto gens_it = table.find("generators");
      if (gens_it == table.end()) throw InputError("ideal '" + name + "' needs generators");
      if (gens_it->second.kind != toml::Value::Kind::Array)
        throw InputError("generators of '" + name + "' must be an array");
      std::vector<Vec> gens;
      for (const toml::Value& g : gens_it->second.array) {
        if (g.kind == toml::Value::Kind::String) {
          gens.push_back(parse_monomial(g.string, pf.variables));
        } else if (g.kind == toml::Value::Kind::Array) {
          Vec a;
          for (const toml::Value& e : g.array) {
            if (e.kind != toml::Value::Kind::Integer) throw InputError("exponent arrays must hold integers");
            if (e.integer < 0) throw InputError("exponents must be nonnegative");
            a.push_back(e.integer);
          }
          if (static_cast<int>(a.size()) != pf.dimension)
            throw InputError("generator of '" + name + "' has wrong length");
          gens.push_back(std::move(a));
        } else {
          throw InputError("generators must be monomial strings or exponent arrays");
        }
      }
      pf.ideals.emplace(name, MonomialIdeal::make(pf.dimension, std::move(gens)));
    } else if (kind == "chains") {
      auto dir_it = table.find("directions");
      if (dir_it == table.end()) throw InputError("chain '" + name + "' needs directions");
      pf.chains.emplace(name, QuadraticChain(pf.dimension, detail::parse_directions(pf, dir_it->second)));
    } else if (kind == "gammas") {
      auto ch_it = table.find("chains");
      if (ch_it == table.end()) throw InputError("configuration '" + name + "' needs chains");
      if (ch_it->second.kind != toml::Value::Kind::Array) throw InputError("chains must be an array");
      std::vector<QuadraticChain> chains;
      for (const toml::Value& c : ch_it->second.array) {
        if (c.kind == toml::Value::Kind::Array)
          chains.push_back(QuadraticChain(pf.dimension, detail::parse_directions(pf, c)));
        else if (c.kind == toml::Value::Kind::String)
          chains.push_back(QuadraticChain(pf.dimension, {}));  // placeholder, resolved below
        else
          throw InputError("configuration chains must be arrays of directions or chain names");
      }
      // resolve chain names in a second pass
      std::size_t idx = 0;
      for (const toml::Value& c : ch_it->second.array) {
        if (c.kind == toml::Value::Kind::String) {
          auto found = pf.chains.find(c.string);
          if (found == pf.chains.end()) throw InputError("unknown chain '" + c.string + "'");
          chains[idx] = found->second;
        }
        ++idx;
      }
      pf.gammas.emplace(name, make_gamma(pf.dimension, std::move(chains)));
    } else {
      throw InputError("unknown section kind '" + kind + "'");
    }
  }
  return pf;
}

}  // namespace finsupp
