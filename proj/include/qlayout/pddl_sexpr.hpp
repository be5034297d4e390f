#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qlayout/error.hpp"

namespace qlayout::pddl {

class SyntaxError : public Error {
 public:
  using Error::Error;
};

/// Atom or parenthesised list. Atoms are stored lowercased.
struct SExpr {
  std::string atom;
  std::vector<SExpr> items;
  bool is_list = false;

  bool is_atom(std::string_view s) const { return !is_list && atom == s; }
  /// True for a list whose first element is the atom `head`.
  bool headed(std::string_view head) const { return is_list && !items.empty() && items[0].is_atom(head); }
  bool operator==(const SExpr&) const = default;
  auto operator<=>(const SExpr& other) const {
    if (auto c = is_list <=> other.is_list; c != 0) return c;
    if (auto c = atom <=> other.atom; c != 0) return c;
    return items <=> other.items;
  }
};

/// Parses exactly one expression; `;` comments are skipped.
SExpr parse_sexpr(std::string_view text);
std::string to_string(const SExpr& expr);

/// Canonical single-line form for comparing PDDL files: lowercase, single
/// spaces, duplicate conjuncts inside `and` removed, `connected` facts in
/// `:init` sorted.
std::string normalize(std::string_view text);

/// Structural check of a STRIPS + typing + negative-preconditions (+ optional
/// action-costs) domain/problem pair: declared predicates and arities,
/// variables bound by parameters, objects and constants declared with
/// compatible types. Returns human-readable problems; empty when valid.
std::vector<std::string> check_pair(std::string_view domain_text, std::string_view problem_text);

}  // namespace qlayout::pddl
