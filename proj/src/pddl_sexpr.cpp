#include "qlayout/pddl_sexpr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace qlayout::pddl {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  SExpr read() {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input");
    char c = text_[pos_];
    if (c == ')') throw SyntaxError("unexpected ')' at offset " + std::to_string(pos_));
    if (c == '(') {
      ++pos_;
      SExpr list;
      list.is_list = true;
      for (;;) {
        skip();
        if (pos_ >= text_.size()) throw SyntaxError("unbalanced '(': missing ')'");
        if (text_[pos_] == ')') {
          ++pos_;
          return list;
        }
        list.items.push_back(read());
      }
    }
    SExpr atom;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')' && text_[pos_] != ';') {
      atom.atom.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_]))));
      ++pos_;
    }
    return atom;
  }

  bool done() {
    skip();
    return pos_ >= text_.size();
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void dedupe_conjuncts(SExpr& e) {
  if (!e.is_list) return;
  for (auto& child : e.items) dedupe_conjuncts(child);
  if (!e.headed("and")) return;
  std::vector<SExpr> kept;
  for (auto& child : e.items)
    if (std::find(kept.begin(), kept.end(), child) == kept.end()) kept.push_back(std::move(child));
  e.items = std::move(kept);
}

void sort_connected(SExpr& e) {
  if (!e.is_list) return;
  if (e.headed(":init")) {
    std::vector<std::size_t> slots;
    std::vector<SExpr> facts;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      if (e.items[i].headed("connected")) {
        slots.push_back(i);
        facts.push_back(e.items[i]);
      }
    }
    std::sort(facts.begin(), facts.end());
    for (std::size_t k = 0; k < slots.size(); ++k) e.items[slots[k]] = facts[k];
    return;
  }
  for (auto& child : e.items) sort_connected(child);
}

// ---- structural checker ----

struct TypedName {
  std::string name;
  std::string type;
};

std::vector<TypedName> typed_list(const std::vector<SExpr>& items, std::size_t from, std::vector<std::string>& errs,
                                  const std::string& where) {
  std::vector<TypedName> out;
  std::vector<std::string> pending;
  for (std::size_t i = from; i < items.size(); ++i) {
    if (items[i].is_list) {
      errs.push_back(where + ": unexpected list in typed list");
      continue;
    }
    if (items[i].atom == "-") {
      if (i + 1 >= items.size() || items[i + 1].is_list) {
        errs.push_back(where + ": '-' not followed by a type name");
        return out;
      }
      for (auto& n : pending) out.push_back({n, items[i + 1].atom});
      pending.clear();
      ++i;
    } else {
      pending.push_back(items[i].atom);
    }
  }
  for (auto& n : pending) out.push_back({n, "object"});
  return out;
}

class Checker {
 public:
  std::vector<std::string> errs;

  void domain(const SExpr& d) {
    if (!d.headed("define") || d.items.size() < 2 || !d.items[1].headed("domain") || d.items[1].items.size() != 2) {
      errs.push_back("domain: expected (define (domain NAME) ...)");
      return;
    }
    domain_name_ = d.items[1].items[1].atom;
    for (std::size_t i = 2; i < d.items.size(); ++i) {
      const SExpr& sec = d.items[i];
      if (!sec.is_list || sec.items.empty() || sec.items[0].is_list) {
        errs.push_back("domain: malformed section");
        continue;
      }
      const std::string& key = sec.items[0].atom;
      if (key == ":requirements") {
        for (std::size_t k = 1; k < sec.items.size(); ++k) {
          static const std::set<std::string> ok{":strips", ":typing", ":negative-preconditions", ":action-costs"};
          if (!ok.count(sec.items[k].atom)) errs.push_back("domain: unsupported requirement " + sec.items[k].atom);
          requirements_.insert(sec.items[k].atom);
        }
      } else if (key == ":types") {
        for (auto& t : typed_list(sec.items, 1, errs, ":types")) parent_[t.name] = t.type;
      } else if (key == ":constants") {
        for (auto& t : typed_list(sec.items, 1, errs, ":constants")) declare_object(t, "constant");
      } else if (key == ":predicates") {
        for (std::size_t k = 1; k < sec.items.size(); ++k) {
          const SExpr& p = sec.items[k];
          if (!p.is_list || p.items.empty() || p.items[0].is_list) {
            errs.push_back("predicates: malformed declaration");
            continue;
          }
          std::vector<std::string> types;
          for (auto& t : typed_list(p.items, 1, errs, "predicate " + p.items[0].atom)) {
            check_type_known(t.type, "predicate " + p.items[0].atom);
            types.push_back(t.type);
          }
          predicates_[p.items[0].atom] = types;
        }
      } else if (key == ":functions") {
        if (!requirements_.count(":action-costs")) errs.push_back("domain: :functions without :action-costs");
      } else if (key == ":action") {
        action(sec);
      } else {
        errs.push_back("domain: unknown section " + key);
      }
    }
    if (!requirements_.count(":typing") && parent_.size() > 0) errs.push_back("domain: :types without :typing");
  }

  void problem(const SExpr& p) {
    if (!p.headed("define") || p.items.size() < 2 || !p.items[1].headed("problem")) {
      errs.push_back("problem: expected (define (problem NAME) ...)");
      return;
    }
    bool have_goal = false;
    for (std::size_t i = 2; i < p.items.size(); ++i) {
      const SExpr& sec = p.items[i];
      if (!sec.is_list || sec.items.empty() || sec.items[0].is_list) {
        errs.push_back("problem: malformed section");
        continue;
      }
      const std::string& key = sec.items[0].atom;
      if (key == ":domain") {
        if (sec.items.size() != 2 || sec.items[1].atom != domain_name_)
          errs.push_back("problem: :domain does not name domain " + domain_name_);
      } else if (key == ":objects") {
        for (auto& t : typed_list(sec.items, 1, errs, ":objects")) declare_object(t, "object");
      } else if (key == ":init") {
        for (std::size_t k = 1; k < sec.items.size(); ++k) {
          const SExpr& f = sec.items[k];
          if (f.headed("=")) {
            if (!requirements_.count(":action-costs")) errs.push_back("init: numeric fluent without :action-costs");
            continue;
          }
          atom(f, {}, "init");
        }
      } else if (key == ":goal") {
        have_goal = true;
        if (sec.items.size() != 2)
          errs.push_back("problem: :goal takes exactly one condition");
        else
          condition(sec.items[1], {}, "goal");
      } else if (key == ":metric") {
        if (!requirements_.count(":action-costs")) errs.push_back("problem: :metric without :action-costs");
      } else {
        errs.push_back("problem: unknown section " + key);
      }
    }
    if (!have_goal) errs.push_back("problem: missing :goal");
  }

 private:
  using Scope = std::map<std::string, std::string>;

  void declare_object(const TypedName& t, const std::string& what) {
    check_type_known(t.type, what + " " + t.name);
    if (objects_.count(t.name)) errs.push_back(what + " " + t.name + " declared twice");
    objects_[t.name] = t.type;
  }

  void check_type_known(const std::string& type, const std::string& where) {
    if (type != "object" && !parent_.count(type)) errs.push_back(where + ": unknown type " + type);
  }

  bool subtype(std::string t, const std::string& of) const {
    for (int guard = 0; guard < 64; ++guard) {
      if (t == of) return true;
      auto it = parent_.find(t);
      if (it == parent_.end()) return of == "object";
      t = it->second;
    }
    return false;
  }

  void action(const SExpr& a) {
    if (a.items.size() < 2 || a.items[1].is_list) {
      errs.push_back("action: missing name");
      return;
    }
    const std::string name = "action " + a.items[1].atom;
    Scope scope;
    bool have_effect = false;
    for (std::size_t i = 2; i + 1 < a.items.size(); i += 2) {
      const SExpr& key = a.items[i];
      const SExpr& val = a.items[i + 1];
      if (key.is_atom(":parameters")) {
        if (!val.is_list) {
          errs.push_back(name + ": :parameters must be a list");
          continue;
        }
        for (auto& t : typed_list(val.items, 0, errs, name)) {
          if (t.name.empty() || t.name[0] != '?') errs.push_back(name + ": parameter " + t.name + " lacks '?'");
          check_type_known(t.type, name);
          scope[t.name] = t.type;
        }
      } else if (key.is_atom(":precondition")) {
        condition(val, scope, name);
      } else if (key.is_atom(":effect")) {
        have_effect = true;
        effect(val, scope, name);
      } else {
        errs.push_back(name + ": unknown key " + key.atom);
      }
    }
    if ((a.items.size() - 2) % 2 != 0) errs.push_back(name + ": dangling key");
    if (!have_effect) errs.push_back(name + ": missing :effect");
  }

  void condition(const SExpr& c, const Scope& scope, const std::string& where) {
    if (c.headed("and")) {
      for (std::size_t i = 1; i < c.items.size(); ++i) condition(c.items[i], scope, where);
    } else if (c.headed("not")) {
      if (!requirements_.count(":negative-preconditions"))
        errs.push_back(where + ": negation without :negative-preconditions");
      if (c.items.size() != 2)
        errs.push_back(where + ": 'not' takes one atom");
      else
        atom(c.items[1], scope, where);
    } else {
      atom(c, scope, where);
    }
  }

  void effect(const SExpr& e, const Scope& scope, const std::string& where) {
    if (e.headed("and")) {
      for (std::size_t i = 1; i < e.items.size(); ++i) effect(e.items[i], scope, where);
    } else if (e.headed("not")) {
      if (e.items.size() != 2)
        errs.push_back(where + ": 'not' takes one atom");
      else
        atom(e.items[1], scope, where);
    } else if (e.headed("increase")) {
      if (!requirements_.count(":action-costs")) errs.push_back(where + ": increase without :action-costs");
    } else {
      atom(e, scope, where);
    }
  }

  void atom(const SExpr& a, const Scope& scope, const std::string& where) {
    if (!a.is_list || a.items.empty() || a.items[0].is_list) {
      errs.push_back(where + ": expected an atom, got " + to_string(a));
      return;
    }
    auto it = predicates_.find(a.items[0].atom);
    if (it == predicates_.end()) {
      errs.push_back(where + ": undeclared predicate " + a.items[0].atom);
      return;
    }
    const auto& types = it->second;
    if (a.items.size() - 1 != types.size()) {
      errs.push_back(where + ": " + to_string(a) + " has arity " + std::to_string(a.items.size() - 1) + ", expected " +
                     std::to_string(types.size()));
      return;
    }
    for (std::size_t i = 0; i < types.size(); ++i) {
      const SExpr& arg = a.items[i + 1];
      if (arg.is_list) {
        errs.push_back(where + ": nested term in " + to_string(a));
        continue;
      }
      std::string type;
      if (!arg.atom.empty() && arg.atom[0] == '?') {
        auto v = scope.find(arg.atom);
        if (v == scope.end()) {
          errs.push_back(where + ": unbound variable " + arg.atom);
          continue;
        }
        type = v->second;
      } else {
        auto o = objects_.find(arg.atom);
        if (o == objects_.end()) {
          errs.push_back(where + ": undeclared object " + arg.atom);
          continue;
        }
        type = o->second;
      }
      if (!subtype(type, types[i]))
        errs.push_back(where + ": argument " + arg.atom + " of type " + type + " where " + types[i] + " expected");
    }
  }

  std::string domain_name_;
  std::set<std::string> requirements_;
  std::map<std::string, std::string> parent_;
  std::map<std::string, std::string> objects_;
  std::map<std::string, std::vector<std::string>> predicates_;
};

}  // namespace

SExpr parse_sexpr(std::string_view text) {
  Reader reader(text);
  SExpr e = reader.read();
  if (!reader.done()) throw SyntaxError("trailing text after expression");
  return e;
}

std::string to_string(const SExpr& expr) {
  if (!expr.is_list) return expr.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < expr.items.size(); ++i) {
    if (i) out += ' ';
    out += to_string(expr.items[i]);
  }
  out += ')';
  return out;
}

std::string normalize(std::string_view text) {
  SExpr e = parse_sexpr(text);
  dedupe_conjuncts(e);
  sort_connected(e);
  return to_string(e);
}

std::vector<std::string> check_pair(std::string_view domain_text, std::string_view problem_text) {
  Checker checker;
  try {
    checker.domain(parse_sexpr(domain_text));
    checker.problem(parse_sexpr(problem_text));
  } catch (const SyntaxError& e) {
    checker.errs.push_back(std::string("syntax: ") + e.what());
  }
  return checker.errs;
}

}  // namespace qlayout::pddl
