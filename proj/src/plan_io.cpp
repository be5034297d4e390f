#include "qlayout/plan_io.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace qlayout {

PlanFormat parse_plan_format(std::string_view name) {
  if (name == "fd") return PlanFormat::FastDownward;
  if (name == "madagascar" || name == "m") return PlanFormat::Madagascar;
  if (name == "auto") return PlanFormat::Auto;
  throw Error("unknown plan format '" + std::string(name) + "' (expected fd, madagascar or auto)");
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool starts_with_ci(const std::string& s, std::string_view prefix) {
  return s.size() >= prefix.size() && lower(s.substr(0, prefix.size())) == prefix;
}

PlanFormatError line_error(std::size_t line, const std::string& why) {
  return PlanFormatError("plan line " + std::to_string(line) + ": " + why);
}

void parse_fd_line(const std::string& text, std::size_t line, RawPlan& plan) {
  if (text.front() != '(' || text.back() != ')') throw line_error(line, "expected '(name args...)', got '" + text + "'");
  std::istringstream fields(text.substr(1, text.size() - 2));
  RawAction action;
  action.line = line;
  for (std::string tok; fields >> tok;) {
    if (tok.find_first_of("()") != std::string::npos) throw line_error(line, "nested parentheses in '" + text + "'");
    if (action.name.empty())
      action.name = lower(tok);
    else
      action.args.push_back(lower(tok));
  }
  if (action.name.empty()) throw line_error(line, "empty action");
  plan.actions.push_back(std::move(action));
}

void parse_madagascar_line(const std::string& text, std::size_t line, RawPlan& plan) {
  static const std::regex step_re(R"(^STEP\s+(\d+)\s*:(.*)$)", std::regex::icase);
  static const std::regex action_re(R"(\s*([A-Za-z][A-Za-z0-9_\-]*)\s*\(([^()]*)\))");
  std::smatch m;
  if (!std::regex_match(text, m, step_re)) throw line_error(line, "expected 'STEP k: action(args)', got '" + text + "'");
  const std::size_t step = std::stoul(m[1].str());
  const std::string body = m[2].str();
  auto it = body.cbegin();
  std::smatch am;
  bool any = false;
  while (std::regex_search(it, body.cend(), am, action_re, std::regex_constants::match_continuous)) {
    RawAction action;
    action.name = lower(am[1].str());
    action.line = line;
    action.step = step;
    std::stringstream args(am[2].str());
    for (std::string a; std::getline(args, a, ',');) {
      a = trim(a);
      if (a.empty()) throw line_error(line, "empty argument in '" + am[0].str() + "'");
      action.args.push_back(lower(a));
    }
    plan.actions.push_back(std::move(action));
    it = am.suffix().first;
    any = true;
  }
  if (!trim(std::string(it, body.cend())).empty())
    throw line_error(line, "unrecognised text '" + trim(std::string(it, body.cend())) + "'");
  if (!any) throw line_error(line, "step without actions");
}

}  // namespace

RawPlan parse_plan(std::string_view text, PlanFormat format) {
  static const std::regex cost_re(R"(^;\s*cost\s*=\s*(-?\d+))", std::regex::icase);
  RawPlan plan;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.front() == ';') {
      std::smatch m;
      if (std::regex_search(s, m, cost_re)) plan.declared_cost = std::stol(m[1].str());
      continue;
    }
    if (format == PlanFormat::Auto) {
      if (s.front() == '(')
        format = PlanFormat::FastDownward;
      else if (starts_with_ci(s, "step"))
        format = PlanFormat::Madagascar;
      else
        throw line_error(line, "cannot tell the plan format from '" + s + "'");
    }
    if (format == PlanFormat::FastDownward)
      parse_fd_line(s, line, plan);
    else
      parse_madagascar_line(s, line, plan);
  }
  return plan;
}

std::string write_plan_fd(const RawPlan& plan) {
  std::ostringstream out;
  for (const auto& a : plan.actions) {
    out << "(" << a.name;
    for (const auto& arg : a.args) out << " " << arg;
    out << ")\n";
  }
  if (plan.declared_cost) out << "; cost = " << *plan.declared_cost << " (unit cost)\n";
  return out.str();
}

std::string write_plan_madagascar(const RawPlan& plan) {
  std::ostringstream out;
  std::size_t next = 0;
  std::optional<std::size_t> open_step;
  for (const auto& a : plan.actions) {
    std::size_t step = a.step.value_or(next);
    if (open_step != step) {
      if (open_step) out << "\n";
      out << "STEP " << step << ":";
      open_step = step;
    }
    out << " " << a.name << "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) out << (i ? "," : "") << a.args[i];
    out << ")";
    next = step + 1;
  }
  if (open_step) out << "\n";
  return out.str();
}

namespace {

class Binder {
 public:
  Binder(const EncodingConfig& cfg, const RoutingInstance& instance) : cfg_(cfg), inst_(instance) {}

  Plan bind(const RawPlan& raw) {
    Plan plan;
    for (std::size_t step = 0; step < raw.actions.size(); ++step) {
      step_ = step;
      action_ = &raw.actions[step];
      plan.actions.push_back(bind_one(*action_));
    }
    ReplayOptions options;
    options.semantics = cfg_.model == EncodingModel::Global ? Semantics::Global : Semantics::Local;
    replay(plan, inst_, options);
    return plan;
  }

 private:
  PlanFormatError error(const std::string& why) const {
    return PlanFormatError("plan action " + std::to_string(step_) + " (line " + std::to_string(action_->line) + ", " +
                           action_->name + "): " + why);
  }

  void arity(std::size_t expected) const {
    if (action_->args.size() != expected)
      throw error("expected " + std::to_string(expected) + " arguments, got " + std::to_string(action_->args.size()));
  }

  std::size_t number(const std::string& obj, char prefix) const {
    if (obj.size() < 2 || obj[0] != prefix ||
        !std::all_of(obj.begin() + 1, obj.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw error(std::string("unknown object '") + obj + "' (expected " + prefix + "<index>)");
    return std::stoul(obj.substr(1));
  }

  std::size_t logical(const std::string& obj) const {
    std::size_t l = number(obj, 'l');
    if (l >= inst_.num_logical) throw error("unknown logical qubit '" + obj + "'");
    return l;
  }
  std::size_t physical(const std::string& obj) const {
    std::size_t p = number(obj, 'p');
    if (p >= inst_.graph.num_pqubits()) throw error("unknown physical qubit '" + obj + "'");
    return p;
  }
  const DepNode& gate(const std::string& obj) const {
    std::size_t id = number(obj, 'g');
    const DepNode* node = inst_.node(id);
    if (!node) throw error("unknown gate '" + obj + "'");
    return *node;
  }
  std::size_t depth(const std::string& obj) const {
    std::size_t d = number(obj, 'd');
    const auto& ds = inst_.layers.cnot_depths;
    if (std::find(ds.begin(), ds.end(), d) == ds.end()) throw error("unknown depth '" + obj + "'");
    return d;
  }

  // A gate-or-lqubit argument of the lifted encodings must name pred `which`.
  void check_pred(const DepNode& node, std::size_t which, const std::string& obj) const {
    const Pred& pred = node.preds[which];
    std::string expected = is_input(pred) ? lname(std::get<InputQubit>(pred).qubit) : gname(std::get<GateRef>(pred).id);
    if (obj != expected)
      throw ReplayError(step_, "no fact (cnot ...) for g" + std::to_string(node.gate_id) + " with dependency " + obj +
                                   " (expected " + expected + ")");
  }

  PlanAction bind_lifted_cnot(const std::vector<std::string>& a, bool pred1_input, bool pred2_input,
                              bool explicit_preds) const {
    const DepNode& node = gate(a[4]);
    std::size_t l1 = logical(a[0]);
    std::size_t l2 = logical(a[1]);
    if (node.qubits[0] != l1 || node.qubits[1] != l2)
      throw ReplayError(step_, "no fact (cnot " + a[0] + " " + a[1] + " " + a[4] + " ...)");
    if (explicit_preds) {
      check_pred(node, 0, a[5]);
      check_pred(node, 1, a[6]);
    } else {
      std::size_t k = 5;
      if (is_input(node.preds[0]) != pred1_input || is_input(node.preds[1]) != pred2_input)
        throw ReplayError(step_, "action " + action_->name + " does not match the dependencies of " + a[4]);
      if (!pred1_input) check_pred(node, 0, a[k++]);
      if (!pred2_input) check_pred(node, 1, a[k++]);
    }
    return ApplyCnot{node.gate_id, physical(a[2]), physical(a[3])};
  }

  PlanAction bind_one(const RawAction& act) const {
    const std::string& name = act.name;
    const auto& a = act.args;
    const EncodingModel model = cfg_.model;

    if (name == "swap") {
      arity(4);
      return Swap{logical(a[0]), logical(a[1]), physical(a[2]), physical(a[3])};
    }
    if (name == "swap-ancillary1" || name == "swap-ancillary2") {
      if (!cfg_.ancillary_swaps) throw error("ancillary swaps are disabled for this encoding");
      arity(3);
      std::size_t l = logical(a[0]);
      std::size_t p1 = physical(a[1]);
      std::size_t p2 = physical(a[2]);
      return name == "swap-ancillary1" ? SwapAncilla{l, p1, p2} : SwapAncilla{l, p2, p1};
    }

    switch (model) {
      case EncodingModel::LocalCompact:
        if (name.rfind("apply_cnot_g", 0) == 0) {
          arity(2);
          const DepNode& node = gate(name.substr(std::string("apply_cnot_").size()));
          return ApplyCnot{node.gate_id, physical(a[0]), physical(a[1])};
        }
        break;
      case EncodingModel::LiftedInitial:
        if (name == "map_initial") {
          arity(2);
          return MapInitial{logical(a[0]), physical(a[1])};
        }
        if (name == "apply_cnot") {
          arity(7);
          return bind_lifted_cnot(a, false, false, true);
        }
        break;
      case EncodingModel::LiftedCompact:
        if (name == "apply_cnot_gate_gate") {
          arity(7);
          return bind_lifted_cnot(a, false, false, false);
        }
        if (name == "apply_cnot_input_input") {
          arity(5);
          return bind_lifted_cnot(a, true, true, false);
        }
        if (name == "apply_cnot_gate_input") {
          arity(6);
          return bind_lifted_cnot(a, false, true, false);
        }
        if (name == "apply_cnot_input_gate") {
          arity(6);
          return bind_lifted_cnot(a, true, false, false);
        }
        break;
      case EncodingModel::Global:
        if (name == "map_initial") {
          arity(2);
          return MapInitial{logical(a[0]), physical(a[1])};
        }
        if (name == "move_depth") {
          arity(2);
          return MoveDepth{depth(a[0]), depth(a[1])};
        }
        if (name == "apply_cnot") {
          arity(5);
          std::size_t l1 = logical(a[0]);
          std::size_t l2 = logical(a[1]);
          std::size_t d = depth(a[4]);
          for (const auto& node : inst_.dag) {
            if (node.qubits[0] == l1 && node.qubits[1] == l2 && inst_.layers.depth_of.at(node.gate_id) == d)
              return ApplyCnot{node.gate_id, physical(a[2]), physical(a[3])};
          }
          throw ReplayError(step_, "no fact (rcnot " + a[0] + " " + a[1] + " " + a[4] + ")");
        }
        break;
    }
    throw error("unknown action for the " + std::string(to_string(model)) + " encoding");
  }

  const EncodingConfig& cfg_;
  const RoutingInstance& inst_;
  std::size_t step_ = 0;
  const RawAction* action_ = nullptr;
};

}  // namespace

Plan bind_plan(const RawPlan& raw, const EncodingConfig& cfg, const RoutingInstance& instance) {
  return Binder(cfg, instance).bind(raw);
}

RawPlan to_raw(const Plan& plan, EncodingModel model, const RoutingInstance& instance) {
  if (model == EncodingModel::Global) throw Error("local-semantics plans cannot be written for the global encoding");
  RawPlan raw;
  std::vector<std::size_t> position(instance.num_logical, kUnmapped);
  auto add = [&](std::string name, std::vector<std::string> args) {
    RawAction a;
    a.name = std::move(name);
    a.args = std::move(args);
    raw.actions.push_back(std::move(a));
  };
  auto pred_obj = [](const Pred& p) {
    return is_input(p) ? lname(std::get<InputQubit>(p).qubit) : gname(std::get<GateRef>(p).id);
  };
  for (const auto& action : plan.actions) {
    if (auto c = std::get_if<ApplyCnot>(&action)) {
      const DepNode* node = instance.node(c->gate_id);
      if (!node) throw Error("plan refers to unknown gate g" + std::to_string(c->gate_id));
      const std::size_t l1 = node->qubits[0];
      const std::size_t l2 = node->qubits[1];
      const bool fresh1 = position[l1] == kUnmapped;
      const bool fresh2 = position[l2] == kUnmapped;
      std::vector<std::string> base{lname(l1), lname(l2), pname(c->p1), pname(c->p2), gname(c->gate_id)};
      switch (model) {
        case EncodingModel::LocalCompact:
          add("apply_cnot_" + gname(c->gate_id), {pname(c->p1), pname(c->p2)});
          break;
        case EncodingModel::LiftedInitial:
          if (fresh1) add("map_initial", {lname(l1), pname(c->p1)});
          if (fresh2) add("map_initial", {lname(l2), pname(c->p2)});
          base.push_back(pred_obj(node->preds[0]));
          base.push_back(pred_obj(node->preds[1]));
          add("apply_cnot", base);
          break;
        case EncodingModel::LiftedCompact:
          if (!fresh1) base.push_back(pred_obj(node->preds[0]));
          if (!fresh2) base.push_back(pred_obj(node->preds[1]));
          add(std::string("apply_cnot_") + (fresh1 ? "input" : "gate") + "_" + (fresh2 ? "input" : "gate"), base);
          break;
        case EncodingModel::Global: break;
      }
      position[l1] = c->p1;
      position[l2] = c->p2;
    } else if (auto s = std::get_if<Swap>(&action)) {
      if (instance.graph.has_edge(s->p1, s->p2))
        add("swap", {lname(s->l1), lname(s->l2), pname(s->p1), pname(s->p2)});
      else
        add("swap", {lname(s->l2), lname(s->l1), pname(s->p2), pname(s->p1)});
      position[s->l1] = s->p2;
      position[s->l2] = s->p1;
    } else if (auto s = std::get_if<SwapAncilla>(&action)) {
      if (instance.graph.has_edge(s->from, s->to))
        add("swap-ancillary1", {lname(s->l), pname(s->from), pname(s->to)});
      else
        add("swap-ancillary2", {lname(s->l), pname(s->to), pname(s->from)});
      position[s->l] = s->to;
    } else if (auto mi = std::get_if<MapInitial>(&action)) {
      if (model != EncodingModel::LiftedInitial) throw Error("map_initial only exists in the lifted_initial encoding");
      add("map_initial", {lname(mi->l), pname(mi->p)});
      position[mi->l] = mi->p;
    } else {
      throw Error("move_depth only exists in the global encoding");
    }
  }
  raw.declared_cost = static_cast<long>(raw.actions.size());
  return raw;
}

}  // namespace qlayout
