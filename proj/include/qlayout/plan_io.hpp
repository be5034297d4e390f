#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlayout/instance.hpp"
#include "qlayout/pddl_encode.hpp"
#include "qlayout/planner.hpp"

namespace qlayout {

enum class PlanFormat { FastDownward, Madagascar, Auto };

PlanFormat parse_plan_format(std::string_view name);  // fd, madagascar, auto

struct RawAction {
  std::string name;  // lowercased
  std::vector<std::string> args;
  std::size_t line = 0;
  std::optional<std::size_t> step;  // Madagascar STEP index
  bool operator==(const RawAction& o) const { return name == o.name && args == o.args; }
};

struct RawPlan {
  std::vector<RawAction> actions;
  std::optional<long> declared_cost;
};

/// Fast Downward style: one `(name arg ...)` per line, `;` comments, an
/// optional `; cost = N ...` trailer. Madagascar style: `STEP k: a(x,y) b(z)`
/// lines; actions inside a step keep their textual order. Throws
/// PlanFormatError.
RawPlan parse_plan(std::string_view text, PlanFormat format = PlanFormat::Auto);

std::string write_plan_fd(const RawPlan& plan);
/// Each action gets its own step unless it carries one.
std::string write_plan_madagascar(const RawPlan& plan);

/// Resolves action and object names for the given encoding, then replays the
/// plan (layered semantics for the global model). Throws PlanFormatError on
/// unknown names or arity mismatch and ReplayError on illegal actions.
Plan bind_plan(const RawPlan& raw, const EncodingConfig& cfg, const RoutingInstance& instance);

/// Serialises a local-semantics plan with the action names of `model`
/// (local, lifted_compact or lifted_initial; map_initial actions are
/// inserted for lifted_initial). Swaps are oriented along an existing edge.
RawPlan to_raw(const Plan& plan, EncodingModel model, const RoutingInstance& instance);

}  // namespace qlayout
