#pragma once

#include <vector>

#include "pseudomarket/flow.hpp"
#include "pseudomarket/model.hpp"

namespace pseudomarket {

struct EpsRound {
  Rational value;           // v_k, strictly increasing across rounds
  std::vector<int> agents;  // X_k
  std::vector<int> items;   // O_k, fully consumed by X_k
};

struct EpsTrace {
  std::vector<EpsRound> rounds;
  /// Agents that exited with one full unit of liked items (the terminal
  /// maximum-matching phase).
  std::vector<int> matched_agents;
  /// Items with residual capacity handed out in the final top-up step.
  std::vector<int> leftover_items;
  /// Live agents whose liked sets emptied mid-run. Cannot occur when rounds
  /// remove maximal bottleneck sets; kept as a guard and asserted empty in
  /// tests.
  std::vector<int> orphan_agents;
};

struct EpsResult {
  FractionalAssignment assignment;  // balanced
  EpsTrace trace;
};

/// Water-filling rule for dichotomous preferences: repeatedly removes the
/// maximum-cardinality bottleneck set at its rate, switches to a maximum
/// matching once every remaining agent can reach a full unit, then tops the
/// deficient agents up to row sum 1 with the leftover items.
EpsResult eps_solve(const Instance& inst);

/// Utility guaranteed to each agent by the trace (with respect to the
/// binary-reduced utilities): v_k for round-k agents, 1 for matched agents,
/// 0 for orphans.
std::vector<Rational> trace_utilities(const EpsTrace& trace, int agents);

/// Sheds mass from over-allocated agents (least preferred items first,
/// ties to the highest item index) and hands it to under-allocated agents in
/// ascending index order until every row sums to 1. Columns are preserved.
FractionalAssignment balancing_operation(const Instance& inst, const FractionalAssignment& x);

}  // namespace pseudomarket
