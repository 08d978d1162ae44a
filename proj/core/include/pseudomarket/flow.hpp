#pragma once

#include <utility>
#include <vector>

#include "pseudomarket/model.hpp"
#include "pseudomarket/rational.hpp"

namespace pseudomarket {

/// Source -> agent -> item -> sink network. Agent/item ids are positions in
/// `agents`/`items`; `liked` is indexed by the global agent id and holds
/// global item ids. Agent->item arcs are uncapacitated, item->sink arcs carry
/// capacity 1, source->agent arcs carry `rate[k]` for agents[k].
struct BipartiteFlowNetwork {
  const std::vector<std::vector<int>>* liked = nullptr;
  std::vector<int> agents;
  std::vector<int> items;
  std::vector<Rational> rates;
};

struct MaxFlowResult {
  Rational value;
  bool feasible = false;  // value == sum of rates
  /// Positive agent->item flows, (global agent, global item, amount).
  std::vector<std::tuple<int, int, Rational>> flows;
  /// Agents on the source side of the *maximal* minimum cut (global ids,
  /// ascending). At a tight rate these are the bottleneck agents.
  std::vector<int> tight_agents;
};

/// Exact maximum flow. Capacities are cleared to the common denominator of
/// the rates so the computation runs on integers.
MaxFlowResult max_flow(const BipartiteFlowNetwork& net);

/// True iff every live agent can simultaneously receive `rate` units of
/// liked live items.
bool feasible_rate(const std::vector<std::vector<int>>& liked, const std::vector<int>& live_agents,
                   const std::vector<int>& live_items, const Rational& rate);

/// Same check with one rate per live agent; returns the full flow result.
MaxFlowResult route_rates(const std::vector<std::vector<int>>& liked,
                          const std::vector<int>& live_agents, const std::vector<int>& live_items,
                          const std::vector<Rational>& rates);

struct BottleneckResult {
  Rational value;          // v = min over nonempty C of |N(C)| / |C|
  std::vector<int> agents; // X: the maximum-cardinality minimizer, ascending
  std::vector<int> items;  // N(X): union of liked live items over X, ascending
};

/// Bottleneck set of the live sub-market. Every live agent must have a
/// nonempty liked set among the live items. The value is located by binary
/// search over the candidate grid {a/b : 1 <= a <= |items|, 1 <= b <= |agents|}
/// and X is read off the maximal minimum cut at that rate.
BottleneckResult bottleneck(const std::vector<std::vector<int>>& liked,
                            const std::vector<int>& live_agents,
                            const std::vector<int>& live_items);

/// Independent oracle: exhaustive enumeration of all nonempty agent subsets.
/// Throws TooLarge above 16 live agents.
BottleneckResult bottleneck_bruteforce(const std::vector<std::vector<int>>& liked,
                                       const std::vector<int>& live_agents,
                                       const std::vector<int>& live_items);

}  // namespace pseudomarket
