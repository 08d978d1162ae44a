#include "pseudomarket/flow.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>

#include "pseudomarket/errors.hpp"

namespace pseudomarket {

namespace {

template <typename Int>
class Dinic {
 public:
  explicit Dinic(int nodes) : graph_(nodes), level_(nodes), iter_(nodes) {}

  // Returns the index of the forward arc within graph_[from].
  int add_edge(int from, int to, Int cap) {
    const int idx = static_cast<int>(graph_[from].size());
    graph_[from].push_back(Arc{to, static_cast<int>(graph_[to].size()), std::move(cap)});
    graph_[to].push_back(Arc{from, idx, Int(0)});
    return idx;
  }

  Int run(int source, int sink) {
    Int total(0);
    while (bfs(source, sink)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      for (;;) {
        Int pushed = dfs(source, sink, Int(-1));
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  const Int& residual(int node, int arc) const { return graph_[node][arc].cap; }

  // Nodes that can still reach the sink in the residual graph.
  std::vector<char> reaches_sink(int sink) const {
    std::vector<char> seen(graph_.size(), 0);
    std::queue<int> queue;
    seen[sink] = 1;
    queue.push(sink);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (const Arc& arc : graph_[v]) {
        // The partner arc runs arc.to -> v; positive residual there means
        // arc.to can step to v.
        if (!seen[arc.to] && graph_[arc.to][arc.rev].cap > 0) {
          seen[arc.to] = 1;
          queue.push(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int rev;
    Int cap;
  };

  bool bfs(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (const Arc& arc : graph_[v]) {
        if (arc.cap > 0 && level_[arc.to] < 0) {
          level_[arc.to] = level_[v] + 1;
          queue.push(arc.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Int dfs(int v, int sink, Int limit) {
    if (v == sink) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(graph_[v].size()); ++i) {
      Arc& arc = graph_[v][i];
      if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
      Int step = limit < 0 ? arc.cap : std::min(limit, arc.cap);
      Int pushed = dfs(arc.to, sink, std::move(step));
      if (pushed > 0) {
        arc.cap -= pushed;
        graph_[arc.to][arc.rev].cap += pushed;
        return pushed;
      }
    }
    return Int(0);
  }

  std::vector<std::vector<Arc>> graph_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

struct ArcRecord {
  int agent_pos;  // position in net.agents
  int item_global;
  int arc_index;  // forward arc index within the agent node
  BigInt cap;
};

template <typename Int>
MaxFlowResult solve_scaled(const BipartiteFlowNetwork& net, const std::vector<BigInt>& rate_scaled,
                           const BigInt& item_cap, const BigInt& infinite) {
  const int num_agents = static_cast<int>(net.agents.size());
  const int num_items = static_cast<int>(net.items.size());
  const int source = 0;
  const int sink = 1 + num_agents + num_items;
  Dinic<Int> dinic(sink + 1);

  // global item id -> node id
  int max_item = -1;
  for (int j : net.items) max_item = std::max(max_item, j);
  std::vector<int> node_of_item(max_item + 1, -1);
  for (int k = 0; k < num_items; ++k) node_of_item[net.items[k]] = 1 + num_agents + k;

  BigInt target(0);
  for (int k = 0; k < num_agents; ++k) {
    dinic.add_edge(source, 1 + k, Int(rate_scaled[k]));
    target += rate_scaled[k];
  }
  std::vector<ArcRecord> records;
  for (int k = 0; k < num_agents; ++k) {
    for (int j : (*net.liked)[net.agents[k]]) {
      if (j <= max_item && node_of_item[j] >= 0) {
        const int idx = dinic.add_edge(1 + k, node_of_item[j], Int(infinite));
        records.push_back(ArcRecord{k, j, idx, infinite});
      }
    }
  }
  for (int k = 0; k < num_items; ++k) {
    dinic.add_edge(1 + num_agents + k, sink, Int(item_cap));
  }

  const Int total = dinic.run(source, sink);

  MaxFlowResult result;
  result.value = Rational(BigInt(total), item_cap);
  result.feasible = BigInt(total) == target;
  for (const ArcRecord& rec : records) {
    const Int& residual = dinic.residual(1 + rec.agent_pos, rec.arc_index);
    BigInt flow = rec.cap - BigInt(residual);
    if (flow > 0) {
      result.flows.emplace_back(net.agents[rec.agent_pos], rec.item_global,
                                Rational(std::move(flow), item_cap));
    }
  }
  const std::vector<char> reach = dinic.reaches_sink(sink);
  for (int k = 0; k < num_agents; ++k) {
    if (!reach[1 + k]) result.tight_agents.push_back(net.agents[k]);
  }
  return result;
}

}  // namespace

MaxFlowResult max_flow(const BipartiteFlowNetwork& net) {
  if (net.agents.size() != net.rates.size()) {
    throw Error(ErrorCode::DimensionMismatch, "one rate per agent required");
  }
  BigInt denom = common_denominator(net.rates);
  std::vector<BigInt> rate_scaled(net.rates.size());
  BigInt target(0);
  for (std::size_t k = 0; k < net.rates.size(); ++k) {
    if (net.rates[k].sign() < 0) {
      throw Error(ErrorCode::MassMismatch, "negative rate", static_cast<long>(k));
    }
    rate_scaled[k] = net.rates[k].numerator() * (denom / net.rates[k].denominator());
    target += rate_scaled[k];
  }
  const BigInt item_total = denom * BigInt(static_cast<long>(net.items.size()));
  const BigInt infinite = std::min(target, item_total) + 1;

  // Everything Dinic touches is bounded by `infinite`; stay on machine
  // integers when that fits comfortably.
  static const BigInt kInt64Limit = (BigInt(1) << 61);
  if (infinite < kInt64Limit && denom < kInt64Limit) {
    return solve_scaled<long long>(net, rate_scaled, denom, infinite);
  }
  return solve_scaled<BigInt>(net, rate_scaled, denom, infinite);
}

MaxFlowResult route_rates(const std::vector<std::vector<int>>& liked,
                          const std::vector<int>& live_agents, const std::vector<int>& live_items,
                          const std::vector<Rational>& rates) {
  BipartiteFlowNetwork net;
  net.liked = &liked;
  net.agents = live_agents;
  net.items = live_items;
  net.rates = rates;
  return max_flow(net);
}

bool feasible_rate(const std::vector<std::vector<int>>& liked, const std::vector<int>& live_agents,
                   const std::vector<int>& live_items, const Rational& rate) {
  if (rate.sign() == 0) return true;
  std::vector<Rational> rates(live_agents.size(), rate);
  return route_rates(liked, live_agents, live_items, rates).feasible;
}

namespace {

// Reduced fraction grid {a/b : 1 <= a <= max_num, 1 <= b <= max_den}, ascending.
std::vector<std::pair<long long, long long>> candidate_grid(int max_num, int max_den) {
  std::vector<std::pair<long long, long long>> grid;
  grid.reserve(static_cast<std::size_t>(max_num) * max_den);
  for (long long a = 1; a <= max_num; ++a) {
    for (long long b = 1; b <= max_den; ++b) {
      const long long g = std::gcd(a, b);
      grid.emplace_back(a / g, b / g);
    }
  }
  const auto less = [](const auto& lhs, const auto& rhs) {
    return lhs.first * rhs.second < rhs.first * lhs.second;
  };
  std::sort(grid.begin(), grid.end(), less);
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<int> liked_union(const std::vector<std::vector<int>>& liked,
                             const std::vector<int>& agents, const std::vector<char>& live_item) {
  std::vector<int> items;
  for (int i : agents) {
    for (int j : liked[i]) {
      if (j < static_cast<int>(live_item.size()) && live_item[j]) items.push_back(j);
    }
  }
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

std::vector<char> item_mask(const std::vector<int>& live_items) {
  int max_item = -1;
  for (int j : live_items) max_item = std::max(max_item, j);
  std::vector<char> mask(max_item + 1, 0);
  for (int j : live_items) mask[j] = 1;
  return mask;
}

}  // namespace

BottleneckResult bottleneck(const std::vector<std::vector<int>>& liked,
                            const std::vector<int>& live_agents,
                            const std::vector<int>& live_items) {
  if (live_agents.empty()) throw Error(ErrorCode::EmptyMarket, "no live agents");
  const std::vector<char> live_item = item_mask(live_items);
  for (int i : live_agents) {
    bool any = false;
    for (int j : liked[i]) any |= j < static_cast<int>(live_item.size()) && live_item[j];
    if (!any) throw Error(ErrorCode::EmptyMarket, "live agent has no liked live item", i);
  }

  const auto grid =
      candidate_grid(static_cast<int>(live_items.size()), static_cast<int>(live_agents.size()));
  const auto feasible_at = [&](std::size_t idx) {
    return feasible_rate(liked, live_agents, live_items,
                         Rational(grid[idx].first, grid[idx].second));
  };
  // v is the largest feasible grid value; the smallest grid value 1/|agents|
  // is always feasible because every live agent likes at least one live item.
  std::size_t lo = 0;
  std::size_t hi = grid.size() - 1;
  if (!feasible_at(lo)) {
    throw Error(ErrorCode::EmptyMarket, "bottleneck grid floor infeasible");
  }
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (feasible_at(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }

  BottleneckResult result;
  result.value = Rational(grid[lo].first, grid[lo].second);
  std::vector<Rational> rates(live_agents.size(), result.value);
  MaxFlowResult at_value = route_rates(liked, live_agents, live_items, rates);
  result.agents = at_value.tight_agents;
  std::sort(result.agents.begin(), result.agents.end());
  result.items = liked_union(liked, result.agents, live_item);
  return result;
}

BottleneckResult bottleneck_bruteforce(const std::vector<std::vector<int>>& liked,
                                       const std::vector<int>& live_agents,
                                       const std::vector<int>& live_items) {
  if (live_agents.empty()) throw Error(ErrorCode::EmptyMarket, "no live agents");
  const int k = static_cast<int>(live_agents.size());
  if (k > 16) throw Error(ErrorCode::TooLarge, "brute-force bottleneck limited to 16 agents");
  const std::vector<char> live_item = item_mask(live_items);

  // Per-agent liked live items as bitmasks over positions in live_items.
  std::vector<int> item_pos(live_item.size(), -1);
  for (std::size_t p = 0; p < live_items.size(); ++p) item_pos[live_items[p]] = static_cast<int>(p);
  std::vector<std::vector<std::uint64_t>> bits(k);
  const std::size_t blocks = live_items.size() / 64 + 1;
  for (int a = 0; a < k; ++a) {
    bits[a].assign(blocks, 0);
    bool any = false;
    for (int j : liked[live_agents[a]]) {
      if (j < static_cast<int>(live_item.size()) && live_item[j]) {
        const int p = item_pos[j];
        bits[a][p / 64] |= std::uint64_t{1} << (p % 64);
        any = true;
      }
    }
    if (!any) throw Error(ErrorCode::EmptyMarket, "live agent has no liked live item",
                          live_agents[a]);
  }

  long long best_num = -1;
  long long best_den = 1;
  std::vector<std::uint64_t> scratch(blocks);
  std::uint64_t winners = 0;  // union of all minimizing subsets
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::fill(scratch.begin(), scratch.end(), 0);
    int size = 0;
    for (int a = 0; a < k; ++a) {
      if (mask >> a & 1) {
        ++size;
        for (std::size_t b = 0; b < blocks; ++b) scratch[b] |= bits[a][b];
      }
    }
    long long covered = 0;
    for (std::uint64_t block : scratch) covered += __builtin_popcountll(block);
    if (best_num < 0 || covered * best_den < best_num * size) {
      best_num = covered;
      best_den = size;
      winners = mask;
    } else if (covered * best_den == best_num * size) {
      winners |= mask;
    }
  }

  // Lattice property: the union of minimizers minimizes too. Check it.
  {
    std::fill(scratch.begin(), scratch.end(), 0);
    int size = 0;
    for (int a = 0; a < k; ++a) {
      if (winners >> a & 1) {
        ++size;
        for (std::size_t b = 0; b < blocks; ++b) scratch[b] |= bits[a][b];
      }
    }
    long long covered = 0;
    for (std::uint64_t block : scratch) covered += __builtin_popcountll(block);
    if (covered * best_den != best_num * size) {
      throw Error(ErrorCode::CertificateInvalid, "union of minimizers is not a minimizer");
    }
  }

  BottleneckResult result;
  result.value = Rational(best_num, best_den);
  for (int a = 0; a < k; ++a) {
    if (winners >> a & 1) result.agents.push_back(live_agents[a]);
  }
  std::sort(result.agents.begin(), result.agents.end());
  result.items = liked_union(liked, result.agents, live_item);
  return result;
}

}  // namespace pseudomarket
