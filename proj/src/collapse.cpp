#include "hypercore/collapse.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace hypercore {

std::string collapse_method_name(CollapseMethod m) {
  switch (m) {
    case CollapseMethod::hyperckc: return "hyperckc";
    case CollapseMethod::hycom: return "hycom";
    case CollapseMethod::hycom_plus: return "hycom_plus";
  }
  return "unknown";
}

std::uint64_t EndangeredMap::pair_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

namespace {

void register_edge(const Hypergraph& h, const PeelState& st, int i, EndangeredMap& map) {
  std::vector<int> alive;
  for (int v : h.edge(i))
    if (st.node_alive[v]) alive.push_back(v);
  for (std::size_t a = 0; a < alive.size(); ++a)
    for (std::size_t b = a + 1; b < alive.size(); ++b) {
      std::vector<int>& list = map.pairs[EndangeredMap::pair_key(alive[a], alive[b])];
      list.insert(std::lower_bound(list.begin(), list.end(), i), i);
    }
  map.is_endangered[i] = 1;
  map.members[i] = std::move(alive);
}

void unregister_edge(int i, EndangeredMap& map) {
  const std::vector<int>& alive = map.members[i];
  for (std::size_t a = 0; a < alive.size(); ++a)
    for (std::size_t b = a + 1; b < alive.size(); ++b) {
      std::uint64_t key = EndangeredMap::pair_key(alive[a], alive[b]);
      auto it = map.pairs.find(key);
      std::vector<int>& list = it->second;
      list.erase(std::lower_bound(list.begin(), list.end(), i));
      if (list.empty()) map.pairs.erase(it);
    }
  map.is_endangered[i] = 0;
  map.members[i].clear();
}

}  // namespace

EndangeredMap rebuild_endangered(const Hypergraph& h, const std::vector<int>& thresholds,
                                 const PeelState& st) {
  EndangeredMap map;
  map.is_endangered.assign(h.num_edges(), 0);
  map.members.resize(h.num_edges());
  for (int i = 0; i < h.num_edges(); ++i)
    if (st.edge_alive[i] && st.edge_size[i] == thresholds[i]) register_edge(h, st, i, map);
  return map;
}

void update_endangered(const Hypergraph& h, const std::vector<int>& thresholds,
                       const PeelState& st, const PeelJournal& journal, EndangeredMap& map) {
  for (int i : journal.killed_edges)
    if (map.is_endangered[i]) unregister_edge(i, map);

  std::vector<int> shrunk = journal.size_decs;
  std::sort(shrunk.begin(), shrunk.end());
  shrunk.erase(std::unique(shrunk.begin(), shrunk.end()), shrunk.end());
  for (int i : shrunk)
    if (st.edge_alive[i] && st.edge_size[i] == thresholds[i] && !map.is_endangered[i])
      register_edge(h, st, i, map);
}

CollapseState make_collapse_state(const Hypergraph& h, int k, Fraction t) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  CollapseState state;
  state.h = &h;
  state.k = k;
  state.t = t;
  state.thresholds = kt_thresholds(h, t);
  state.st = full_state(h);
  peel_all(h, k, state.thresholds, state.st);
  state.endangered = rebuild_endangered(h, state.thresholds, state.st);
  return state;
}

std::vector<long long> follower_counts(const CollapseState& state) {
  std::vector<long long> followers(state.h->num_nodes(), 0);
  for (const auto& [key, list] : state.endangered.pairs) {
    int u = static_cast<int>(key >> 32);
    int v = static_cast<int>(key & 0xffffffffULL);
    long long shared = static_cast<long long>(list.size());
    if (shared > state.st.degree[u] - state.k) followers[v]++;  // u follows v
    if (shared > state.st.degree[v] - state.k) followers[u]++;  // v follows u
  }
  return followers;
}

int best_collapser(CollapseState& state, int n_c, bool use_followers) {
  const Hypergraph& h = *state.h;
  std::vector<long long> followers = follower_counts(state);
  std::vector<int> candidates;
  for (int v = 0; v < h.num_nodes(); ++v)
    if (followers[v] > 0) candidates.push_back(v);
  if (candidates.empty()) return -1;

  std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    if (use_followers && followers[a] != followers[b]) return followers[a] > followers[b];
    if (state.st.degree[a] != state.st.degree[b]) return state.st.degree[a] > state.st.degree[b];
    return a < b;
  });

  std::vector<char> pruned(h.num_nodes(), 0);
  int best = -1;
  long long best_size = state.st.nodes_alive + 1;
  int tried = 0;
  for (int c : candidates) {
    if (pruned[c]) continue;
    PeelJournal journal;
    peel_forced(h, state.k, state.thresholds, state.st, {c}, &journal);
    if (state.st.nodes_alive < best_size) {
      best = c;
      best_size = state.st.nodes_alive;
      // anything the best removal already wipes out cannot beat it
      for (int dead : journal.killed_nodes) pruned[dead] = 1;
    }
    rollback(state.st, journal);
    if (++tried == n_c) break;
  }
  return best;
}

CollapseResult collapse(const Hypergraph& h, int k, Fraction t, int b, CollapseMethod method,
                        int n_c) {
  if (b < 1) throw std::invalid_argument("b must be >= 1");
  if (method == CollapseMethod::hyperckc)
    n_c = -1;
  else if (n_c != -1 && n_c < 1)
    throw std::invalid_argument("n_c must be >= 1 or -1 for all");

  CollapseState state = make_collapse_state(h, k, t);
  if (state.st.nodes_alive == 0) throw std::invalid_argument("the initial core is empty");

  CollapseResult res;
  res.method = method;
  res.k = k;
  res.t = t;
  res.initial_core_size = state.st.nodes_alive;

  bool incremental = method == CollapseMethod::hycom_plus;
  for (int round = 0; round < b; ++round) {
    if (state.st.nodes_alive == 0) {
      res.truncated = true;
      break;
    }
    auto start = std::chrono::steady_clock::now();
    if (!incremental && round > 0)
      state.endangered = rebuild_endangered(h, state.thresholds, state.st);

    int collapser = best_collapser(state, n_c, incremental);
    if (collapser == -1) {
      // no guaranteed follower anywhere: take the busiest core node
      for (int v = 0; v < h.num_nodes(); ++v) {
        if (!state.st.node_alive[v]) continue;
        if (collapser == -1 || state.st.degree[v] > state.st.degree[collapser]) collapser = v;
      }
    }

    long long before = state.st.nodes_alive;
    PeelJournal journal;
    peel_forced(h, k, state.thresholds, state.st, {collapser}, &journal);
    if (incremental) update_endangered(h, state.thresholds, state.st, journal, state.endangered);

    auto stop = std::chrono::steady_clock::now();
    CollapseRound r;
    r.round = round;
    r.collapser = collapser;
    r.reduction = before - state.st.nodes_alive - 1;
    r.ms = std::chrono::duration<double, std::milli>(stop - start).count();
    res.total_reduction += r.reduction;
    res.total_ms += r.ms;
    res.rounds.push_back(r);
  }
  res.final_core_size = state.st.nodes_alive;
  return res;
}

}  // namespace hypercore
