#include "hypercore/core.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hypercore {

bool CoreResult::contains_node(int v) const {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

std::vector<int> induced_edge(const Hypergraph& h, const CoreResult& core, int edge_index) {
  std::vector<int> members;
  for (int v : h.edge(edge_index))
    if (core.contains_node(v)) members.push_back(v);
  return members;
}

std::vector<int> kt_thresholds(const Hypergraph& h, Fraction t) {
  if (t.is_sentinel()) throw std::invalid_argument("t must be a value in [0, 1]");
  std::vector<int> thr(h.num_edges());
  for (int i = 0; i < h.num_edges(); ++i)
    thr[i] = static_cast<int>(std::max<std::int64_t>(ceil_mul(t, h.original_size(i)), 2));
  return thr;
}

PeelState full_state(const Hypergraph& h) {
  PeelState st;
  st.node_alive.assign(h.num_nodes(), 1);
  st.edge_alive.assign(h.num_edges(), 1);
  st.edge_size.resize(h.num_edges());
  st.degree.resize(h.num_nodes());
  for (int i = 0; i < h.num_edges(); ++i) st.edge_size[i] = static_cast<int>(h.edge(i).size());
  for (int v = 0; v < h.num_nodes(); ++v) st.degree[v] = h.degree(v);
  st.nodes_alive = h.num_nodes();
  st.edges_alive = h.num_edges();
  return st;
}

namespace {

// Removes every queued node, shrinking its edges; an edge dropping below its
// threshold dies and pushes each member that falls to degree k-1 (the exact
// crossing point, so no node is queued twice). Callers must ensure no alive
// node outside the queue already sits below k.
void cascade(const Hypergraph& h, int k, const std::vector<int>& thr, PeelState& st,
             std::deque<int>& queue, PeelJournal* journal) {
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (!st.node_alive[v]) continue;
    st.node_alive[v] = 0;
    st.nodes_alive--;
    if (journal) journal->killed_nodes.push_back(v);
    for (int i : h.incident_edges(v)) {
      if (!st.edge_alive[i]) continue;
      st.edge_size[i]--;
      if (journal) journal->size_decs.push_back(i);
      if (st.edge_size[i] < thr[i]) {
        st.edge_alive[i] = 0;
        st.edges_alive--;
        if (journal) journal->killed_edges.push_back(i);
        for (int u : h.edge(i)) {
          if (!st.node_alive[u]) continue;
          st.degree[u]--;
          if (journal) journal->degree_decs.push_back(u);
          if (st.degree[u] == k - 1) queue.push_back(u);
        }
      }
    }
  }
}

}  // namespace

void peel_all(const Hypergraph& h, int k, const std::vector<int>& thr, PeelState& st) {
  std::deque<int> queue;
  // edges that never met their threshold (possible for absolute floors > |e|)
  for (int i = 0; i < h.num_edges(); ++i) {
    if (!st.edge_alive[i] || st.edge_size[i] >= thr[i]) continue;
    st.edge_alive[i] = 0;
    st.edges_alive--;
    for (int u : h.edge(i)) {
      if (st.node_alive[u]) st.degree[u]--;
    }
  }
  for (int v = 0; v < h.num_nodes(); ++v)
    if (st.node_alive[v] && st.degree[v] < k) queue.push_back(v);
  cascade(h, k, thr, st, queue, nullptr);
}

void peel_forced(const Hypergraph& h, int k, const std::vector<int>& thr, PeelState& st,
                 const std::vector<int>& forced, PeelJournal* journal) {
  std::deque<int> queue(forced.begin(), forced.end());
  cascade(h, k, thr, st, queue, journal);
}

void rollback(PeelState& st, const PeelJournal& journal) {
  for (int i : journal.size_decs) st.edge_size[i]++;
  for (int v : journal.degree_decs) st.degree[v]++;
  for (int i : journal.killed_edges) st.edge_alive[i] = 1;
  for (int v : journal.killed_nodes) st.node_alive[v] = 1;
  st.edges_alive += static_cast<long long>(journal.killed_edges.size());
  st.nodes_alive += static_cast<long long>(journal.killed_nodes.size());
}

namespace {

CoreResult collect(const Hypergraph& h, int k, Fraction t, const PeelState& st) {
  CoreResult res;
  res.k = k;
  res.t = t;
  for (int v = 0; v < h.num_nodes(); ++v)
    if (st.node_alive[v]) res.nodes.push_back(v);
  for (int i = 0; i < h.num_edges(); ++i)
    if (st.edge_alive[i]) res.edges.push_back(i);
  return res;
}

}  // namespace

CoreResult kt_hypercore(const Hypergraph& h, int k, Fraction t) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  auto thr = kt_thresholds(h, t);
  PeelState st = full_state(h);
  peel_all(h, k, thr, st);
  return collect(h, k, t, st);
}

CorenessResult coreness_sweep(const Hypergraph& h, const std::vector<int>& thr,
                              const CoreSweepSink& sink) {
  PeelState st = full_state(h);
  // edges that never meet their threshold (possible for fixed floors > |e|)
  for (int i = 0; i < h.num_edges(); ++i) {
    if (st.edge_size[i] >= thr[i]) continue;
    st.edge_alive[i] = 0;
    st.edges_alive--;
    for (int u : h.edge(i)) st.degree[u]--;
  }

  CorenessResult res;
  res.coreness.assign(h.num_nodes(), 0);

  int max_degree = 0;
  for (int v = 0; v < h.num_nodes(); ++v) max_degree = std::max(max_degree, st.degree[v]);
  // alive-degree histogram; the minimum alive degree only grows between
  // levels, so one upward-moving cursor finds each next level
  std::vector<long long> count_by_degree(max_degree + 2, 0);
  for (int v = 0; v < h.num_nodes(); ++v) count_by_degree[st.degree[v]]++;

  auto drop_degree = [&](int v) {
    count_by_degree[st.degree[v]]--;
    st.degree[v]--;
    count_by_degree[st.degree[v]]++;
  };

  int level = 0;
  int prev_level = 0;
  while (st.nodes_alive > 0) {
    while (level <= max_degree && count_by_degree[level] == 0) level++;
    // current survivors form the core for prev_level < k <= level
    if (sink && level > prev_level) sink(prev_level + 1, level, st.node_alive, st.edge_alive);
    res.c_star = level;
    res.top_core_nodes = st.nodes_alive;
    res.top_core_edges = st.edges_alive;
    prev_level = level;

    std::deque<int> queue;
    for (int v = 0; v < h.num_nodes(); ++v)
      if (st.node_alive[v] && st.degree[v] == level) queue.push_back(v);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (!st.node_alive[v]) continue;
      st.node_alive[v] = 0;
      st.nodes_alive--;
      count_by_degree[st.degree[v]]--;
      res.coreness[v] = level;
      for (int i : h.incident_edges(v)) {
        if (!st.edge_alive[i]) continue;
        st.edge_size[i]--;
        if (st.edge_size[i] < thr[i]) {
          st.edge_alive[i] = 0;
          st.edges_alive--;
          for (int u : h.edge(i)) {
            if (!st.node_alive[u]) continue;
            drop_degree(u);
            if (st.degree[u] == level) queue.push_back(u);
          }
        }
      }
    }
  }
  return res;
}

CorenessResult t_hypercoreness(const Hypergraph& h, Fraction t, const CoreSweepSink& sink) {
  return coreness_sweep(h, kt_thresholds(h, t), sink);
}

FractionResult k_fraction(const Hypergraph& h, int k, const FractionSweepSink& sink) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  FractionResult res;
  res.fraction.assign(h.num_nodes(), Fraction::sentinel());

  // start from the loosest constraint (t = 0, i.e. every edge needs 2 nodes)
  std::vector<int> thr(h.num_edges(), 2);
  PeelState st = full_state(h);
  peel_all(h, k, thr, st);
  if (st.nodes_alive == 0) return res;

  // size fractions s/D only take O(max_size^2) distinct values, so one bucket
  // of edges per value beats a priority queue; entries go stale once the edge
  // shrank or died after being pushed, and the smallest alive value never
  // decreases between levels, so a single upward cursor visits each bucket once
  int max_d = 2;
  for (int i = 0; i < h.num_edges(); ++i) max_d = std::max(max_d, h.original_size(i));
  std::vector<Fraction> levels;
  for (int d = 2; d <= max_d; ++d)
    for (int s = 2; s <= d; ++s) levels.emplace_back(s, d);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<std::vector<int>> level_of(max_d + 1);
  for (int d = 2; d <= max_d; ++d) {
    level_of[d].assign(d + 1, -1);
    for (int s = 2; s <= d; ++s)
      level_of[d][s] = static_cast<int>(
          std::lower_bound(levels.begin(), levels.end(), Fraction(s, d)) - levels.begin());
  }
  auto edge_level = [&](int i) { return level_of[h.original_size(i)][st.edge_size[i]]; };

  const int n_levels = static_cast<int>(levels.size());
  std::vector<std::vector<int>> bucket(n_levels);
  for (int i = 0; i < h.num_edges(); ++i)
    if (st.edge_alive[i]) bucket[edge_level(i)].push_back(i);

  const Fraction one(1, 1);
  int lvl = 0;
  while (st.nodes_alive > 0) {
    // smallest surviving size fraction; survivors form the core for every t
    // up to and including it
    while (true) {
      if (lvl >= n_levels) throw std::logic_error("fraction sweep: no edges left for alive nodes");
      auto& b = bucket[lvl];
      while (!b.empty() && (!st.edge_alive[b.back()] || edge_level(b.back()) != lvl)) b.pop_back();
      if (!b.empty()) break;
      lvl++;
    }
    Fraction mu = levels[lvl];
    if (sink) sink(mu, st.node_alive, st.edge_alive);
    res.f_star = mu;
    if (mu == one) {
      for (int v = 0; v < h.num_nodes(); ++v)
        if (st.node_alive[v]) res.fraction[v] = one;
      return res;
    }

    // crossing above mu: edges exactly at the minimum go first, and the
    // cascade afterwards removes any edge at or below mu (strict survival)
    std::vector<int> doomed;
    for (int i : bucket[lvl])
      if (st.edge_alive[i] && edge_level(i) == lvl) doomed.push_back(i);
    bucket[lvl].clear();

    std::deque<int> queue;
    auto kill_edge = [&](int i) {
      st.edge_alive[i] = 0;
      st.edges_alive--;
      for (int u : h.edge(i)) {
        if (!st.node_alive[u]) continue;
        st.degree[u]--;
        if (st.degree[u] == k - 1) queue.push_back(u);
      }
    };
    for (int i : doomed) kill_edge(i);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (!st.node_alive[v]) continue;
      st.node_alive[v] = 0;
      st.nodes_alive--;
      res.fraction[v] = mu;
      for (int i : h.incident_edges(v)) {
        if (!st.edge_alive[i]) continue;
        st.edge_size[i]--;
        if (st.edge_size[i] < 2 || edge_level(i) <= lvl) {
          kill_edge(i);
        } else {
          bucket[edge_level(i)].push_back(i);
        }
      }
    }
  }
  return res;
}

}  // namespace hypercore
