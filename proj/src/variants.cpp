#include "hypercore/variants.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>

namespace hypercore {

std::string variant_name(CoreVariant v) {
  switch (v) {
    case CoreVariant::kl: return "kl";
    case CoreVariant::neighbor: return "neighbor";
    case CoreVariant::neighbor_degree: return "neighbor_degree";
  }
  return "unknown";
}

namespace {

void collect_alive(const PeelState& st, std::vector<int>& nodes, std::vector<int>& edges) {
  for (int v = 0; v < static_cast<int>(st.node_alive.size()); ++v)
    if (st.node_alive[v]) nodes.push_back(v);
  for (int i = 0; i < static_cast<int>(st.edge_alive.size()); ++i)
    if (st.edge_alive[i]) edges.push_back(i);
}

}  // namespace

VariantCoreResult kl_hypercore(const Hypergraph& h, int k, int l) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (l < 2) throw std::invalid_argument("l must be >= 2");
  VariantCoreResult res;
  res.variant = CoreVariant::kl;
  res.k = k;
  res.l = l;
  std::vector<int> thr(h.num_edges(), l);
  PeelState st = full_state(h);
  peel_all(h, k, thr, st);
  collect_alive(st, res.nodes, res.edges);
  return res;
}

std::vector<int> l_hypercoreness(const Hypergraph& h, int l) {
  if (l < 2) throw std::invalid_argument("l must be >= 2");
  std::vector<int> thr(h.num_edges(), l);
  return coreness_sweep(h, thr).coreness;
}

BipartiteCoreResult alpha_beta_core(const BipartiteGraph& b, int alpha, int beta) {
  if (alpha < 1 || beta < 1) throw std::invalid_argument("alpha and beta must be >= 1");
  BipartiteCoreResult res;
  res.alpha = alpha;
  res.beta = beta;
  std::vector<int> ldeg(b.num_left), rdeg(b.num_right);
  std::vector<char> lalive(b.num_left, 1), ralive(b.num_right, 1);
  for (int v = 0; v < b.num_left; ++v) ldeg[v] = static_cast<int>(b.left_adj[v].size());
  for (int i = 0; i < b.num_right; ++i) rdeg[i] = static_cast<int>(b.right_adj[i].size());

  // queue entries: (side, id), side 0 = left
  std::deque<std::pair<int, int>> queue;
  for (int v = 0; v < b.num_left; ++v)
    if (ldeg[v] < alpha) queue.emplace_back(0, v);
  for (int i = 0; i < b.num_right; ++i)
    if (rdeg[i] < beta) queue.emplace_back(1, i);
  while (!queue.empty()) {
    auto [side, x] = queue.front();
    queue.pop_front();
    if (side == 0) {
      if (!lalive[x]) continue;
      lalive[x] = 0;
      for (int i : b.left_adj[x]) {
        if (!ralive[i]) continue;
        if (--rdeg[i] == beta - 1) queue.emplace_back(1, i);
      }
    } else {
      if (!ralive[x]) continue;
      ralive[x] = 0;
      for (int v : b.right_adj[x]) {
        if (!lalive[v]) continue;
        if (--ldeg[v] == alpha - 1) queue.emplace_back(0, v);
      }
    }
  }
  for (int v = 0; v < b.num_left; ++v)
    if (lalive[v]) res.left.push_back(v);
  for (int i = 0; i < b.num_right; ++i)
    if (ralive[i]) res.right.push_back(i);
  return res;
}

namespace {

// State for complete-subhypergraph peels: an edge dies as soon as any member
// dies, so alive edges always consist solely of alive nodes.
struct CompleteState {
  std::vector<char> node_alive;
  std::vector<char> edge_alive;
  std::vector<int> degree;  // alive incident edges
  long long nodes_alive = 0;
};

CompleteState complete_full_state(const Hypergraph& h) {
  CompleteState st;
  st.node_alive.assign(h.num_nodes(), 1);
  st.edge_alive.assign(h.num_edges(), 1);
  st.degree.resize(h.num_nodes());
  for (int v = 0; v < h.num_nodes(); ++v) st.degree[v] = h.degree(v);
  st.nodes_alive = h.num_nodes();
  return st;
}

int neighbor_count(const Hypergraph& h, const CompleteState& st, int v, std::vector<int>& mark,
                   int stamp) {
  int count = 0;
  for (int i : h.incident_edges(v)) {
    if (!st.edge_alive[i]) continue;
    for (int u : h.edge(i)) {
      if (u == v || mark[u] == stamp) continue;
      mark[u] = stamp;
      count++;
    }
  }
  return count;
}

// Repeatedly re-checks dirtied nodes against the neighbor and degree floors;
// duplicate queue entries are tolerated, removal cascades through whole-edge
// deaths. Optionally records killed nodes for incremental coreness loops.
void complete_peel(const Hypergraph& h, int k, int d, CompleteState& st,
                   std::vector<int>* killed = nullptr) {
  std::deque<int> dirty;
  for (int v = 0; v < h.num_nodes(); ++v)
    if (st.node_alive[v]) dirty.push_back(v);
  std::vector<int> mark(h.num_nodes(), -1);
  int stamp = 0;
  while (!dirty.empty()) {
    int v = dirty.front();
    dirty.pop_front();
    if (!st.node_alive[v]) continue;
    if (st.degree[v] >= d) {
      ++stamp;
      if (neighbor_count(h, st, v, mark, stamp) >= k) continue;
    }
    st.node_alive[v] = 0;
    st.nodes_alive--;
    if (killed) killed->push_back(v);
    for (int i : h.incident_edges(v)) {
      if (!st.edge_alive[i]) continue;
      st.edge_alive[i] = 0;
      for (int u : h.edge(i)) {
        if (!st.node_alive[u]) continue;
        st.degree[u]--;
        dirty.push_back(u);
      }
    }
  }
}

VariantCoreResult complete_core(const Hypergraph& h, int k, int d, CoreVariant variant) {
  if (k < 1 || d < 1) throw std::invalid_argument("k and d must be >= 1");
  VariantCoreResult res;
  res.variant = variant;
  res.k = k;
  res.d = d;
  CompleteState st = complete_full_state(h);
  complete_peel(h, k, d, st);
  for (int v = 0; v < h.num_nodes(); ++v)
    if (st.node_alive[v]) res.nodes.push_back(v);
  for (int i = 0; i < h.num_edges(); ++i)
    if (st.edge_alive[i]) res.edges.push_back(i);
  return res;
}

// Coreness by tightening constraints level by level; each level peels onward
// from the previous core (containment makes restarting redundant).
std::vector<int> complete_coreness(const Hypergraph& h, bool degree_tracks_k) {
  std::vector<int> core(h.num_nodes(), 0);
  CompleteState st = complete_full_state(h);
  int k = 1;
  std::vector<int> killed;
  while (st.nodes_alive > 0) {
    killed.clear();
    complete_peel(h, k, degree_tracks_k ? k : 1, st, &killed);
    for (int v : killed) core[v] = k - 1;
    k++;
  }
  return core;
}

}  // namespace

VariantCoreResult neighbor_hypercore(const Hypergraph& h, int k) {
  return complete_core(h, k, 1, CoreVariant::neighbor);
}

VariantCoreResult nd_hypercore(const Hypergraph& h, int k, int d) {
  return complete_core(h, k, d, CoreVariant::neighbor_degree);
}

std::vector<int> neighbor_hypercoreness(const Hypergraph& h) {
  return complete_coreness(h, false);
}

std::vector<int> nd_hypercoreness(const Hypergraph& h) {
  return complete_coreness(h, true);
}

std::vector<int> pairwise_coreness(const WeightedGraph& g, bool weighted) {
  int n = g.num_nodes;
  std::vector<long long> deg(n, 0);
  for (int v = 0; v < n; ++v)
    for (auto [u, w] : g.adj[v]) deg[v] += weighted ? w : 1;

  using Entry = std::pair<long long, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (int v = 0; v < n; ++v) heap.emplace(deg[v], v);

  std::vector<char> alive(n, 1);
  std::vector<int> core(n, 0);
  long long cur = 0;
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (!alive[v] || d != deg[v]) continue;  // stale entry
    alive[v] = 0;
    cur = std::max(cur, d);
    core[v] = static_cast<int>(cur);
    for (auto [u, w] : g.adj[v]) {
      if (!alive[u]) continue;
      deg[u] -= weighted ? w : 1;
      heap.emplace(deg[u], u);
    }
  }
  return core;
}

}  // namespace hypercore
