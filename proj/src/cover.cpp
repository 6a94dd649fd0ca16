#include "hypercore/cover.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypercore/core.hpp"

namespace hypercore {

namespace {

// nodes needed before edge i counts as covered
int cover_threshold(const Hypergraph& h, int i, const Fraction& t_c) {
  return static_cast<int>(ceil_mul(t_c, h.original_size(i)));
}

}  // namespace

long long covered_count(const Hypergraph& h, const std::vector<int>& nodes, Fraction t_c) {
  if (t_c.is_sentinel()) throw std::invalid_argument("t_c must be a value in [0, 1]");
  std::vector<char> chosen(h.num_nodes(), 0);
  for (int v : nodes) chosen.at(v) = 1;
  long long covered = 0;
  for (int i = 0; i < h.num_edges(); ++i) {
    int inside = 0;
    for (int v : h.edge(i)) inside += chosen[v];
    if (inside >= cover_threshold(h, i, t_c)) covered++;
  }
  return covered;
}

std::string cover_method_name(CoverMethod m) {
  switch (m) {
    case CoverMethod::hypercoreness: return "hypercoreness";
    case CoverMethod::degree: return "degree";
    case CoverMethod::greedy: return "greedy";
  }
  return "unknown";
}

std::vector<int> cover_select(const Hypergraph& h, int k_c, Fraction t_c, CoverMethod method,
                              std::vector<long long>* step_covered) {
  if (t_c.is_sentinel() || t_c.num() == 0)
    throw std::invalid_argument("t_c must be a value in (0, 1]");
  if (k_c < 1 || k_c > h.num_nodes())
    throw std::invalid_argument("k_c must be between 1 and the node count");
  if (step_covered) step_covered->clear();

  if (method != CoverMethod::greedy) {
    std::vector<int> order(h.num_nodes());
    for (int v = 0; v < h.num_nodes(); ++v) order[v] = v;
    if (method == CoverMethod::hypercoreness) {
      std::vector<int> coreness = t_hypercoreness(h, t_c).coreness;
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (coreness[a] != coreness[b]) return coreness[a] > coreness[b];
        if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
        return a < b;
      });
    } else {
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
        return a < b;
      });
    }
    order.resize(k_c);
    return order;
  }

  // greedy: gain[v] counts uncovered edges that v alone would push over
  // their threshold; transitions at count == threshold-1 and == threshold
  // keep the gains exact without rescanning
  std::vector<int> count(h.num_edges(), 0);
  std::vector<int> need(h.num_edges());
  std::vector<long long> gain(h.num_nodes(), 0);
  std::vector<char> chosen(h.num_nodes(), 0);
  for (int i = 0; i < h.num_edges(); ++i) {
    need[i] = cover_threshold(h, i, t_c);
    if (need[i] == 1)
      for (int v : h.edge(i)) gain[v]++;
  }

  std::vector<int> picked;
  picked.reserve(k_c);
  long long covered = 0;
  auto pick = [&](int v) {
    chosen[v] = 1;
    picked.push_back(v);
    for (int i : h.incident_edges(v)) {
      count[i]++;
      if (count[i] == need[i]) {
        covered++;
        // covered now: members no longer gain from this edge
        for (int u : h.edge(i))
          if (!chosen[u]) gain[u]--;
      } else if (count[i] == need[i] - 1) {
        // one short: every remaining member would complete it
        for (int u : h.edge(i))
          if (!chosen[u]) gain[u]++;
      }
    }
    if (step_covered) step_covered->push_back(covered);
  };

  int seed = 0;
  for (int v = 1; v < h.num_nodes(); ++v)
    if (h.degree(v) > h.degree(seed)) seed = v;
  pick(seed);
  while (static_cast<int>(picked.size()) < k_c) {
    int best = -1;
    for (int v = 0; v < h.num_nodes(); ++v) {
      if (chosen[v]) continue;
      if (best == -1 || gain[v] > gain[best] ||
          (gain[v] == gain[best] &&
           (h.degree(v) > h.degree(best) || (h.degree(v) == h.degree(best) && v < best))))
        best = v;
    }
    pick(best);
  }
  return picked;
}

}  // namespace hypercore
