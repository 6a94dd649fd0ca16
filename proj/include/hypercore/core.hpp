#pragma once

#include <functional>
#include <vector>

#include "hypercore/fraction.hpp"
#include "hypercore/hypergraph.hpp"

namespace hypercore {

// Maximal subhypergraph in which every node keeps >= k surviving edges and
// every surviving edge i keeps >= max(ceil(t * original_size(i)), 2) of its
// nodes. Node and edge index lists are sorted ascending.
struct CoreResult {
  int k = 1;
  Fraction t;
  std::vector<int> nodes;
  std::vector<int> edges;

  bool empty() const { return nodes.empty(); }
  bool contains_node(int v) const;
};

// e_i restricted to the core's surviving nodes
std::vector<int> induced_edge(const Hypergraph& h, const CoreResult& core, int edge_index);

CoreResult kt_hypercore(const Hypergraph& h, int k, Fraction t);

// --- shared peeling state, also driven directly by the collapse module ---

struct PeelState {
  std::vector<char> node_alive;
  std::vector<char> edge_alive;
  std::vector<int> edge_size;  // current member count of each alive edge
  std::vector<int> degree;     // current alive-edge count of each node
  long long nodes_alive = 0;
  long long edges_alive = 0;
};

// undo log for trial removals; entries are unit changes replayed in reverse
struct PeelJournal {
  std::vector<int> killed_nodes;
  std::vector<int> killed_edges;
  std::vector<int> size_decs;    // edge index per unit size decrement
  std::vector<int> degree_decs;  // node index per unit degree decrement
};

std::vector<int> kt_thresholds(const Hypergraph& h, Fraction t);
PeelState full_state(const Hypergraph& h);

// prunes edges below their threshold, then removes every node of degree < k
// and cascades until the remaining subhypergraph is stable
void peel_all(const Hypergraph& h, int k, const std::vector<int>& thresholds, PeelState& st);

// force-removes `forced` from an already-stable state and cascades; when a
// journal is given every change is recorded so rollback() can restore st
void peel_forced(const Hypergraph& h, int k, const std::vector<int>& thresholds, PeelState& st,
                 const std::vector<int>& forced, PeelJournal* journal = nullptr);

void rollback(PeelState& st, const PeelJournal& journal);

// --- full decompositions ---

struct CorenessResult {
  std::vector<int> coreness;  // max k with the node inside the (k,t)-hypercore
  int c_star = 0;
  // size of the top nonempty core (k = c_star) at this t
  long long top_core_nodes = 0;
  long long top_core_edges = 0;
};

// Observer for the one-pass sweep: the surviving subhypergraph passed in
// equals the (k,t)-hypercore for every k in [k_lo, k_hi].
using CoreSweepSink = std::function<void(int k_lo, int k_hi, const std::vector<char>& node_alive,
                                         const std::vector<char>& edge_alive)>;

// One min-degree sweep under arbitrary per-edge size thresholds; backs both
// t-hypercoreness and the fixed-floor variant coreness.
CorenessResult coreness_sweep(const Hypergraph& h, const std::vector<int>& thresholds,
                              const CoreSweepSink& sink = {});

CorenessResult t_hypercoreness(const Hypergraph& h, Fraction t, const CoreSweepSink& sink = {});

struct FractionResult {
  std::vector<Fraction> fraction;  // sentinel -1 for nodes outside the t = 0 core
  Fraction f_star = Fraction::sentinel();
};

// Observer for the fraction sweep: the surviving subhypergraph equals the
// (k,t)-hypercore for every t in (t_prev, t_hi]; the first call covers [0, t_hi].
using FractionSweepSink = std::function<void(
    Fraction t_hi, const std::vector<char>& node_alive, const std::vector<char>& edge_alive)>;

FractionResult k_fraction(const Hypergraph& h, int k, const FractionSweepSink& sink = {});

}  // namespace hypercore
