#pragma once

#include <string>
#include <vector>

#include "hypercore/core.hpp"
#include "hypercore/hypergraph.hpp"

namespace hypercore {

enum class CoreVariant { kl, neighbor, neighbor_degree };

std::string variant_name(CoreVariant v);

struct VariantCoreResult {
  CoreVariant variant = CoreVariant::kl;
  int k = 1;
  int l = 2;  // minimum surviving edge size (kl variant)
  int d = 1;  // minimum degree (neighbor_degree variant)
  std::vector<int> nodes;
  std::vector<int> edges;

  bool empty() const { return nodes.empty(); }
};

// Maximal subhypergraph where every node keeps >= k surviving edges and every
// surviving edge keeps >= l of its nodes (absolute floor, not a fraction).
VariantCoreResult kl_hypercore(const Hypergraph& h, int k, int l);

// Per-node max k with the node inside the (k; l)-hypercore.
std::vector<int> l_hypercoreness(const Hypergraph& h, int l);

struct BipartiteCoreResult {
  int alpha = 1;
  int beta = 1;
  std::vector<int> left;
  std::vector<int> right;
};

// Maximal bipartite subgraph with left degrees >= alpha, right degrees >= beta.
BipartiteCoreResult alpha_beta_core(const BipartiteGraph& b, int alpha, int beta);

// Maximal complete subhypergraph (edges survive only while every member
// does) where each node keeps >= k distinct neighbors.
VariantCoreResult neighbor_hypercore(const Hypergraph& h, int k);

// As above with the additional constraint degree >= d.
VariantCoreResult nd_hypercore(const Hypergraph& h, int k, int d);

// Per-node max k with the node inside the neighbor k-hypercore.
std::vector<int> neighbor_hypercoreness(const Hypergraph& h);

// Per-node max k with the node inside the (k, k) neighbor-degree hypercore.
std::vector<int> nd_hypercoreness(const Hypergraph& h);

// Classic coreness on a pairwise projection; in weighted mode a node's degree
// is the sum of its incident edge weights.
std::vector<int> pairwise_coreness(const WeightedGraph& g, bool weighted);

}  // namespace hypercore
