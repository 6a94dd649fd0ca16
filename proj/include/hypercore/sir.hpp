#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercore/fraction.hpp"
#include "hypercore/hypergraph.hpp"

namespace hypercore {

struct SirParams {
  double beta = 0.05;   // transmission rate; factors clamp into [0, 1]
  double gamma = 1.0;   // recovery rate, must be in (0, 1]
  int runs = 1;
  std::uint64_t seed = 0;
};

// One synchronous susceptible-infected-recovered trajectory seeded at one
// node; returns the ever-infected count |R|. Each round multiplies every
// susceptible edge member's survival probability by 1 - 2*beta*|I_e|/|e|
// (|e| always the original edge size), then draws recoveries and infections.
// The draw stream is derived from (params.seed, seed_node, run_index), so
// runs are reproducible independently of scheduling.
int hyper_sir(const Hypergraph& h, int seed_node, const SirParams& params,
              std::uint64_t run_index = 0);

struct NamedCentrality {
  std::string name;
  std::vector<double> values;  // one per node
};

// The comparison set: t-hypercoreness per grid value, degree, per-l variant
// coreness (min-max normalized), neighbor and neighbor-degree coreness, and
// pairwise coreness on both clique expansions.
std::vector<NamedCentrality> standard_centralities(const Hypergraph& h,
                                                   const std::vector<Fraction>& t_grid);

struct InfluenceConfig {
  std::vector<double> betas = {0.05, 0.025, 0.01, 0.005, 0.0025};
  double gamma = 1.0;
  int runs = 1000;
  std::uint64_t seed = 0;
  double sample_frac = 0.1;  // fraction of nodes simulated as seeds
  int threads = 1;
};

struct InfluenceEntry {
  std::string centrality;
  double beta = 0.0;
  double pearson_r = 0.0;  // NaN when the centrality is constant on the sample
};

struct InfluenceReport {
  std::vector<int> sampled_nodes;           // ascending node ids
  std::vector<std::vector<double>> mean_r;  // [beta index][sample index]
  std::vector<InfluenceEntry> entries;      // one per (beta, centrality)
  int runs = 0;
};

// Monte-Carlo mean spread per sampled seed node and Pearson correlation of
// each centrality against it, per beta. Deterministic given the config seed.
InfluenceReport influence_experiment(const Hypergraph& h, const InfluenceConfig& cfg,
                                     const std::vector<NamedCentrality>& centralities);

}  // namespace hypercore
