#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypercore/core.hpp"
#include "hypercore/fraction.hpp"
#include "hypercore/hypergraph.hpp"

namespace hypercore {

enum class CollapseMethod { hyperckc, hycom, hycom_plus };

std::string collapse_method_name(CollapseMethod m);

// Endangered edges sit exactly at their survival threshold, so they keep the
// same member set until the round that kills them; membership snapshots taken
// at registration stay valid for pair removal later.
struct EndangeredMap {
  // key packs an unordered node pair (min << 32 | max); values are sorted
  // lists of endangered edges containing both nodes
  std::unordered_map<std::uint64_t, std::vector<int>> pairs;
  std::vector<char> is_endangered;         // per edge
  std::vector<std::vector<int>> members;   // alive members at registration

  static std::uint64_t pair_key(int u, int v);
  bool operator==(const EndangeredMap& other) const { return pairs == other.pairs; }
};

struct CollapseState {
  const Hypergraph* h = nullptr;
  int k = 1;
  Fraction t;
  std::vector<int> thresholds;  // max(ceil(t * original size), 2), fixed at setup
  PeelState st;                 // current core
  EndangeredMap endangered;
};

// Peels the initial (k,t)-hypercore and indexes its endangered edges.
CollapseState make_collapse_state(const Hypergraph& h, int k, Fraction t);

EndangeredMap rebuild_endangered(const Hypergraph& h, const std::vector<int>& thresholds,
                                 const PeelState& st);

// Applies one removal cascade's journal to the map: endangered edges that
// died drop out, surviving edges that shrank onto their threshold come in.
void update_endangered(const Hypergraph& h, const std::vector<int>& thresholds,
                       const PeelState& st, const PeelJournal& journal, EndangeredMap& map);

// Guaranteed-follower count per node: u follows v when removing v kills more
// of u's edges than u's slack above k. Nodes with any follower form the
// candidate set.
std::vector<long long> follower_counts(const CollapseState& state);

// Trials up to n_c candidates (all when -1) by journaled removal + rollback,
// sorted by follower count (if use_followers), degree, then id; candidates
// absent from the best trial core so far are pruned unevaluated. Returns -1
// when no node has a follower.
int best_collapser(CollapseState& state, int n_c, bool use_followers);

struct CollapseRound {
  int round = 0;
  int collapser = -1;
  long long reduction = 0;  // followers removed on top of the collapser
  double ms = 0.0;
};

struct CollapseResult {
  CollapseMethod method = CollapseMethod::hycom_plus;
  int k = 1;
  Fraction t;
  std::vector<CollapseRound> rounds;
  long long initial_core_size = 0;
  long long final_core_size = 0;
  long long total_reduction = 0;
  double total_ms = 0.0;
  bool truncated = false;  // the core emptied before b rounds
};

// Removes b nodes round by round, each chosen to shrink the (k,t)-hypercore
// most among the tried candidates; falls back to the max-degree core node
// when no candidate is available.
CollapseResult collapse(const Hypergraph& h, int k, Fraction t, int b, CollapseMethod method,
                        int n_c = 1);

}  // namespace hypercore
