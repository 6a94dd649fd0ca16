#include <algorithm>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "hypercore/collapse.hpp"
#include "hypercore/core.hpp"
#include "hypercore/fraction.hpp"
#include "hypercore/hypergraph.hpp"
#include "hypercore/rng.hpp"
#include "oracles.hpp"

using hypercore::CollapseMethod;
using hypercore::CollapseState;
using hypercore::EndangeredMap;
using hypercore::Fraction;
using hypercore::Hypergraph;
using hypercore::PeelJournal;
using hypercore::Rng;
using testutil::data_path;

namespace {

const CollapseMethod kMethods[] = {CollapseMethod::hyperckc, CollapseMethod::hycom,
                                   CollapseMethod::hycom_plus};

// recomputes guaranteed followers from scratch: u follows v when their shared
// endangered edges outnumber u's slack above k
std::vector<long long> brute_followers(const CollapseState& state) {
  const Hypergraph& h = *state.h;
  std::vector<long long> counts(h.num_nodes(), 0);
  for (int v = 0; v < h.num_nodes(); ++v) {
    if (!state.st.node_alive[v]) continue;
    for (int u = 0; u < h.num_nodes(); ++u) {
      if (u == v || !state.st.node_alive[u]) continue;
      long long shared = 0;
      for (int i = 0; i < h.num_edges(); ++i) {
        if (!state.st.edge_alive[i] || state.st.edge_size[i] != state.thresholds[i]) continue;
        bool has_u = false, has_v = false;
        for (int w : h.edge(i)) {
          if (!state.st.node_alive[w]) continue;
          if (w == u) has_u = true;
          if (w == v) has_v = true;
        }
        if (has_u && has_v) shared++;
      }
      if (shared > state.st.degree[u] - state.k) counts[v]++;
    }
  }
  return counts;
}

void check_maps_equal(const EndangeredMap& got, const EndangeredMap& want) {
  CHECK(got == want);
  CHECK(got.is_endangered == want.is_endangered);
  CHECK(got.members == want.members);
}

}  // namespace

TEST_CASE("shrinking the example core: follower round then plain removal round") {
  Hypergraph h = Hypergraph::load(data_path("example.txt"));
  for (auto method : kMethods) {
    auto res = collapse(h, 2, Fraction(0, 1), 2, method);
    CHECK(res.method == method);
    CHECK(res.k == 2);
    CHECK(res.initial_core_size == 6);
    CHECK(res.final_core_size == 3);
    CHECK(res.total_reduction == 1);
    CHECK_FALSE(res.truncated);
    REQUIRE(res.rounds.size() == 2);
    CHECK(res.rounds[0].round == 0);
    CHECK(h.label(res.rounds[0].collapser) == "5");
    CHECK(res.rounds[0].reduction == 1);
    CHECK(res.rounds[1].round == 1);
    CHECK(h.label(res.rounds[1].collapser) == "1");
    CHECK(res.rounds[1].reduction == 0);
    for (const auto& r : res.rounds) CHECK(r.ms >= 0.0);
    CHECK(res.total_ms >= 0.0);
  }
}

TEST_CASE("each round removes the collapser plus its cascade, never more") {
  Rng rng(1313);
  for (int trial = 0; trial < 25; ++trial) {
    Hypergraph h = oracle::random_hypergraph(rng, 10, 7);
    int k = 1 + static_cast<int>(rng.below(2));
    Fraction t = rng.bernoulli(0.5) ? Fraction(0, 1) : Fraction(1, 2);
    auto thr = kt_thresholds(h, t);
    CollapseState probe = make_collapse_state(h, k, t);
    if (probe.st.nodes_alive == 0) {
      CHECK_THROWS(collapse(h, k, t, 2, CollapseMethod::hycom));
      continue;
    }
    for (auto method : kMethods) {
      auto res = collapse(h, k, t, 3, method, 2);
      CHECK(res.rounds.size() <= 3);
      long long removed = res.total_reduction + static_cast<long long>(res.rounds.size());
      CHECK(res.final_core_size == res.initial_core_size - removed);
      std::vector<int> collapsers;
      for (const auto& r : res.rounds) {
        CHECK(r.reduction >= 0);
        CHECK(r.collapser >= 0);
        collapsers.push_back(r.collapser);
      }
      std::sort(collapsers.begin(), collapsers.end());
      CHECK(std::adjacent_find(collapsers.begin(), collapsers.end()) == collapsers.end());
      CHECK(res.final_core_size == oracle::core_size_without(h, k, thr, collapsers));
      if (res.truncated) {
        CHECK(res.final_core_size == 0);
        CHECK(res.rounds.size() < 3);
      }
    }
  }
}

TEST_CASE("a full candidate scan matches the exhaustive single-removal optimum") {
  Rng rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Hypergraph h = oracle::random_hypergraph(rng, 9, 6);
    int k = 1 + static_cast<int>(rng.below(2));
    Fraction t = rng.bernoulli(0.5) ? Fraction(0, 1) : Fraction(2, 3);
    CollapseState probe = make_collapse_state(h, k, t);
    if (probe.st.nodes_alive == 0) continue;
    auto thr = kt_thresholds(h, t);
    long long best = probe.st.nodes_alive;
    for (int v = 0; v < h.num_nodes(); ++v)
      if (probe.st.node_alive[v])
        best = std::min(best, oracle::core_size_without(h, k, thr, {v}));
    auto res = collapse(h, k, t, 1, CollapseMethod::hyperckc);
    CHECK(res.final_core_size == best);
    checked++;
  }
  CHECK(checked >= 40);
}

TEST_CASE("chosen collapsers remove at least their guaranteed followers") {
  Rng rng(515);
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph h = oracle::random_hypergraph(rng, 10, 7);
    CollapseState state = make_collapse_state(h, 2, Fraction(0, 1));
    if (state.st.nodes_alive == 0) continue;
    auto followers = follower_counts(state);
    auto res = collapse(h, 2, Fraction(0, 1), 1, CollapseMethod::hycom_plus, -1);
    REQUIRE(res.rounds.size() == 1);
    CHECK(res.rounds[0].reduction >= followers[res.rounds[0].collapser]);
  }
}

TEST_CASE("incremental endangered updates agree with a from-scratch rebuild") {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    Hypergraph h = oracle::random_hypergraph(rng, 11, 8);
    int k = 1 + static_cast<int>(rng.below(2));
    Fraction t = trial % 3 == 0 ? Fraction(0, 1) : (trial % 3 == 1 ? Fraction(1, 2) : Fraction(1, 1));
    CollapseState state = make_collapse_state(h, k, t);
    check_maps_equal(state.endangered, rebuild_endangered(h, state.thresholds, state.st));
    for (int step = 0; step < 3 && state.st.nodes_alive > 0; ++step) {
      int pick = -1;
      std::uint64_t seen = 0;
      for (int v = 0; v < h.num_nodes(); ++v)
        if (state.st.node_alive[v] && rng.below(++seen) == 0) pick = v;
      REQUIRE(pick >= 0);
      PeelJournal journal;
      peel_forced(h, k, state.thresholds, state.st, {pick}, &journal);
      update_endangered(h, state.thresholds, state.st, journal, state.endangered);
      check_maps_equal(state.endangered, rebuild_endangered(h, state.thresholds, state.st));
    }
  }
}

TEST_CASE("follower counts match a brute-force recount") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph h = oracle::random_hypergraph(rng, 10, 7);
    int k = 1 + static_cast<int>(rng.below(3));
    CollapseState state = make_collapse_state(h, k, Fraction(1, 2));
    CHECK(follower_counts(state) == brute_followers(state));
  }
}

TEST_CASE("a lone pair edge collapses to nothing in one round") {
  Hypergraph h = Hypergraph::from_edge_sets({{1, 2}});
  auto res = collapse(h, 1, Fraction(0, 1), 3, CollapseMethod::hycom_plus);
  CHECK(res.initial_core_size == 2);
  CHECK(res.final_core_size == 0);
  CHECK(res.truncated);
  REQUIRE(res.rounds.size() == 1);
  CHECK(res.rounds[0].reduction == 1);
  CHECK(h.label(res.rounds[0].collapser) == "1");
}

TEST_CASE("without endangered edges the busiest node is removed") {
  Hypergraph h = Hypergraph::from_edge_sets({{1, 2, 3}, {2, 3, 4}, {1, 3, 4}});
  CollapseState state = make_collapse_state(h, 2, Fraction(0, 1));
  CHECK(state.endangered.pairs.empty());
  CHECK(best_collapser(state, -1, true) == -1);
  auto res = collapse(h, 2, Fraction(0, 1), 1, CollapseMethod::hycom);
  REQUIRE(res.rounds.size() == 1);
  CHECK(h.label(res.rounds[0].collapser) == "3");
  CHECK(res.rounds[0].reduction == 0);
  CHECK(res.final_core_size == 3);
}

TEST_CASE("a forced candidate budget still returns the all-candidates answer") {
  Hypergraph h = Hypergraph::load(data_path("example.txt"));
  auto forced = collapse(h, 2, Fraction(0, 1), 2, CollapseMethod::hyperckc, 1);
  auto full = collapse(h, 2, Fraction(0, 1), 2, CollapseMethod::hyperckc, -1);
  REQUIRE(forced.rounds.size() == full.rounds.size());
  for (std::size_t i = 0; i < full.rounds.size(); ++i) {
    CHECK(forced.rounds[i].collapser == full.rounds[i].collapser);
    CHECK(forced.rounds[i].reduction == full.rounds[i].reduction);
  }
}

TEST_CASE("collapse argument validation and method names") {
  Hypergraph h = Hypergraph::load(data_path("toy1.txt"));
  CHECK_THROWS(collapse(h, 1, Fraction(0, 1), 0, CollapseMethod::hycom));
  CHECK_THROWS(collapse(h, 1, Fraction(0, 1), 1, CollapseMethod::hycom, 0));
  CHECK_THROWS(collapse(h, 0, Fraction(0, 1), 1, CollapseMethod::hycom));
  CHECK_THROWS_WITH(collapse(h, 9, Fraction(0, 1), 1, CollapseMethod::hycom),
                    "the initial core is empty");
  CHECK(collapse_method_name(CollapseMethod::hyperckc) == "hyperckc");
  CHECK(collapse_method_name(CollapseMethod::hycom) == "hycom");
  CHECK(collapse_method_name(CollapseMethod::hycom_plus) == "hycom_plus");

  CHECK(EndangeredMap::pair_key(3, 7) == EndangeredMap::pair_key(7, 3));
  CHECK(EndangeredMap::pair_key(3, 7) == ((std::uint64_t{3} << 32) | 7));
}
