#include "hypercore/sir.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "hypercore/analytics.hpp"
#include "hypercore/rng.hpp"
#include "hypercore/variants.hpp"

namespace hypercore {

int hyper_sir(const Hypergraph& h, int seed_node, const SirParams& params,
              std::uint64_t run_index) {
  if (seed_node < 0 || seed_node >= h.num_nodes())
    throw std::invalid_argument("invalid seed node id");
  if (!(params.gamma > 0.0) || params.gamma > 1.0)
    throw std::invalid_argument("gamma must be in (0, 1]");
  if (params.beta < 0.0) throw std::invalid_argument("beta must be >= 0");
  Rng rng(mix_seed(params.seed, static_cast<std::uint64_t>(seed_node), run_index));

  std::vector<char> state(h.num_nodes(), 0);  // 0 = S, 1 = I, 2 = R
  std::vector<int> infected{seed_node};
  state[seed_node] = 1;
  int ever_infected = 1;

  std::vector<double> p_s(h.num_nodes(), 1.0);
  std::vector<char> touched(h.num_nodes(), 0);
  std::vector<char> edge_seen(h.num_edges(), 0);
  std::vector<int> edges, candidates, survivors, newly, merged;
  while (!infected.empty()) {
    edges.clear();
    for (int v : infected)
      for (int i : h.incident_edges(v)) {
        if (edge_seen[i]) continue;
        edge_seen[i] = 1;
        edges.push_back(i);
      }
    std::sort(edges.begin(), edges.end());

    candidates.clear();
    for (int i : edges) {
      edge_seen[i] = 0;
      int infected_in_edge = 0;
      for (int u : h.edge(i)) infected_in_edge += state[u] == 1;
      double factor =
          1.0 - 2.0 * params.beta * infected_in_edge / static_cast<double>(h.original_size(i));
      factor = std::clamp(factor, 0.0, 1.0);
      for (int u : h.edge(i)) {
        if (state[u] != 0) continue;
        if (!touched[u]) {
          touched[u] = 1;
          candidates.push_back(u);
        }
        p_s[u] *= factor;
      }
    }

    survivors.clear();
    for (int v : infected) {
      if (rng.bernoulli(params.gamma))
        state[v] = 2;
      else
        survivors.push_back(v);
    }

    std::sort(candidates.begin(), candidates.end());
    newly.clear();
    for (int u : candidates) {
      if (rng.bernoulli(1.0 - p_s[u])) {
        state[u] = 1;
        newly.push_back(u);
        ever_infected++;
      }
      touched[u] = 0;
      p_s[u] = 1.0;
    }

    merged.resize(survivors.size() + newly.size());
    std::merge(survivors.begin(), survivors.end(), newly.begin(), newly.end(), merged.begin());
    infected = merged;
  }
  return ever_infected;
}

std::vector<NamedCentrality> standard_centralities(const Hypergraph& h,
                                                   const std::vector<Fraction>& t_grid) {
  std::vector<NamedCentrality> out;
  auto as_doubles = [](const std::vector<int>& v) {
    return std::vector<double>(v.begin(), v.end());
  };

  for (const Fraction& t : t_grid)
    out.push_back({"t-hypercoreness(t=" + t.str() + ")", as_doubles(t_hypercoreness(h, t).coreness)});

  {
    std::vector<double> deg(h.num_nodes());
    for (int v = 0; v < h.num_nodes(); ++v) deg[v] = h.degree(v);
    out.push_back({"degree", std::move(deg)});
  }

  for (int l = 3; l <= h.max_edge_size(); ++l) {
    std::vector<double> vals = as_doubles(l_hypercoreness(h, l));
    auto [lo_it, hi_it] = std::minmax_element(vals.begin(), vals.end());
    // copy the bounds: the loop overwrites the elements they point into
    double lo = *lo_it, hi = *hi_it;
    if (hi > lo)
      for (double& v : vals) v = (v - lo) / (hi - lo);
    out.push_back({"l-hypercoreness(l=" + std::to_string(l) + ")", std::move(vals)});
  }

  out.push_back({"neighbor-hypercoreness", as_doubles(neighbor_hypercoreness(h))});
  out.push_back({"nd-hypercoreness", as_doubles(nd_hypercoreness(h))});
  out.push_back({"coreness-U", as_doubles(pairwise_coreness(clique_expansion(h, false), false))});
  out.push_back({"coreness-W", as_doubles(pairwise_coreness(clique_expansion(h, true), true))});
  return out;
}

InfluenceReport influence_experiment(const Hypergraph& h, const InfluenceConfig& cfg,
                                     const std::vector<NamedCentrality>& centralities) {
  if (cfg.runs < 1) throw std::invalid_argument("runs must be >= 1");
  if (cfg.betas.empty()) throw std::invalid_argument("at least one beta is required");
  if (!(cfg.sample_frac > 0.0) || cfg.sample_frac > 1.0)
    throw std::invalid_argument("sample fraction must be in (0, 1]");
  for (const NamedCentrality& c : centralities)
    if (static_cast<int>(c.values.size()) != h.num_nodes())
      throw std::invalid_argument("centrality '" + c.name + "' is not one value per node");

  int n = h.num_nodes();
  if (n == 0) throw std::invalid_argument("empty hypergraph");
  int sample_size = std::clamp(static_cast<int>(cfg.sample_frac * n), 1, n);

  InfluenceReport report;
  report.runs = cfg.runs;
  {
    // seed-node sample: random prefix of a partial shuffle, then sorted
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    Rng rng(mix_seed(cfg.seed, 0x9e3779b97f4a7c15ULL));
    for (int i = 0; i < sample_size; ++i) {
      int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
      std::swap(perm[i], perm[j]);
    }
    report.sampled_nodes.assign(perm.begin(), perm.begin() + sample_size);
    std::sort(report.sampled_nodes.begin(), report.sampled_nodes.end());
  }

  int num_betas = static_cast<int>(cfg.betas.size());
  report.mean_r.assign(num_betas, std::vector<double>(sample_size, 0.0));

  // per-(beta, seed node) tasks; draw streams are keyed by (seed, node, run)
  // only, so means for all betas share seeds and scheduling cannot shift them
  auto run_task = [&](int task) {
    int bi = task / sample_size;
    int si = task % sample_size;
    SirParams params;
    params.beta = cfg.betas[bi];
    params.gamma = cfg.gamma;
    params.seed = cfg.seed;
    long long total = 0;
    for (int r = 0; r < cfg.runs; ++r)
      total += hyper_sir(h, report.sampled_nodes[si], params, static_cast<std::uint64_t>(r));
    report.mean_r[bi][si] = static_cast<double>(total) / cfg.runs;
  };
  int num_tasks = num_betas * sample_size;
  int workers = std::max(1, std::min(cfg.threads, num_tasks));
  if (workers == 1) {
    for (int task = 0; task < num_tasks; ++task) run_task(task);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int task; (task = next.fetch_add(1)) < num_tasks;) run_task(task);
      });
    for (auto& th : pool) th.join();
  }

  for (int bi = 0; bi < num_betas; ++bi)
    for (const NamedCentrality& c : centralities) {
      double r = std::numeric_limits<double>::quiet_NaN();
      if (sample_size >= 2) {
        std::vector<double> x(sample_size);
        for (int si = 0; si < sample_size; ++si) x[si] = c.values[report.sampled_nodes[si]];
        r = pearson(x, report.mean_r[bi]);
      }
      report.entries.push_back({c.name, cfg.betas[bi], r});
    }
  return report;
}

}  // namespace hypercore
