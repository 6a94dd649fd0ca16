#include "hypercore/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hypercore {

int Hypergraph::node_id(const std::string& label) const {
  auto it = ids_.find(label);
  return it == ids_.end() ? -1 : it->second;
}

Hypergraph Hypergraph::load(const std::string& path, const LoadOptions& opt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse(in, opt);
}

Hypergraph Hypergraph::parse(std::istream& in, const LoadOptions& opt) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return build(std::move(lines), opt);
}

Hypergraph Hypergraph::from_edge_sets(const std::vector<std::vector<long long>>& raw_edges,
                                      const LoadOptions& opt) {
  std::vector<std::vector<std::string>> lines;
  lines.reserve(raw_edges.size());
  for (const auto& e : raw_edges) {
    std::vector<std::string> tokens;
    tokens.reserve(e.size());
    for (long long v : e) tokens.push_back(std::to_string(v));
    lines.push_back(std::move(tokens));
  }
  return build(std::move(lines), opt);
}

Hypergraph Hypergraph::build(std::vector<std::vector<std::string>> token_lines,
                             const LoadOptions& opt) {
  // duplicate tokens within a line collapse to one membership; the
  // left-to-right order of first occurrences is kept for id assignment
  std::vector<std::vector<std::string>> edges;
  for (auto& tokens : token_lines) {
    std::vector<std::string> uniq;
    for (auto& t : tokens) {
      if (std::find(uniq.begin(), uniq.end(), t) == uniq.end()) uniq.push_back(std::move(t));
    }
    edges.push_back(std::move(uniq));
  }
  if (opt.drop_singletons) {
    std::erase_if(edges, [](const auto& e) { return e.size() < 2; });
  }
  if (opt.dedup) {
    std::unordered_map<std::string, bool> seen;
    std::vector<std::vector<std::string>> kept;
    for (auto& e : edges) {
      std::vector<std::string> sorted = e;
      std::sort(sorted.begin(), sorted.end());
      std::string key;
      for (const auto& t : sorted) {
        key += t;
        key += '\n';
      }
      if (!seen.emplace(key, true).second) continue;
      kept.push_back(std::move(e));
    }
    edges = std::move(kept);
  }
  if (edges.empty()) throw std::runtime_error("no hyperedges survive preprocessing");

  Hypergraph h;
  for (const auto& e : edges) {
    std::vector<int> ids;
    ids.reserve(e.size());
    for (const auto& t : e) {
      auto it = h.ids_.find(t);
      if (it == h.ids_.end()) {
        int id = static_cast<int>(h.labels_.size());
        h.ids_.emplace(t, id);
        h.labels_.push_back(t);
        ids.push_back(id);
      } else {
        ids.push_back(it->second);
      }
    }
    std::sort(ids.begin(), ids.end());
    h.append_edge(ids);
  }
  h.finalize();
  return h;
}

void Hypergraph::append_edge(const std::vector<int>& ids) {
  edge_data_.insert(edge_data_.end(), ids.begin(), ids.end());
  edge_off_.push_back(edge_data_.size());
}

void Hypergraph::finalize() {
  int n = num_nodes();
  int m = num_edges();
  original_size_.resize(m);
  total_size_ = 0;
  max_edge_size_ = 0;
  for (int i = 0; i < m; ++i) {
    original_size_[i] = static_cast<int>(edge_off_[i + 1] - edge_off_[i]);
    total_size_ += original_size_[i];
    max_edge_size_ = std::max(max_edge_size_, original_size_[i]);
  }
  inc_off_.assign(n + 1, 0);
  for (int v : edge_data_) inc_off_[v + 1]++;
  for (int v = 0; v < n; ++v) inc_off_[v + 1] += inc_off_[v];
  inc_data_.resize(edge_data_.size());
  std::vector<std::size_t> cursor(inc_off_.begin(), inc_off_.end() - 1);
  for (int i = 0; i < m; ++i)
    for (std::size_t p = edge_off_[i]; p < edge_off_[i + 1]; ++p)
      inc_data_[cursor[edge_data_[p]]++] = i;
}

HypergraphStats Hypergraph::stats() const {
  HypergraphStats s;
  s.num_nodes = num_nodes();
  s.num_edges = num_edges();
  s.total_size = total_size_;
  s.max_edge_size = max_edge_size_;
  s.edges_with_size.assign(max_edge_size_ + 1, 0);
  for (int i = 0; i < num_edges(); ++i) s.edges_with_size[edge_off_[i + 1] - edge_off_[i]]++;
  for (int v = 0; v < num_nodes(); ++v) s.max_degree = std::max(s.max_degree, degree(v));
  if (s.num_nodes > 0) s.avg_degree = static_cast<double>(total_size_) / s.num_nodes;
  if (s.num_edges > 0) s.avg_edge_size = static_cast<double>(total_size_) / s.num_edges;
  return s;
}

Hypergraph Hypergraph::largest_connected_component() const {
  int n = num_nodes();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> rank(n, 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank[a] < rank[b]) std::swap(a, b);
    parent[b] = a;
    if (rank[a] == rank[b]) rank[a]++;
  };
  for (int i = 0; i < num_edges(); ++i) {
    auto e = edge(i);
    for (std::size_t j = 1; j < e.size(); ++j) unite(e[0], e[j]);
  }

  std::vector<long long> size(n, 0);
  for (int v = 0; v < n; ++v) size[find(v)]++;
  // largest component; ties go to the one holding the smallest node id
  int best = -1;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (best == -1 || size[r] > size[best]) best = r;
  }

  Hypergraph h;
  std::vector<int> remap(n, -1);
  for (int v = 0; v < n; ++v) {
    if (find(v) != best) continue;
    remap[v] = static_cast<int>(h.labels_.size());
    h.labels_.push_back(labels_[v]);
    h.ids_.emplace(labels_[v], remap[v]);
  }
  for (int i = 0; i < num_edges(); ++i) {
    auto e = edge(i);
    if (find(e[0]) != best) continue;
    std::vector<int> ids;
    ids.reserve(e.size());
    for (int v : e) ids.push_back(remap[v]);
    std::sort(ids.begin(), ids.end());
    h.append_edge(ids);
  }
  h.finalize();
  return h;
}

Hypergraph Hypergraph::upscaled(int factor) const {
  if (factor < 1) throw std::invalid_argument("upscale factor must be >= 1");
  if (static_cast<long long>(num_edges()) * factor > 2000000000LL)
    throw std::overflow_error("upscale would overflow edge index space");
  Hypergraph h;
  h.labels_ = labels_;
  h.ids_ = ids_;
  const std::size_t span = edge_data_.size();
  h.edge_data_.reserve(span * factor);
  h.edge_off_.reserve(static_cast<std::size_t>(num_edges()) * factor + 1);
  for (int r = 0; r < factor; ++r) {
    h.edge_data_.insert(h.edge_data_.end(), edge_data_.begin(), edge_data_.end());
    for (int i = 0; i < num_edges(); ++i)
      h.edge_off_.push_back(static_cast<std::size_t>(r) * span + edge_off_[i + 1]);
  }
  h.finalize();
  return h;
}

std::string Hypergraph::to_json() const {
  nlohmann::json j;
  j["labels"] = labels_;
  std::vector<std::vector<int>> edges(num_edges());
  for (int i = 0; i < num_edges(); ++i) edges[i].assign(edge(i).begin(), edge(i).end());
  j["edges"] = edges;
  j["original_size"] = original_size_;
  return j.dump();
}

Hypergraph Hypergraph::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Hypergraph h;
  h.labels_ = j.at("labels").get<std::vector<std::string>>();
  for (const auto& e : j.at("edges").get<std::vector<std::vector<int>>>()) h.append_edge(e);
  for (int v = 0; v < static_cast<int>(h.labels_.size()); ++v) h.ids_.emplace(h.labels_[v], v);
  h.finalize();
  auto orig = j.at("original_size").get<std::vector<int>>();
  if (orig.size() != static_cast<std::size_t>(h.num_edges()))
    throw std::runtime_error("hypergraph json: original_size length mismatch");
  h.original_size_ = std::move(orig);
  return h;
}

WeightedGraph clique_expansion(const Hypergraph& h, bool weighted) {
  WeightedGraph g;
  g.num_nodes = h.num_nodes();
  g.weighted = weighted;
  g.adj.assign(g.num_nodes, {});
  std::unordered_map<std::uint64_t, int> weight;
  for (int i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edge(i);
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        std::uint64_t key =
            (static_cast<std::uint64_t>(e[a]) << 32) | static_cast<std::uint32_t>(e[b]);
        weight[key]++;
      }
  }
  g.num_pairs = static_cast<long long>(weight.size());
  for (const auto& [key, w] : weight) {
    int u = static_cast<int>(key >> 32);
    int v = static_cast<int>(key & 0xffffffffu);
    int val = weighted ? w : 1;
    g.adj[u].emplace_back(v, val);
    g.adj[v].emplace_back(u, val);
  }
  for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

BipartiteGraph star_expansion(const Hypergraph& h) {
  BipartiteGraph b;
  b.num_left = h.num_nodes();
  b.num_right = h.num_edges();
  b.left_adj.assign(b.num_left, {});
  b.right_adj.assign(b.num_right, {});
  for (int i = 0; i < h.num_edges(); ++i) {
    for (int v : h.edge(i)) {
      b.left_adj[v].push_back(i);
      b.right_adj[i].push_back(v);
    }
  }
  return b;
}

}  // namespace hypercore
