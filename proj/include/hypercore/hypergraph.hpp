#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hypercore {

struct LoadOptions {
  bool drop_singletons = true;  // remove hyperedges of cardinality 1
  bool dedup = true;            // keep one copy of each group of parallel hyperedges
};

struct HypergraphStats {
  int num_nodes = 0;
  long long num_edges = 0;
  int max_degree = 0;
  double avg_degree = 0.0;
  int max_edge_size = 0;
  double avg_edge_size = 0.0;
  long long total_size = 0;
  std::vector<long long> edges_with_size;  // index = cardinality, 0..max_edge_size
};

// Immutable after construction. Nodes are dense ids 0..n-1 mapped from the
// external string tokens in first-appearance order; edges are strictly sorted
// id sets kept in input order. original_size(i) is |e_i| at load time and is
// the reference size for all fractional survival thresholds downstream.
class Hypergraph {
 public:
  Hypergraph() = default;

  static Hypergraph load(const std::string& path, const LoadOptions& opt = {});
  static Hypergraph parse(std::istream& in, const LoadOptions& opt = {});
  // programmatic construction; ids may be arbitrary non-negative integers,
  // labels become their decimal strings
  static Hypergraph from_edge_sets(const std::vector<std::vector<long long>>& raw_edges,
                                   const LoadOptions& opt = {});

  int num_nodes() const { return static_cast<int>(labels_.size()); }
  int num_edges() const { return static_cast<int>(edge_off_.size()) - 1; }
  std::span<const int> edge(int i) const {
    return {edge_data_.data() + edge_off_[i], edge_data_.data() + edge_off_[i + 1]};
  }
  int original_size(int i) const { return original_size_[i]; }
  std::span<const int> incident_edges(int v) const {
    return {inc_data_.data() + inc_off_[v], inc_data_.data() + inc_off_[v + 1]};
  }
  int degree(int v) const { return static_cast<int>(inc_off_[v + 1] - inc_off_[v]); }
  long long total_size() const { return total_size_; }
  int max_edge_size() const { return max_edge_size_; }
  const std::string& label(int v) const { return labels_[v]; }
  int node_id(const std::string& label) const;

  HypergraphStats stats() const;
  Hypergraph largest_connected_component() const;
  // every hyperedge duplicated `factor` times (dedup deliberately bypassed)
  Hypergraph upscaled(int factor) const;

  // serialization round-trip (labels, edges, original sizes)
  std::string to_json() const;
  static Hypergraph from_json(const std::string& text);

 private:
  static Hypergraph build(std::vector<std::vector<std::string>> token_lines,
                          const LoadOptions& opt);
  void append_edge(const std::vector<int>& ids);
  void finalize();

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> ids_;
  // member lists packed back to back: edge i spans edge_data_[edge_off_[i]..
  // edge_off_[i+1]), and inc_off_/inc_data_ hold the transposed layout
  std::vector<std::size_t> edge_off_{0};
  std::vector<int> edge_data_;
  std::vector<int> original_size_;
  std::vector<std::size_t> inc_off_;
  std::vector<int> inc_data_;
  long long total_size_ = 0;
  int max_edge_size_ = 0;
};

// Pairwise projection: nodes adjacent iff they share a hyperedge. In weighted
// mode the weight counts the shared hyperedges; unweighted mode fixes it at 1.
struct WeightedGraph {
  int num_nodes = 0;
  bool weighted = false;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, weight), sorted
  long long num_pairs = 0;
};

WeightedGraph clique_expansion(const Hypergraph& h, bool weighted);

// Incidence bipartite graph: left side = nodes, right side = hyperedges.
struct BipartiteGraph {
  int num_left = 0;
  int num_right = 0;
  std::vector<std::vector<int>> left_adj;
  std::vector<std::vector<int>> right_adj;
};

BipartiteGraph star_expansion(const Hypergraph& h);

}  // namespace hypercore
