#pragma once

#include <span>
#include <string>
#include <vector>

#include "hypercore/hypergraph.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
  return std::string(DATA_DIR) + "/" + name;
}

inline std::vector<int> members(std::span<const int> s) { return {s.begin(), s.end()}; }

inline std::vector<std::string> labels_of(const hypercore::Hypergraph& h,
                                          const std::vector<int>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (int v : ids) out.push_back(h.label(v));
  return out;
}

inline int id_of(const hypercore::Hypergraph& h, const std::string& label) {
  int v = h.node_id(label);
  REQUIRE(v >= 0);
  return v;
}

}  // namespace testutil
