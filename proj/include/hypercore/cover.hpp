#pragma once

#include <string>
#include <vector>

#include "hypercore/fraction.hpp"
#include "hypercore/hypergraph.hpp"

namespace hypercore {

// Number of hyperedges e with |e intersect nodes| >= t_c * |e|, compared
// exactly in integers.
long long covered_count(const Hypergraph& h, const std::vector<int>& nodes, Fraction t_c);

enum class CoverMethod { hypercoreness, degree, greedy };

std::string cover_method_name(CoverMethod m);

// Picks k_c nodes aiming to t_c-cover as many hyperedges as possible.
// hypercoreness: top coreness at t_c, ties by degree then id;
// degree: top degree, ties by id;
// greedy: highest-degree seed, then best marginal coverage gain each step
// (ties by degree then id), with gains maintained incrementally.
// With greedy, step_covered (when given) receives the incrementally
// maintained covered count after each pick; other methods leave it empty.
std::vector<int> cover_select(const Hypergraph& h, int k_c, Fraction t_c, CoverMethod method,
                              std::vector<long long>* step_covered = nullptr);

}  // namespace hypercore
