#pragma once

#include <vector>

#include "hypercore/core.hpp"
#include "hypercore/fraction.hpp"
#include "hypercore/hypergraph.hpp"

namespace hypercore {

// Node counts of every (k,t)-hypercore over a t grid, one coreness sweep per
// t. Sizes are normalized as n_tilde = log_{|V|} |V(C_{k,t})|, with -1
// standing in for empty cores.
struct CoreSizeLandscape {
  long long num_nodes = 0;
  int c0_star = 0;  // max coreness at t = 0, the k range of the grid
  std::vector<Fraction> t_grid;
  std::vector<std::vector<long long>> sizes;  // [t index][k - 1], k = 1..c0_star

  double n_tilde(int t_index, int k) const;
};

// points evenly spaced values j/(points-1) covering [0, 1]
std::vector<Fraction> uniform_t_grid(int points);
// midpoint-rule abscissae (2i+1)/(2*resolution)
std::vector<Fraction> midpoint_t_grid(int resolution);

CoreSizeLandscape core_size_landscape(const Hypergraph& h, const std::vector<Fraction>& t_grid,
                                      int threads = 1);

// Root mean squared landscape difference over the unit square, sampling k
// through the normalizer ceil((c0*)^x) so every scale contributes equally.
// Pointwise differences are capped at 1, so the result lies in [0, 1].
double hsmd(const Hypergraph& h1, const Hypergraph& h2, int grid_resolution = 101,
            int threads = 1);

// Relative density of the top core at each t: delta(C_{c_t*,t}) / delta(H)
// with delta = edge count / node count.
struct DensityProfile {
  std::vector<Fraction> t_grid;
  std::vector<double> relative_density;
};

DensityProfile density_profile(const Hypergraph& h, const std::vector<Fraction>& t_grid);

// Root mean squared log-ratio of two aligned positive density profiles.
double rdmd_from_profiles(const std::vector<double>& p1, const std::vector<double>& p2);

// As above on midpoint grids; if either profile degenerates the grid is
// truncated to the common valid prefix and *points_used reports its length.
double rdmd(const Hypergraph& h1, const Hypergraph& h2, int grid_resolution = 101,
            int* points_used = nullptr);

// Entropy (base 2) the t-hypercoreness sequence adds on top of the degree
// partition: joint entropy of (degree, coreness) minus degree entropy.
double information_gain(const Hypergraph& h, Fraction t);

// Product-moment correlation; NaN when either side has zero variance.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Least squares on (log10 k, log10 #{v : value(v) >= k}) for k = 1..max value.
PowerLawFit loglog_powerlaw_fit(const std::vector<int>& values);

}  // namespace hypercore
