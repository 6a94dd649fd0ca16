#include "hypercore/analytics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace hypercore {

double CoreSizeLandscape::n_tilde(int t_index, int k) const {
  long long size = sizes[t_index][k - 1];
  if (size == 0) return -1.0;
  return std::log(static_cast<double>(size)) / std::log(static_cast<double>(num_nodes));
}

std::vector<Fraction> uniform_t_grid(int points) {
  if (points < 1) throw std::invalid_argument("grid needs at least 1 point");
  std::vector<Fraction> grid;
  if (points == 1) {
    grid.emplace_back(0, 1);
    return grid;
  }
  for (int j = 0; j < points; ++j) grid.emplace_back(j, points - 1);
  return grid;
}

std::vector<Fraction> midpoint_t_grid(int resolution) {
  if (resolution < 1) throw std::invalid_argument("grid needs at least 1 point");
  std::vector<Fraction> grid;
  for (int i = 0; i < resolution; ++i) grid.emplace_back(2 * i + 1, 2 * resolution);
  return grid;
}

CoreSizeLandscape core_size_landscape(const Hypergraph& h, const std::vector<Fraction>& t_grid,
                                      int threads) {
  if (h.num_nodes() < 2) throw std::invalid_argument("landscape needs at least 2 nodes");
  if (t_grid.empty()) throw std::invalid_argument("landscape needs a nonempty t grid");
  for (const Fraction& t : t_grid)
    if (t.is_sentinel()) throw std::invalid_argument("t grid values must lie in [0, 1]");

  CoreSizeLandscape ls;
  ls.num_nodes = h.num_nodes();
  ls.c0_star = t_hypercoreness(h, Fraction(0, 1)).c_star;
  ls.t_grid = t_grid;
  ls.sizes.assign(t_grid.size(), {});

  auto fill_one = [&](int idx) {
    CorenessResult cor = t_hypercoreness(h, t_grid[idx]);
    // suffix counts of the coreness histogram give every core size at once
    std::vector<long long>& sizes = ls.sizes[idx];
    sizes.assign(ls.c0_star, 0);
    for (int v = 0; v < h.num_nodes(); ++v) {
      int c = std::min(cor.coreness[v], ls.c0_star);
      if (c >= 1) sizes[c - 1]++;
    }
    for (int k = ls.c0_star - 1; k >= 1; --k) sizes[k - 1] += sizes[k];
  };

  int workers = std::max(1, std::min<int>(threads, static_cast<int>(t_grid.size())));
  if (workers == 1) {
    for (int idx = 0; idx < static_cast<int>(t_grid.size()); ++idx) fill_one(idx);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int idx; (idx = next.fetch_add(1)) < static_cast<int>(t_grid.size());) fill_one(idx);
      });
    for (auto& th : pool) th.join();
  }
  return ls;
}

namespace {

int landscape_k(int c0_star, double x) {
  // ceil with a nudge so exact integer powers are not pushed up by rounding
  double p = std::pow(static_cast<double>(c0_star), x);
  return static_cast<int>(std::ceil(p - 1e-9));
}

}  // namespace

double hsmd(const Hypergraph& h1, const Hypergraph& h2, int grid_resolution, int threads) {
  if (grid_resolution < 1) throw std::invalid_argument("grid resolution must be >= 1");
  std::vector<Fraction> grid = midpoint_t_grid(grid_resolution);
  CoreSizeLandscape l1 = core_size_landscape(h1, grid, threads);
  CoreSizeLandscape l2 = core_size_landscape(h2, grid, threads);

  double sum = 0.0;
  for (int i = 0; i < grid_resolution; ++i) {
    double x = (2 * i + 1) / (2.0 * grid_resolution);
    int k1 = landscape_k(l1.c0_star, x);
    int k2 = landscape_k(l2.c0_star, x);
    for (int j = 0; j < grid_resolution; ++j) {
      double d = std::min(std::fabs(l1.n_tilde(j, k1) - l2.n_tilde(j, k2)), 1.0);
      sum += d * d;
    }
  }
  return std::sqrt(sum / (static_cast<double>(grid_resolution) * grid_resolution));
}

DensityProfile density_profile(const Hypergraph& h, const std::vector<Fraction>& t_grid) {
  if (h.num_nodes() == 0) throw std::invalid_argument("density profile needs a nonempty hypergraph");
  DensityProfile prof;
  prof.t_grid = t_grid;
  double base = static_cast<double>(h.num_edges()) / static_cast<double>(h.num_nodes());
  for (const Fraction& t : t_grid) {
    CorenessResult cor = t_hypercoreness(h, t);
    if (cor.top_core_nodes == 0) {
      prof.relative_density.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    double top = static_cast<double>(cor.top_core_edges) / static_cast<double>(cor.top_core_nodes);
    prof.relative_density.push_back(top / base);
  }
  return prof;
}

double rdmd_from_profiles(const std::vector<double>& p1, const std::vector<double>& p2) {
  if (p1.size() != p2.size() || p1.empty())
    throw std::invalid_argument("profiles must be nonempty and aligned");
  double sum = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (!(p1[i] > 0.0) || !(p2[i] > 0.0))
      throw std::invalid_argument("profiles must be strictly positive");
    double d = std::log(p1[i]) - std::log(p2[i]);
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(p1.size()));
}

double rdmd(const Hypergraph& h1, const Hypergraph& h2, int grid_resolution, int* points_used) {
  if (grid_resolution < 1) throw std::invalid_argument("grid resolution must be >= 1");
  std::vector<Fraction> grid = midpoint_t_grid(grid_resolution);
  DensityProfile prof1 = density_profile(h1, grid);
  DensityProfile prof2 = density_profile(h2, grid);

  int used = 0;
  while (used < grid_resolution && prof1.relative_density[used] > 0.0 &&
         prof2.relative_density[used] > 0.0)
    used++;
  if (points_used) *points_used = used;
  if (used == 0) throw std::invalid_argument("no common t range with nonempty top cores");
  std::vector<double> p1(prof1.relative_density.begin(), prof1.relative_density.begin() + used);
  std::vector<double> p2(prof2.relative_density.begin(), prof2.relative_density.begin() + used);
  return rdmd_from_profiles(p1, p2);
}

double information_gain(const Hypergraph& h, Fraction t) {
  int n = h.num_nodes();
  if (n == 0) throw std::invalid_argument("information gain needs a nonempty hypergraph");
  CorenessResult cor = t_hypercoreness(h, t);

  std::unordered_map<long long, long long> joint;
  std::unordered_map<long long, long long> by_degree;
  for (int v = 0; v < n; ++v) {
    long long deg = h.degree(v);
    joint[deg * (static_cast<long long>(cor.c_star) + 1) + cor.coreness[v]]++;
    by_degree[deg]++;
  }
  auto entropy = [n](const std::unordered_map<long long, long long>& counts) {
    double sum = 0.0;
    for (const auto& [key, c] : counts) {
      double p = static_cast<double>(c) / n;
      sum -= p * std::log2(p);
    }
    return sum;
  };
  return entropy(joint) - entropy(by_degree);
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("pearson needs two aligned sequences of length >= 2");
  double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

PowerLawFit loglog_powerlaw_fit(const std::vector<int>& values) {
  if (values.empty()) throw std::invalid_argument("fit needs a nonempty value sequence");
  int max_value = 0;
  for (int v : values) {
    if (v < 1) throw std::invalid_argument("fit values must be positive integers");
    max_value = std::max(max_value, v);
  }
  if (max_value < 2) throw std::invalid_argument("fit needs at least 2 distinct survivor levels");

  std::vector<long long> survivors(max_value + 2, 0);
  for (int v : values) survivors[v]++;
  for (int k = max_value - 1; k >= 1; --k) survivors[k] += survivors[k + 1];

  double n = max_value;
  double mx = 0.0, my = 0.0;
  std::vector<double> xs(max_value), ys(max_value);
  for (int k = 1; k <= max_value; ++k) {
    xs[k - 1] = std::log10(static_cast<double>(k));
    ys[k - 1] = std::log10(static_cast<double>(survivors[k]));
    mx += xs[k - 1];
    my += ys[k - 1];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, sst = 0.0;
  for (int k = 1; k <= max_value; ++k) {
    sxy += (xs[k - 1] - mx) * (ys[k - 1] - my);
    sxx += (xs[k - 1] - mx) * (xs[k - 1] - mx);
    sst += (ys[k - 1] - my) * (ys[k - 1] - my);
  }
  PowerLawFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (sst == 0.0) {
    fit.r_squared = 1.0;
    return fit;
  }
  double ssr = 0.0;
  for (int k = 1; k <= max_value; ++k) {
    double pred = fit.intercept + fit.slope * xs[k - 1];
    ssr += (ys[k - 1] - pred) * (ys[k - 1] - pred);
  }
  fit.r_squared = 1.0 - ssr / sst;
  return fit;
}

}  // namespace hypercore
