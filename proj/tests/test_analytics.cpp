#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "hypercore/analytics.hpp"
#include "hypercore/core.hpp"
#include "hypercore/hypergraph.hpp"
#include "hypercore/rng.hpp"
#include "oracles.hpp"

using hypercore::CoreSizeLandscape;
using hypercore::Fraction;
using hypercore::Hypergraph;
using hypercore::Rng;
using testutil::data_path;

TEST_CASE("t grids") {
  auto uniform = hypercore::uniform_t_grid(5);
  REQUIRE(uniform.size() == 5);
  CHECK(uniform[0] == Fraction(0, 1));
  CHECK(uniform[1] == Fraction(1, 4));
  CHECK(uniform[4] == Fraction(1, 1));
  CHECK(hypercore::uniform_t_grid(1) == std::vector<Fraction>{Fraction(0, 1)});

  auto mid = hypercore::midpoint_t_grid(2);
  REQUIRE(mid.size() == 2);
  CHECK(mid[0] == Fraction(1, 4));
  CHECK(mid[1] == Fraction(3, 4));
  CHECK_THROWS(hypercore::uniform_t_grid(0));
  CHECK_THROWS(hypercore::midpoint_t_grid(0));
}

TEST_CASE("landscape of the worked example") {
  Hypergraph h = Hypergraph::load(data_path("example.txt"));
  std::vector<Fraction> grid{Fraction(0, 1), Fraction(1, 2), Fraction(1, 1)};
  CoreSizeLandscape ls = core_size_landscape(h, grid);
  REQUIRE(ls.c0_star == 3);
  REQUIRE(ls.sizes.size() == 3);
  CHECK(ls.sizes[0] == std::vector<long long>{16, 6, 4});
  CHECK(ls.sizes[1] == std::vector<long long>{16, 5, 4});
  CHECK(ls.sizes[2] == std::vector<long long>{16, 0, 0});

  CHECK(ls.n_tilde(0, 1) == doctest::Approx(1.0));
  CHECK(ls.n_tilde(0, 2) == doctest::Approx(std::log(6.0) / std::log(16.0)));
  CHECK(ls.n_tilde(2, 2) == doctest::Approx(-1.0));

  CHECK_THROWS(core_size_landscape(h, {}));
  CHECK_THROWS(core_size_landscape(h, {Fraction::sentinel()}));
}

TEST_CASE("landscape sizes equal direct core extraction") {
  Rng rng(1009);
  for (int trial = 0; trial < 10; ++trial) {
    Hypergraph h = oracle::random_hypergraph(rng, 13, 8);
    auto grid = hypercore::uniform_t_grid(5);
    CoreSizeLandscape ls = core_size_landscape(h, grid);
    for (std::size_t ti = 0; ti < grid.size(); ++ti)
      for (int k = 1; k <= ls.c0_star; ++k) {
        auto core = kt_hypercore(h, k, grid[ti]);
        CHECK(ls.sizes[ti][k - 1] == static_cast<long long>(core.nodes.size()));
      }
  }
}

TEST_CASE("landscape is identical across thread counts") {
  Hypergraph h = Hypergraph::load(data_path("toy2.txt"));
  auto grid = hypercore::uniform_t_grid(9);
  CoreSizeLandscape one = core_size_landscape(h, grid, 1);
  CoreSizeLandscape four = core_size_landscape(h, grid, 4);
  CHECK(one.sizes == four.sizes);
  CHECK(one.c0_star == four.c0_star);
}

TEST_CASE("landscape distance on a fully worked pair") {
  Hypergraph h1 = Hypergraph::from_edge_sets({{1, 2}});
  Hypergraph h2 = Hypergraph::from_edge_sets({{1, 2}, {1, 2, 3}});
  // max coreness 1 vs 2; the second landscape goes empty above t = 2/3 at
  // k = 2 while the first stays complete, all on 3x3 midpoints
  double lg = std::log(2.0) / std::log(3.0);
  double expected = std::sqrt((2.0 * (1.0 - lg) * (1.0 - lg) + 1.0) / 3.0);
  CHECK(hypercore::hsmd(h1, h2, 3) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(hypercore::hsmd(h2, h1, 3) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(hypercore::hsmd(h1, h2, 3, 4) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("landscape distance identities") {
  Hypergraph a = Hypergraph::load(data_path("toy1.txt"));
  Hypergraph b = Hypergraph::load(data_path("toy2.txt"));
  Hypergraph c = Hypergraph::load(data_path("example.txt"));
  CHECK(hypercore::hsmd(a, a, 31) == doctest::Approx(0.0));
  CHECK(hypercore::hsmd(b, b, 31) == doctest::Approx(0.0));
  double ab = hypercore::hsmd(a, b, 31);
  double ba = hypercore::hsmd(b, a, 31);
  CHECK(ab == doctest::Approx(ba));
  for (double d : {ab, hypercore::hsmd(a, c, 31), hypercore::hsmd(b, c, 31)}) {
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);
  }
}

TEST_CASE("density profile distance is the RMS log ratio") {
  std::vector<double> base{1.0, 2.0, 0.5, 3.0};
  std::vector<double> scaled;
  for (double v : base) scaled.push_back(4.0 * v);
  CHECK(hypercore::rdmd_from_profiles(base, base) == doctest::Approx(0.0));
  CHECK(hypercore::rdmd_from_profiles(base, scaled) == doctest::Approx(std::log(4.0)));
  CHECK(hypercore::rdmd_from_profiles(scaled, base) == doctest::Approx(std::log(4.0)));
  CHECK_THROWS(hypercore::rdmd_from_profiles({1.0}, {1.0, 2.0}));
  CHECK_THROWS(hypercore::rdmd_from_profiles({}, {}));
  CHECK_THROWS(hypercore::rdmd_from_profiles({0.0}, {1.0}));
}

TEST_CASE("density profile distance between hypergraphs") {
  Hypergraph a = Hypergraph::load(data_path("toy2.txt"));
  Hypergraph b = Hypergraph::load(data_path("example.txt"));
  int used = 0;
  CHECK(hypercore::rdmd(a, a, 21, &used) == doctest::Approx(0.0));
  CHECK(used == 21);
  double ab = hypercore::rdmd(a, b, 21);
  double ba = hypercore::rdmd(b, a, 21);
  CHECK(ab == doctest::Approx(ba));
  CHECK(ab >= 0.0);

  // the top core is never empty, so the whole grid stays usable
  hypercore::DensityProfile prof = density_profile(b, hypercore::midpoint_t_grid(21));
  for (double d : prof.relative_density) CHECK(d > 0.0);
}

TEST_CASE("information gain vanishes when degree determines coreness") {
  Hypergraph h = Hypergraph::load(data_path("example.txt"));
  CHECK(hypercore::information_gain(h, Fraction(0, 1)) == doctest::Approx(0.0));
}

TEST_CASE("information gain of a mixed degree class") {
  // triangle of pairs plus a two-edge path: degree 2 nodes split between
  // coreness 2 (triangle) and coreness 1 (path center)
  Hypergraph h = Hypergraph::from_edge_sets({{1, 2}, {1, 3}, {2, 3}, {4, 5}, {5, 6}});
  double expected = (4.0 / 6.0) * (-(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25)));
  CHECK(hypercore::information_gain(h, Fraction(0, 1)) == doctest::Approx(expected));
}

TEST_CASE("information gain equals an independently computed conditional entropy") {
  Rng rng(1103);
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph h = oracle::random_hypergraph(rng, 13, 8);
    Fraction t(static_cast<int>(rng.below(4)), 3);
    std::vector<int> coreness = oracle::coreness_by_repeated_peel(h, t);

    std::map<std::pair<int, int>, int> joint;
    std::map<int, int> marginal;
    for (int v = 0; v < h.num_nodes(); ++v) {
      joint[{h.degree(v), coreness[v]}]++;
      marginal[h.degree(v)]++;
    }
    double n = h.num_nodes();
    double hj = 0.0, hd = 0.0;
    for (const auto& [key, c] : joint) hj -= (c / n) * std::log2(c / n);
    for (const auto& [key, c] : marginal) hd -= (c / n) * std::log2(c / n);
    CHECK(hypercore::information_gain(h, t) == doctest::Approx(hj - hd));
  }
}

TEST_CASE("pearson correlation") {
  using hypercore::pearson;
  CHECK(pearson({1, 2, 3}, {2, 4, 6}) == doctest::Approx(1.0));
  CHECK(pearson({1, 2, 3}, {6, 4, 2}) == doctest::Approx(-1.0));
  // centered cross products 2.25 - 0.25 - 0.25 + 2.25 over variances 5 and 5
  CHECK(pearson({1, 2, 3, 4}, {1, 3, 2, 4}) == doctest::Approx(4.0 / 5.0));
  CHECK(std::isnan(pearson({1, 1, 1}, {1, 2, 3})));
  CHECK(std::isnan(pearson({1, 2, 3}, {5, 5, 5})));
  CHECK_THROWS(pearson({1}, {1}));
  CHECK_THROWS(pearson({1, 2}, {1, 2, 3}));
}

TEST_CASE("log-log fit recovers an exact inverse-square tail") {
  // survivor counts 3600/k^2 for k = 1..6
  std::vector<int> values;
  auto add = [&](int value, int count) {
    for (int i = 0; i < count; ++i) values.push_back(value);
  };
  add(1, 2700);
  add(2, 500);
  add(3, 175);
  add(4, 81);
  add(5, 44);
  add(6, 100);
  auto fit = hypercore::loglog_powerlaw_fit(values);
  CHECK(fit.slope == doctest::Approx(-2.0).epsilon(1e-9));
  CHECK(fit.intercept == doctest::Approx(std::log10(3600.0)).epsilon(1e-9));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS(hypercore::loglog_powerlaw_fit({}));
  CHECK_THROWS(hypercore::loglog_powerlaw_fit({1, 0, 2}));
  CHECK_THROWS(hypercore::loglog_powerlaw_fit({1, 1, 1}));
}
