#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypercore/analytics.hpp"
#include "hypercore/collapse.hpp"
#include "hypercore/core.hpp"
#include "hypercore/cover.hpp"
#include "hypercore/fraction.hpp"
#include "hypercore/hypergraph.hpp"
#include "hypercore/sir.hpp"
#include "hypercore/variants.hpp"

namespace {

using hypercore::Fraction;
using hypercore::Hypergraph;
using nlohmann::json;

constexpr int kExitOther = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadFraction = 3;
constexpr int kExitMissingFile = 4;

struct FractionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_real(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_avg(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

Fraction parse_t(const std::string& text) {
  bool converted = false;
  Fraction t;
  try {
    t = hypercore::parse_fraction(text, &converted);
  } catch (const std::exception& e) {
    throw FractionError(std::string("invalid fraction '") + text + "': " + e.what());
  }
  if (t.is_sentinel()) throw FractionError("fraction '" + text + "' is outside [0, 1]");
  if (converted)
    std::cerr << "warning: decimal value '" << text << "' converted to the exact rational "
              << t.str() << "\n";
  return t;
}

struct Options {
  std::string input;
  std::string input2;
  std::string out;
  std::string format = "csv";
  std::string t_text = "0";
  std::string method = "hycom_plus";
  std::string node;
  std::string means_path;
  int k = 1;
  int l = 2;
  int b = 1;
  int n_c = 1;
  int grid = 0;
  int factor = 2;
  int runs = 1000;
  int k_c = 0;
  int threads = 1;
  double gamma = 1.0;
  double sample_frac = 0.1;
  std::vector<double> betas;
  std::uint64_t seed = 0;
  bool no_dedup = false;
  bool keep_singletons = false;
  bool induced = false;
};

// Writes either to --out or to stdout; the run summary goes to whichever
// stream is not carrying data.
struct Output {
  std::ofstream file;
  bool to_file = false;

  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    to_file = true;
  }
  std::ostream& data() { return to_file ? file : std::cout; }
  std::ostream& summary() { return to_file ? std::cout : std::cerr; }
};

Hypergraph load_input(const std::string& path, const Options& opt) {
  if (!std::filesystem::exists(path)) throw MissingFileError("no such file: " + path);
  hypercore::LoadOptions lo;
  lo.dedup = !opt.no_dedup;
  lo.drop_singletons = !opt.keep_singletons;
  return Hypergraph::load(path, lo);
}

void write_edge_list(std::ostream& os, const Hypergraph& h) {
  for (int i = 0; i < h.num_edges(); ++i) {
    const auto& edge = h.edge(i);
    for (std::size_t j = 0; j < edge.size(); ++j) {
      if (j) os << ' ';
      os << h.label(edge[j]);
    }
    os << '\n';
  }
}

int run_stats(const Options& opt) {
  Hypergraph h = load_input(opt.input, opt);
  hypercore::HypergraphStats s = h.stats();
  long long small[4] = {0, 0, 0, 0};
  long long large = 0;
  for (int c = 2; c < static_cast<int>(s.edges_with_size.size()); ++c) {
    if (c <= 5)
      small[c - 2] = s.edges_with_size[c];
    else
      large += s.edges_with_size[c];
  }
  Output out(opt.out);
  if (opt.format == "json") {
    json j{{"nodes", s.num_nodes},
           {"edges", s.num_edges},
           {"max_degree", s.max_degree},
           {"avg_degree", fmt_avg(s.avg_degree)},
           {"max_edge_size", s.max_edge_size},
           {"avg_edge_size", fmt_avg(s.avg_edge_size)},
           {"total_size", s.total_size},
           {"edges_size_2", small[0]},
           {"edges_size_3", small[1]},
           {"edges_size_4", small[2]},
           {"edges_size_5", small[3]},
           {"edges_size_gt5", large}};
    out.data() << j.dump(2) << '\n';
  } else {
    out.data() << "stat,value\n"
               << "nodes," << s.num_nodes << "\n"
               << "edges," << s.num_edges << "\n"
               << "max_degree," << s.max_degree << "\n"
               << "avg_degree," << fmt_avg(s.avg_degree) << "\n"
               << "max_edge_size," << s.max_edge_size << "\n"
               << "avg_edge_size," << fmt_avg(s.avg_edge_size) << "\n"
               << "total_size," << s.total_size << "\n"
               << "edges_size_2," << small[0] << "\n"
               << "edges_size_3," << small[1] << "\n"
               << "edges_size_4," << small[2] << "\n"
               << "edges_size_5," << small[3] << "\n"
               << "edges_size_gt5," << large << "\n";
  }
  out.summary() << "stats: |V|=" << s.num_nodes << " |E|=" << s.num_edges
                << " max_d=" << s.max_degree << " max_e=" << s.max_edge_size << "\n";
  return 0;
}

int run_core(const Options& opt) {
  Fraction t = parse_t(opt.t_text);
  Hypergraph h = load_input(opt.input, opt);
  hypercore::CoreResult core = hypercore::kt_hypercore(h, opt.k, t);
  Output out(opt.out);
  if (opt.induced) {
    for (int i : core.edges) {
      std::vector<int> members = hypercore::induced_edge(h, core, i);
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (j) out.data() << ' ';
        out.data() << h.label(members[j]);
      }
      out.data() << '\n';
    }
  } else {
    json nodes = json::array();
    for (int v : core.nodes) nodes.push_back(h.label(v));
    json j{{"k", core.k}, {"t", core.t.str()}, {"nodes", nodes}, {"edges", core.edges}};
    out.data() << j.dump(2) << '\n';
  }
  out.summary() << "core: k=" << core.k << " t=" << t.str() << " nodes=" << core.nodes.size()
                << " edges=" << core.edges.size() << "\n";
  return 0;
}

int run_coreness(const Options& opt) {
  Fraction t = parse_t(opt.t_text);
  Hypergraph h = load_input(opt.input, opt);
  hypercore::CorenessResult res = hypercore::t_hypercoreness(h, t);
  Output out(opt.out);
  if (opt.format == "json") {
    json values = json::object();
    for (int v = 0; v < h.num_nodes(); ++v) values[h.label(v)] = res.coreness[v];
    json j{{"t", t.str()}, {"c_star", res.c_star}, {"coreness", values}};
    out.data() << j.dump(2) << '\n';
  } else {
    out.data() << "node,value\n";
    for (int v = 0; v < h.num_nodes(); ++v)
      out.data() << h.label(v) << ',' << res.coreness[v] << '\n';
  }
  out.summary() << "coreness: t=" << t.str() << " c*=" << res.c_star << "\n";
  return 0;
}

int run_fraction(const Options& opt) {
  Hypergraph h = load_input(opt.input, opt);
  hypercore::FractionResult res = hypercore::k_fraction(h, opt.k);
  Output out(opt.out);
  if (opt.format == "json") {
    json values = json::object();
    for (int v = 0; v < h.num_nodes(); ++v) values[h.label(v)] = res.fraction[v].str();
    json j{{"k", opt.k}, {"f_star", res.f_star.str()}, {"fraction", values}};
    out.data() << j.dump(2) << '\n';
  } else {
    out.data() << "node,value\n";
    for (int v = 0; v < h.num_nodes(); ++v)
      out.data() << h.label(v) << ',' << res.fraction[v].str() << '\n';
  }
  out.summary() << "fraction: k=" << opt.k << " f*=" << res.f_star.str() << "\n";
  return 0;
}

int run_landscape(const Options& opt) {
  Hypergraph h = load_input(opt.input, opt);
  int points = opt.grid > 0 ? opt.grid : 21;
  std::vector<Fraction> grid = hypercore::uniform_t_grid(points);
  hypercore::CoreSizeLandscape ls = hypercore::core_size_landscape(h, grid, opt.threads);
  Output out(opt.out);
  out.data() << "k,t,size,n_tilde\n";
  for (std::size_t ti = 0; ti < grid.size(); ++ti)
    for (int k = 1; k <= ls.c0_star; ++k)
      out.data() << k << ',' << grid[ti].str() << ',' << ls.sizes[ti][k - 1] << ','
                 << fmt_real(ls.n_tilde(static_cast<int>(ti), k)) << '\n';
  out.summary() << "landscape: c0*=" << ls.c0_star << " t_points=" << grid.size() << "\n";
  return 0;
}

int run_hsmd(const Options& opt) {
  Hypergraph h1 = load_input(opt.input, opt);
  Hypergraph h2 = load_input(opt.input2, opt);
  int res = opt.grid > 0 ? opt.grid : 101;
  double d = hypercore::hsmd(h1, h2, res, opt.threads);
  Output out(opt.out);
  out.data() << "metric,value\nhsmd," << fmt_real(d) << '\n';
  out.summary() << "hsmd: " << fmt_real(d) << " grid=" << res << "\n";
  return 0;
}

int run_rdmd(const Options& opt) {
  Hypergraph h1 = load_input(opt.input, opt);
  Hypergraph h2 = load_input(opt.input2, opt);
  int res = opt.grid > 0 ? opt.grid : 101;
  int used = 0;
  double d = hypercore::rdmd(h1, h2, res, &used);
  if (used < res)
    std::cerr << "warning: t grid truncated to " << used << "/" << res
              << " points with nonempty top cores\n";
  Output out(opt.out);
  out.data() << "metric,value\nrdmd," << fmt_real(d) << "\npoints_used," << used << '\n';
  out.summary() << "rdmd: " << fmt_real(d) << " grid=" << res << "\n";
  return 0;
}

int run_infogain(const Options& opt) {
  Fraction t = parse_t(opt.t_text);
  Hypergraph h = load_input(opt.input, opt);
  double g = hypercore::information_gain(h, t);
  Output out(opt.out);
  out.data() << "metric,value\ninformation_gain," << fmt_real(g) << '\n';
  out.summary() << "infogain: t=" << t.str() << " gain=" << fmt_real(g) << "\n";
  return 0;
}

int run_powerlaw(const Options& opt) {
  Fraction t = parse_t(opt.t_text);
  Hypergraph h = load_input(opt.input, opt);
  hypercore::CorenessResult res = hypercore::t_hypercoreness(h, t);
  hypercore::PowerLawFit fit = hypercore::loglog_powerlaw_fit(res.coreness);
  Output out(opt.out);
  out.data() << "slope,intercept,r_squared\n"
             << fmt_real(fit.slope) << ',' << fmt_real(fit.intercept) << ','
             << fmt_real(fit.r_squared) << '\n';
  out.summary() << "powerlaw-fit: t=" << t.str() << " slope=" << fmt_real(fit.slope)
                << " r2=" << fmt_real(fit.r_squared) << "\n";
  return 0;
}

void warn_beta(double beta) {
  if (2.0 * beta > 1.0)
    std::cerr << "warning: 2*beta exceeds 1; transmission factors are clamped at 0\n";
}

int run_sir(const Options& opt) {
  Hypergraph h = load_input(opt.input, opt);
  int node = h.node_id(opt.node);
  if (node < 0) throw std::runtime_error("node '" + opt.node + "' not in the hypergraph");
  hypercore::SirParams params;
  params.beta = opt.betas.empty() ? 0.05 : opt.betas.front();
  params.gamma = opt.gamma;
  params.runs = opt.runs;
  params.seed = opt.seed;
  warn_beta(params.beta);
  long long total = 0;
  for (int r = 0; r < opt.runs; ++r)
    total += hypercore::hyper_sir(h, node, params, static_cast<std::uint64_t>(r));
  double mean = static_cast<double>(total) / opt.runs;
  Output out(opt.out);
  out.data() << "node,mean_R,runs\n"
             << opt.node << ',' << fmt_real(mean) << ',' << opt.runs << '\n';
  out.summary() << "sir: node=" << opt.node << " beta=" << fmt_real(params.beta)
                << " gamma=" << fmt_real(params.gamma) << " mean_R=" << fmt_real(mean) << "\n";
  return 0;
}

int run_influence(const Options& opt) {
  Hypergraph h = load_input(opt.input, opt);
  hypercore::InfluenceConfig cfg;
  if (!opt.betas.empty()) cfg.betas = opt.betas;
  cfg.gamma = opt.gamma;
  cfg.runs = opt.runs;
  cfg.seed = opt.seed;
  cfg.sample_frac = opt.sample_frac;
  cfg.threads = opt.threads;
  for (double beta : cfg.betas) warn_beta(beta);

  int points = opt.grid > 0 ? opt.grid : 5;
  std::vector<Fraction> t_grid = hypercore::uniform_t_grid(points);
  std::vector<hypercore::NamedCentrality> cents = hypercore::standard_centralities(h, t_grid);
  hypercore::InfluenceReport report = hypercore::influence_experiment(h, cfg, cents);

  Output out(opt.out);
  out.data() << "centrality,param,pearson_r\n";
  for (const auto& e : report.entries)
    out.data() << e.centrality << ',' << fmt_real(e.beta) << ',' << fmt_real(e.pearson_r) << '\n';
  if (!opt.means_path.empty()) {
    std::ofstream means(opt.means_path, std::ios::binary);
    if (!means) throw std::runtime_error("cannot open output file '" + opt.means_path + "'");
    means << "node,mean_R,runs\n";
    for (std::size_t si = 0; si < report.sampled_nodes.size(); ++si)
      means << h.label(report.sampled_nodes[si]) << ',' << fmt_real(report.mean_r[0][si]) << ','
            << report.runs << '\n';
    std::cerr << "note: per-node means written for beta=" << fmt_real(cfg.betas[0]) << "\n";
  }
  out.summary() << "influence: sampled=" << report.sampled_nodes.size()
                << " betas=" << cfg.betas.size() << " centralities=" << cents.size()
                << " runs=" << cfg.runs << "\n";
  return 0;
}

int run_cover(const Options& opt) {
  Fraction t = parse_t(opt.t_text);
  Hypergraph h = load_input(opt.input, opt);
  std::vector<int> budgets;
  if (opt.k_c > 0) {
    budgets.push_back(std::min(opt.k_c, h.num_nodes()));
  } else {
    for (int kc = 10; kc <= 100; kc += 10) {
      if (kc > h.num_nodes()) break;
      budgets.push_back(kc);
    }
    if (budgets.empty()) budgets.push_back(h.num_nodes());
  }
  const hypercore::CoverMethod methods[] = {hypercore::CoverMethod::hypercoreness,
                                            hypercore::CoverMethod::degree,
                                            hypercore::CoverMethod::greedy};
  Output out(opt.out);
  out.data() << "k_c,method,covered,relative_to_degree\n";
  for (int kc : budgets) {
    long long by_degree = 0;
    long long counts[3] = {0, 0, 0};
    for (int mi = 0; mi < 3; ++mi) {
      std::vector<int> sel = hypercore::cover_select(h, kc, t, methods[mi]);
      counts[mi] = hypercore::covered_count(h, sel, t);
      if (methods[mi] == hypercore::CoverMethod::degree) by_degree = counts[mi];
    }
    for (int mi = 0; mi < 3; ++mi) {
      double rel = by_degree > 0 ? static_cast<double>(counts[mi]) / by_degree : 0.0;
      out.data() << kc << ',' << hypercore::cover_method_name(methods[mi]) << ',' << counts[mi]
                 << ',' << fmt_real(rel) << '\n';
    }
  }
  out.summary() << "cover: t_c=" << t.str() << " budgets=" << budgets.size() << "\n";
  return 0;
}

int run_collapse(const Options& opt) {
  Fraction t = parse_t(opt.t_text);
  Hypergraph h = load_input(opt.input, opt);
  hypercore::CollapseMethod method;
  if (opt.method == "hyperckc")
    method = hypercore::CollapseMethod::hyperckc;
  else if (opt.method == "hycom")
    method = hypercore::CollapseMethod::hycom;
  else if (opt.method == "hycom_plus")
    method = hypercore::CollapseMethod::hycom_plus;
  else
    throw std::runtime_error("unknown collapse method '" + opt.method + "'");

  hypercore::CollapseResult res = hypercore::collapse(h, opt.k, t, opt.b, method, opt.n_c);
  if (res.truncated)
    std::cerr << "warning: core emptied after " << res.rounds.size() << " of " << opt.b
              << " rounds\n";
  Output out(opt.out);
  out.data() << "round,collapser,reduction,ms\n";
  for (const auto& r : res.rounds)
    out.data() << r.round << ',' << h.label(r.collapser) << ',' << r.reduction << ','
               << fmt_real(r.ms) << '\n';
  out.summary() << "method,k,t,b,total_reduction,total_ms\n"
                << collapse_method_name(method) << ',' << opt.k << ',' << t.str() << ',' << opt.b
                << ',' << res.total_reduction << ',' << fmt_real(res.total_ms) << "\n";
  return 0;
}

int run_upscale(const Options& opt) {
  Hypergraph h = load_input(opt.input, opt);
  Hypergraph up = h.upscaled(opt.factor);
  Output out(opt.out);
  write_edge_list(out.data(), up);
  out.summary() << "upscale: factor=" << opt.factor << " edges=" << up.num_edges()
                << " total_size=" << up.total_size() << "\n";
  return 0;
}

int run_lcc(const Options& opt) {
  Hypergraph h = load_input(opt.input, opt);
  Hypergraph lcc = h.largest_connected_component();
  Output out(opt.out);
  write_edge_list(out.data(), lcc);
  out.summary() << "lcc: nodes=" << lcc.num_nodes() << " edges=" << lcc.num_edges() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(k,t)-hypercore decomposition toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool two_inputs = false) {
    sub->add_option("input", opt.input, "hyperedge list file")->required();
    if (two_inputs) sub->add_option("input2", opt.input2, "second hyperedge list file")->required();
    sub->add_option("--out", opt.out, "write data here instead of stdout")
        ->envname("HYPERCORE_OUT");
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->envname("HYPERCORE_FORMAT");
    sub->add_flag("--no-dedup", opt.no_dedup, "keep parallel hyperedges");
    sub->add_flag("--keep-singletons", opt.keep_singletons, "keep size-1 hyperedges");
  };
  auto add_k = [&](CLI::App* sub) {
    sub->add_option("--k", opt.k, "degree threshold")->envname("HYPERCORE_K");
  };
  auto add_t = [&](CLI::App* sub) {
    sub->add_option("--t", opt.t_text, "fraction threshold, p/q preferred")
        ->envname("HYPERCORE_T");
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", opt.threads, "worker threads")->envname("HYPERCORE_THREADS");
  };
  auto add_grid = [&](CLI::App* sub, const char* what) {
    sub->add_option("--grid", opt.grid, what)->envname("HYPERCORE_GRID");
  };
  auto add_seeded = [&](CLI::App* sub) {
    sub->add_option("--beta", opt.betas, "transmission rate (repeatable)")
        ->envname("HYPERCORE_BETA");
    sub->add_option("--gamma", opt.gamma, "recovery rate in (0,1]")->envname("HYPERCORE_GAMMA");
    sub->add_option("--runs", opt.runs, "Monte-Carlo runs")->envname("HYPERCORE_RUNS");
    sub->add_option("--seed", opt.seed, "global random seed")->envname("HYPERCORE_SEED");
  };

  CLI::App* stats = app.add_subcommand("stats", "basic hypergraph statistics");
  add_common(stats);

  CLI::App* core = app.add_subcommand("core", "extract one (k,t)-hypercore");
  add_common(core);
  add_k(core);
  add_t(core);
  core->add_flag("--induced", opt.induced, "emit the induced hyperedge list instead of JSON");

  CLI::App* coreness = app.add_subcommand("coreness", "per-node coreness at fixed t");
  add_common(coreness);
  add_t(coreness);

  CLI::App* fraction = app.add_subcommand("fraction", "per-node max fraction at fixed k");
  add_common(fraction);
  add_k(fraction);

  CLI::App* landscape = app.add_subcommand("landscape", "core sizes over a (k,t) grid");
  add_common(landscape);
  add_grid(landscape, "t grid points (default 21)");
  add_threads(landscape);

  CLI::App* hsmd = app.add_subcommand("hsmd", "landscape distance between two hypergraphs");
  add_common(hsmd, true);
  add_grid(hsmd, "quadrature resolution per axis (default 101)");
  add_threads(hsmd);

  CLI::App* rdmd = app.add_subcommand("rdmd", "density-profile distance between two hypergraphs");
  add_common(rdmd, true);
  add_grid(rdmd, "quadrature resolution (default 101)");

  CLI::App* infogain = app.add_subcommand("infogain", "coreness information gain over degree");
  add_common(infogain);
  add_t(infogain);

  CLI::App* powerlaw = app.add_subcommand("powerlaw-fit", "log-log fit of the coreness tail");
  add_common(powerlaw);
  add_t(powerlaw);

  CLI::App* sir = app.add_subcommand("sir", "mean epidemic spread from one seed node");
  add_common(sir);
  add_seeded(sir);
  sir->add_option("--node", opt.node, "seed node label")->required()->envname("HYPERCORE_NODE");

  CLI::App* influence = app.add_subcommand("influence", "centrality vs spread correlations");
  add_common(influence);
  add_seeded(influence);
  add_threads(influence);
  add_grid(influence, "t grid points for coreness centralities (default 5)");
  influence->add_option("--sample-frac", opt.sample_frac, "fraction of nodes used as seeds")
      ->envname("HYPERCORE_SAMPLE_FRAC");
  influence->add_option("--means", opt.means_path, "also write per-node means (first beta) here");

  CLI::App* cover = app.add_subcommand("cover", "budgeted node selection covering hyperedges");
  add_common(cover);
  add_t(cover);
  cover->add_option("--kc", opt.k_c, "single budget (default: sweep 10..100 by 10)")
      ->envname("HYPERCORE_KC");

  CLI::App* collapse = app.add_subcommand("collapse", "shrink the core by removing key nodes");
  add_common(collapse);
  add_k(collapse);
  add_t(collapse);
  collapse->add_option("--b", opt.b, "number of nodes to remove")->envname("HYPERCORE_B");
  collapse->add_option("--nc", opt.n_c, "candidates tried per round (-1 = all)")
      ->envname("HYPERCORE_NC");
  collapse->add_option("--method", opt.method, "hyperckc | hycom | hycom_plus")
      ->check(CLI::IsMember({"hyperckc", "hycom", "hycom_plus"}))
      ->envname("HYPERCORE_METHOD");

  CLI::App* upscale = app.add_subcommand("upscale", "duplicate every hyperedge factor times");
  add_common(upscale);
  upscale->add_option("--factor", opt.factor, "duplication factor")->envname("HYPERCORE_FACTOR");

  CLI::App* lcc = app.add_subcommand("lcc", "largest connected component");
  add_common(lcc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (stats->parsed()) return run_stats(opt);
    if (core->parsed()) return run_core(opt);
    if (coreness->parsed()) return run_coreness(opt);
    if (fraction->parsed()) return run_fraction(opt);
    if (landscape->parsed()) return run_landscape(opt);
    if (hsmd->parsed()) return run_hsmd(opt);
    if (rdmd->parsed()) return run_rdmd(opt);
    if (infogain->parsed()) return run_infogain(opt);
    if (powerlaw->parsed()) return run_powerlaw(opt);
    if (sir->parsed()) return run_sir(opt);
    if (influence->parsed()) return run_influence(opt);
    if (cover->parsed()) return run_cover(opt);
    if (collapse->parsed()) return run_collapse(opt);
    if (upscale->parsed()) return run_upscale(opt);
    if (lcc->parsed()) return run_lcc(opt);
  } catch (const FractionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFraction;
  } catch (const MissingFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMissingFile;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitUsage;
}
