// Command-line front end: regenerates the figure datasets, runs detector
// campaigns, and prints one-point finite-blocklength summaries.

#include <CLI11.hpp>
#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "edlat/edlat.hpp"

namespace {

struct CliOverrides {
  std::vector<double> snr_db;
  std::vector<double> eps;
  std::vector<std::uint64_t> n_grid;
  std::uint64_t hops = 0;
  double mean_phi = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
};

void apply_overrides(const CLI::App& app, const CliOverrides& ov, edlat::ExperimentConfig& cfg) {
  const auto passed = [&](const std::string& name) { return app.count(name) > 0; };
  if (passed("--snr-db")) cfg.snr_db_list = ov.snr_db;
  if (passed("--eps")) {
    for (double e : ov.eps) {
      if (!(e > 0.0 && e < 1.0)) throw edlat::ConfigError("--eps values must lie in (0,1)");
    }
    cfg.eps_list = ov.eps;
  }
  if (passed("--n-grid")) {
    cfg.n_grid.clear();
    for (auto n : ov.n_grid) {
      if (n < 1) throw edlat::ConfigError("--n-grid entries must be >= 1");
      if (!cfg.n_grid.empty() && n <= cfg.n_grid.back()) {
        throw edlat::ConfigError("--n-grid must be strictly ascending");
      }
      cfg.n_grid.push_back(static_cast<std::size_t>(n));
    }
  }
  if (passed("--hops")) {
    if (ov.hops < 1) throw edlat::ConfigError("--hops must be >= 1");
    cfg.hops = static_cast<std::size_t>(ov.hops);
  }
  if (passed("--mean-phi")) {
    if (!(ov.mean_phi >= 0.0 && ov.mean_phi <= 1.0)) {
      throw edlat::ConfigError("--mean-phi must lie in [0,1]");
    }
    cfg.mean_phase = ov.mean_phi;
  }
  if (passed("--trials")) {
    if (ov.trials < 1) throw edlat::ConfigError("--trials must be >= 1");
    cfg.trials = ov.trials;
  }
  if (passed("--steps")) {
    if (ov.steps < 10) throw edlat::ConfigError("--steps must be >= 10");
    cfg.steps = static_cast<std::size_t>(ov.steps);
  }
  if (passed("--seed")) cfg.seed = ov.seed;
  if (passed("--out")) cfg.output_path = ov.out;
  if (passed("--format")) {
    if (ov.format != "csv" && ov.format != "json") {
      throw edlat::ConfigError("--format must be 'csv' or 'json'");
    }
    cfg.format = ov.format;
  }
}

edlat::OutputTable bounds_table(const edlat::ExperimentConfig& cfg, std::size_t n, double k_bits) {
  const double snr = cfg.snr_db_list.front();
  const double eps = cfg.eps_list.front();
  const auto channel = edlat::ChannelSpec::from_snr_db(snr);
  const double c = edlat::capacity(channel);
  const double v = edlat::dispersion(channel);
  const double rate = edlat::achievable_rate(channel, n, eps);
  const double k = k_bits > 0.0 ? k_bits : rate * static_cast<double>(n);
  edlat::OutputTable table;
  table.header = {"snr_db", "eps",  "n",      "capacity",           "dispersion",
                  "rate",   "rate_over_capacity", "k_bits", "n_min"};
  table.rows.push_back({snr, eps, static_cast<double>(n), c, v, rate, rate / c, k,
                        static_cast<double>(edlat::min_blocklength(channel, eps, k))});
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-blocklength early-detection latency toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "flat 'key = value' configuration file");

  CliOverrides ov;
  app.add_option("--snr-db", ov.snr_db, "SNR link budgets in dB")->delimiter(',');
  app.add_option("--eps", ov.eps, "target block-error rates")->delimiter(',');
  app.add_option("--n-grid", ov.n_grid, "ascending blocklength grid")->delimiter(',');
  app.add_option("--hops", ov.hops, "relay hop count");
  app.add_option("--mean-phi", ov.mean_phi, "mean per-hop phase offset in [0,1]");
  app.add_option("--trials", ov.trials, "Monte Carlo trial count");
  app.add_option("--steps", ov.steps, "observation steps per symbol");
  app.add_option("--seed", ov.seed, "campaign seed");
  app.add_option("--out", ov.out, "output file path (default: stdout)");
  app.add_option("--format", ov.format, "output format: csv or json");

  auto* fig1 = app.add_subcommand("fig1", "one-hop latency vs normalized rate dataset");
  auto* fig3 = app.add_subcommand("fig3", "multi-hop latency vs information blocksize dataset");
  auto* fig4 = app.add_subcommand("fig4", "latency reduction vs blocksize per target BLER");
  auto* fig5 = app.add_subcommand("fig5", "latency reduction vs normalized rate per SNR");

  auto* simulate = app.add_subcommand("simulate", "run a sequential-detector campaign");
  std::uint64_t sim_messages = 0;
  std::uint64_t sim_blocklength = 0;
  simulate->add_option("-M,--messages", sim_messages, "codebook message count")->required();
  simulate->add_option("-n,--blocklength", sim_blocklength, "codebook blocklength (power of two)")
      ->required();

  auto* bounds = app.add_subcommand("bounds", "print one-point rate/blocklength summary");
  std::uint64_t bounds_n = 0;
  double bounds_k = 0.0;
  bounds->add_option("-n,--blocklength", bounds_n, "blocklength (default: first grid entry)");
  bounds->add_option("--k-bits", bounds_k, "information bits (default: n * achievable rate)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    edlat::ExperimentConfig cfg;
    if (!config_path.empty()) cfg = edlat::load_config(config_path);
    apply_overrides(app, ov, cfg);

    edlat::OutputTable table;
    if (fig1->parsed()) {
      table = edlat::run_figure(edlat::FigureId::fig1, cfg);
    } else if (fig3->parsed()) {
      table = edlat::run_figure(edlat::FigureId::fig3, cfg);
    } else if (fig4->parsed()) {
      table = edlat::run_figure(edlat::FigureId::fig4, cfg);
    } else if (fig5->parsed()) {
      table = edlat::run_figure(edlat::FigureId::fig5, cfg);
    } else if (simulate->parsed()) {
      table = edlat::run_simulation(cfg, static_cast<std::size_t>(sim_messages),
                                    static_cast<std::size_t>(sim_blocklength));
    } else if (bounds->parsed()) {
      const std::size_t n =
          bounds_n > 0 ? static_cast<std::size_t>(bounds_n) : cfg.n_grid.front();
      table = bounds_table(cfg, n, bounds_k);
    }
    edlat::write_table(table, cfg.output_path, cfg.format);
    return 0;
  } catch (const edlat::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
