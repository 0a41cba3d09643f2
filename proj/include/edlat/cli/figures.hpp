#pragma once

#include <cmath>
#include <cstddef>
#include <iostream>
#include <string>
#include <string_view>

#include "edlat/cli/config.hpp"
#include "edlat/cli/table.hpp"
#include "edlat/detect/campaign.hpp"
#include "edlat/errors.hpp"
#include "edlat/fbl/channel.hpp"
#include "edlat/fbl/stopping.hpp"
#include "edlat/multihop/latency.hpp"

namespace edlat {

enum class FigureId { fig1, fig3, fig4, fig5 };

inline FigureId parse_figure_id(std::string_view name) {
  if (name == "fig1") return FigureId::fig1;
  if (name == "fig3") return FigureId::fig3;
  if (name == "fig4") return FigureId::fig4;
  if (name == "fig5") return FigureId::fig5;
  throw ConfigError("unknown figure id: " + std::string(name));
}

namespace detail {

inline bool profile_feasible(std::size_t n, double rate) {
  return rate > 0.5 * std::log2(static_cast<double>(n)) / static_cast<double>(n);
}

inline void note_skipped(double snr_db, double eps, std::size_t n) {
  std::cerr << "note: skipping infeasible point (snr_db=" << snr_db << ", eps=" << eps
            << ", n=" << n << "): no positive effective rate\n";
}

}  // namespace detail

/// Regenerates one figure dataset. All outputs are deterministic functions of
/// the configuration; infeasible blocklengths are skipped with a note on the
/// diagnostic stream.
inline OutputTable run_figure(FigureId id, const ExperimentConfig& cfg) {
  OutputTable table;
  const MultihopSpec spec{cfg.hops, cfg.mean_phase, PhaseModel::uniform01};

  switch (id) {
    case FigureId::fig1: {
      table.header = {"n", "rate", "rate_over_capacity", "latency_sd", "latency_ed"};
      const double snr = cfg.snr_db_list.front();
      const double eps = cfg.eps_list.front();
      const auto channel = ChannelSpec::from_snr_db(snr);
      const double c = capacity(channel);
      for (std::size_t n : cfg.n_grid) {
        const double rate = achievable_rate(channel, n, eps);
        if (!detail::profile_feasible(n, rate)) {
          detail::note_skipped(snr, eps, n);
          continue;
        }
        const auto profile = stopping_profile(channel, CodeSpec::with_rate(n, rate, eps));
        table.rows.push_back({static_cast<double>(n), rate, rate / c, latency_sync(n),
                              static_cast<double>(n) * profile.mean_stop});
      }
      return table;
    }

    case FigureId::fig3: {
      table.header = {"k_bits",     "n",          "sd_df",      "ed_df",
                      "ctsd",       "cted_lower", "cted_upper", "cted_model"};
      const double snr = cfg.snr_db_list.front();
      const double eps = cfg.eps_list.front();
      const auto channel = ChannelSpec::from_snr_db(snr);
      for (std::size_t n : cfg.n_grid) {
        const double rate = achievable_rate(channel, n, eps);
        if (!detail::profile_feasible(n, rate)) {
          detail::note_skipped(snr, eps, n);
          continue;
        }
        const auto profile = stopping_profile(channel, CodeSpec::with_rate(n, rate, eps));
        const auto report = make_latency_report(n, spec, profile);
        table.rows.push_back({rate * static_cast<double>(n), static_cast<double>(n),
                              report.l_sd_df, report.l_ed_df_mean, report.l_ctsd,
                              report.l_cted_lower, report.l_cted_upper, report.l_cted_model});
      }
      return table;
    }

    case FigureId::fig4: {
      table.header = {"eps", "k_bits", "reduction_lower_pct", "reduction_model_pct",
                      "reduction_upper_pct"};
      const double snr = cfg.snr_db_list.front();
      const auto channel = ChannelSpec::from_snr_db(snr);
      for (double eps : cfg.eps_list) {
        for (std::size_t n : cfg.n_grid) {
          const double rate = achievable_rate(channel, n, eps);
          if (!detail::profile_feasible(n, rate)) {
            detail::note_skipped(snr, eps, n);
            continue;
          }
          const auto profile = stopping_profile(channel, CodeSpec::with_rate(n, rate, eps));
          const auto report = make_latency_report(n, spec, profile);
          table.rows.push_back({eps, rate * static_cast<double>(n), report.reduction_lower_pct,
                                report.reduction_model_pct, report.reduction_upper_pct});
        }
      }
      return table;
    }

    case FigureId::fig5: {
      table.header = {"snr_db", "rate_over_capacity", "reduction_lower_pct",
                      "reduction_model_pct", "reduction_upper_pct"};
      const double eps = cfg.eps_list.front();
      for (double snr : cfg.snr_db_list) {
        const auto channel = ChannelSpec::from_snr_db(snr);
        const double c = capacity(channel);
        for (std::size_t n : cfg.n_grid) {
          const double rate = achievable_rate(channel, n, eps);
          if (!detail::profile_feasible(n, rate)) {
            detail::note_skipped(snr, eps, n);
            continue;
          }
          const auto profile = stopping_profile(channel, CodeSpec::with_rate(n, rate, eps));
          const auto report = make_latency_report(n, spec, profile);
          table.rows.push_back({snr, rate / c, report.reduction_lower_pct,
                                report.reduction_model_pct, report.reduction_upper_pct});
        }
      }
      return table;
    }
  }
  throw std::logic_error("run_figure: unreachable");
}

/// Runs one detector campaign and tabulates the summary next to the stop-time
/// histogram: every row repeats the campaign summary and carries one
/// histogram bin (lower edge, count).
inline OutputTable run_simulation(const ExperimentConfig& cfg, std::size_t M, std::size_t n) {
  const double snr = cfg.snr_db_list.front();
  const auto channel = ChannelSpec::from_snr_db(snr);
  const Codebook cb = build_codebook(M, n, channel.gamma);
  const ThresholdSet th = thresholds_union_budget(cb);
  const CampaignStats stats = run_campaign(cb, th, cfg.trials, cfg.steps, cfg.seed);

  OutputTable table;
  table.header = {"M",
                  "n",
                  "snr_db",
                  "trials",
                  "empirical_bler",
                  "mean_stop_fraction",
                  "early_stop_share",
                  "hist_bin_low",
                  "hist_count"};
  for (std::size_t b = 0; b < kStopHistogramBins; ++b) {
    table.rows.push_back({static_cast<double>(M), static_cast<double>(n), snr,
                          static_cast<double>(stats.trials), stats.empirical_bler,
                          stats.mean_stop_fraction, stats.early_stop_share,
                          static_cast<double>(b) / kStopHistogramBins,
                          static_cast<double>(stats.stop_histogram[b])});
  }
  return table;
}

}  // namespace edlat
