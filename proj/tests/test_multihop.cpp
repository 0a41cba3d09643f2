#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "edlat/fbl/channel.hpp"
#include "edlat/fbl/stopping.hpp"
#include "edlat/multihop/latency.hpp"

using namespace edlat;

namespace {

StoppingProfile profile_for(std::size_t n, double snr_db = 5.0, double eps = 1e-12) {
  const auto ch = ChannelSpec::from_snr_db(snr_db);
  const double rate = achievable_rate(ch, n, eps);
  return stopping_profile(ch, CodeSpec::with_rate(n, rate, eps));
}

// Point mass near zero: eps drops immediately after t = 0.
StoppingProfile degenerate_profile() {
  StoppingProfile p;
  p.grid = {0.0, 1e-12, 1.0};
  p.eps_values = {1.0, 0.0, 0.0};
  p.mean_stop = 0.0;
  p.second_moment_stop = 0.0;
  p.residual_mass = 0.0;
  return p;
}

}  // namespace

TEST_CASE("single-hop and chain latencies") {
  CHECK(latency_sync(60) == 60.0);
  CHECK(latency_sync(1) == 1.0);
  CHECK(latency_sync(80) == 80.0);

  CHECK(latency_sync_df(80, 10) == 800.0);
  CHECK(latency_sync_df(200, 10) == 2000.0);
  CHECK(latency_sync_df(123, 1) == latency_sync(123));

  CHECK(latency_ed_df(80, 10, 0.139153) == Catch::Approx(180.19).epsilon(0.01));
  CHECK(latency_ed_df(80, 10, 1.0) == latency_sync_df(80, 10));
  CHECK(latency_ed_df(80, 10, 0.0) == 80.0);
}

TEST_CASE("continuous-transmission synchronous latency") {
  const auto spec = MultihopSpec::uniform(10);
  CHECK(latency_ctsd(80, 10, spec) == 1200.0);
  CHECK(latency_ctsd(100, 10, spec) == 1500.0);
  CHECK(latency_ctsd(80, 10, MultihopSpec::fixed_phase(10, 0.0)) == latency_sync_df(80, 10));
}

TEST_CASE("early-detection envelope and point model") {
  const auto spec = MultihopSpec::uniform(10);

  const auto [lower, upper] = cted_bounds(80, 10, spec, 0.139153);
  CHECK(lower == 400.0);
  CHECK(upper == Catch::Approx(580.19).epsilon(0.001));

  // Degenerate endpoints of the model.
  CHECK(cted_max_model(80, 10, spec, 0.0) == 400.0);             // envelope floor
  CHECK(cted_max_model(80, 10, spec, 1.0) == 800.0);             // chain latency
  const auto ctsd = latency_ctsd(80, 10, spec);
  CHECK(cted_max_model(80, 10, spec, 1.0) <= ctsd);

  // At full stopping time the envelope top collapses onto the synchronous
  // continuous-transmission latency.
  const auto [lo_full, up_full] = cted_bounds(80, 10, spec, 1.0);
  CHECK(up_full == ctsd);
  CHECK(lo_full == 400.0);

  // Single hop.
  const auto [lo1, up1] = cted_bounds(80, 1, spec, 0.25);
  CHECK(lo1 == 40.0);
  CHECK(up1 == 120.0);

  CHECK_THROWS_AS(cted_max_model(80, 10, MultihopSpec::fixed_phase(10, 0.4), 0.1),
                  UnsupportedModelError);
}

TEST_CASE("latency-bound orderings hold across a parameter lattice") {
  for (double snr : {0.0, 5.0, 10.0}) {
    for (double eps : {1e-3, 1e-6, 1e-12}) {
      for (std::size_t n : {256u, 1000u, 5000u}) {
        const auto ch = ChannelSpec::from_snr_db(snr);
        const double rate = achievable_rate(ch, n, eps);
        REQUIRE(rate > 0.0);
        const auto profile = stopping_profile(ch, CodeSpec::with_rate(n, rate, eps));
        for (std::size_t hops : {1u, 4u, 10u}) {
          const auto report = make_latency_report(n, MultihopSpec::uniform(hops), profile);
          CHECK(report.l_ed_df_mean <= report.l_sd_df);
          CHECK(report.l_cted_lower <= report.l_cted_model);
          CHECK(report.l_cted_model <= report.l_cted_upper);
          CHECK(report.l_cted_upper <= report.l_ctsd);
        }
      }
    }
  }
}

TEST_CASE("latencies scale linearly in blocklength") {
  const auto spec = MultihopSpec::uniform(6);
  for (std::size_t n : {50u, 100u, 400u}) {
    CHECK(latency_sync_df(n, 6) == 6.0 * n);
    CHECK(latency_ed_df(n, 6, 0.2) == n * (1.0 + 5.0 * 0.2));
    CHECK(latency_ctsd(n, 6, spec) == 1.5 * 6.0 * n);
    CHECK(cted_max_model(n, 6, spec, 0.3) == 6.0 * n * 0.65);
  }
}

TEST_CASE("reduction percentages") {
  CHECK(reduction_percent(100.0, 100.0) == 0.0);
  CHECK(reduction_percent(1200.739, 418.065) == Catch::Approx(65.18).margin(0.005));
  // Envelope floor with mean phase one half: exactly 100*(1 - 0.5/1.5).
  const auto spec = MultihopSpec::uniform(10);
  const auto [lower, upper] = cted_bounds(80, 10, spec, 0.2);
  (void)upper;
  CHECK(reduction_percent(latency_ctsd(80, 10, spec), lower) ==
        Catch::Approx(200.0 / 3.0).margin(1e-9));
  CHECK_THROWS_AS(reduction_percent(0.0, 1.0), std::domain_error);

  // The floor's reduction is independent of blocklength and hop count.
  for (std::size_t n : {60u, 500u}) {
    for (std::size_t h : {2u, 8u}) {
      const auto [lo, up] = cted_bounds(n, h, spec, 0.7);
      (void)up;
      CHECK(reduction_percent(latency_ctsd(n, h, MultihopSpec::uniform(h)), lo) ==
            Catch::Approx(200.0 / 3.0).margin(1e-9));
    }
  }
}

TEST_CASE("stop-fraction sampling follows the profile") {
  const auto ch = ChannelSpec::from_snr_db(5.0);
  const double rate = achievable_rate(ch, 80, 1e-12);
  const auto code = CodeSpec::with_rate(80, rate, 1e-12);
  const auto profile = stopping_profile(ch, code);

  // Inverse-transform property: the profile value at the sampled time
  // recovers 1-u up to grid interpolation error.
  RngStream rng(2718, 0);
  for (int i = 0; i < 500; ++i) {
    const double u = rng.uniform01();
    const double t = sample_stop_fraction(profile, u);
    REQUIRE(t >= 0.0);
    REQUIRE(t <= 1.0);
    if (1.0 - u > profile.residual_mass) {
      CHECK(bler_at(ch, code, t) == Catch::Approx(1.0 - u).margin(2e-3));
    } else {
      CHECK(t == 1.0);  // forced-decision mass maps to the symbol end
    }
  }
}

TEST_CASE("monte carlo agrees with the analytic point model") {
  const auto profile = profile_for(80);
  const auto spec = MultihopSpec::uniform(10);
  const auto analytic = cted_max_model(80, 10, spec, profile.second_moment_stop);

  const auto mc = cted_monte_carlo(80, 10, profile, 20000, 7);
  CHECK(std::abs(mc.mean - analytic) <= 3.0 * mc.std_error);

  const auto [lower, upper] = cted_bounds(80, 10, spec, profile.mean_stop);
  CHECK(mc.mean >= lower - 3.0 * mc.std_error);
  CHECK(mc.mean <= upper + 3.0 * mc.std_error);

  // Deterministic given the seed.
  const auto mc2 = cted_monte_carlo(80, 10, profile, 20000, 7);
  CHECK(mc.mean == mc2.mean);
  CHECK(mc.std_error == mc2.std_error);

  // Error shrinks like one over sqrt(trials).
  const auto mc4 = cted_monte_carlo(80, 10, profile, 80000, 7);
  CHECK(mc4.std_error == Catch::Approx(mc.std_error / 2.0).epsilon(0.25));

  CHECK_THROWS_AS(cted_monte_carlo(80, 10, profile, 100, 7), std::domain_error);
}

TEST_CASE("degenerate stopping profile reduces to the phase mean") {
  const auto profile = degenerate_profile();
  const auto mc = cted_monte_carlo(80, 10, profile, 20000, 3);
  CHECK(std::abs(mc.mean - 10.0 * 80.0 * 0.5) <= 3.0 * mc.std_error);
}
