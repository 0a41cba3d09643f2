#pragma once

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "edlat/errors.hpp"

namespace edlat {

/// Experiment configuration shared by every CLI subcommand.
///
/// Defaults: snr_db 5, eps 1e-12, hops 10, mean_phi 0.5, trials 100000,
/// steps 200, seed 42, CSV to stdout, and a 16-point blocklength grid.
struct ExperimentConfig {
  std::vector<double> snr_db_list{5.0};
  std::vector<double> eps_list{1e-12};
  std::vector<std::size_t> n_grid{60,   70,   80,   100,   120,   200,   500,   700,
                                  1000, 1500, 2000, 5000,  7000,  10000, 20000, 30000};
  std::size_t hops = 10;
  double mean_phase = 0.5;
  std::uint64_t trials = 100000;
  std::size_t steps = 200;
  std::uint64_t seed = 42;
  std::string output_path;  // empty writes to stdout
  std::string format = "csv";
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

template <typename T>
T parse_number(std::string_view token, const std::string& where) {
  token = trim(token);
  T value{};
  const auto* end = token.data() + token.size();
  const auto res = std::from_chars(token.data(), end, value);
  if (res.ec != std::errc{} || res.ptr != end || token.empty()) {
    throw ConfigError(where + ": cannot parse number '" + std::string(token) + "'");
  }
  return value;
}

// from_chars for double is missing in some libstdc++ builds; go through strtod.
template <>
inline double parse_number<double>(std::string_view token, const std::string& where) {
  const std::string text{trim(token)};
  if (text.empty()) throw ConfigError(where + ": empty number");
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) {
    throw ConfigError(where + ": cannot parse number '" + text + "'");
  }
  return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view text, const std::string& where) {
  std::vector<T> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                          : comma - start);
    values.push_back(parse_number<T>(piece, where));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.empty()) throw ConfigError(where + ": list must be non-empty");
  return values;
}

}  // namespace detail

/// Applies one `key = value` setting; `where` prefixes error messages
/// (typically "path:line").
inline void apply_config_value(ExperimentConfig& cfg, std::string_view key, std::string_view value,
                               const std::string& where) {
  using detail::parse_list;
  using detail::parse_number;
  if (key == "snr_db") {
    cfg.snr_db_list = parse_list<double>(value, where);
  } else if (key == "eps") {
    cfg.eps_list = parse_list<double>(value, where);
    for (double e : cfg.eps_list) {
      if (!(e > 0.0 && e < 1.0)) throw ConfigError(where + ": eps values must lie in (0,1)");
    }
  } else if (key == "n_grid") {
    const auto raw = parse_list<long long>(value, where);
    cfg.n_grid.clear();
    for (long long n : raw) {
      if (n < 1) throw ConfigError(where + ": n_grid entries must be >= 1");
      if (!cfg.n_grid.empty() && static_cast<std::size_t>(n) <= cfg.n_grid.back()) {
        throw ConfigError(where + ": n_grid must be strictly ascending");
      }
      cfg.n_grid.push_back(static_cast<std::size_t>(n));
    }
  } else if (key == "hops") {
    const auto h = parse_number<long long>(value, where);
    if (h < 1) throw ConfigError(where + ": hops must be >= 1");
    cfg.hops = static_cast<std::size_t>(h);
  } else if (key == "mean_phi") {
    const double phi = parse_number<double>(value, where);
    if (!(phi >= 0.0 && phi <= 1.0)) throw ConfigError(where + ": mean_phi must lie in [0,1]");
    cfg.mean_phase = phi;
  } else if (key == "trials") {
    const auto t = parse_number<long long>(value, where);
    if (t < 1) throw ConfigError(where + ": trials must be >= 1");
    cfg.trials = static_cast<std::uint64_t>(t);
  } else if (key == "steps") {
    const auto s = parse_number<long long>(value, where);
    if (s < 10) throw ConfigError(where + ": steps must be >= 10");
    cfg.steps = static_cast<std::size_t>(s);
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(value, where);
  } else if (key == "out") {
    cfg.output_path = std::string(detail::trim(value));
  } else if (key == "format") {
    const std::string fmt{detail::trim(value)};
    if (fmt != "csv" && fmt != "json") {
      throw ConfigError(where + ": format must be 'csv' or 'json'");
    }
    cfg.format = fmt;
  } else {
    throw ConfigError(where + ": unknown key '" + std::string(key) + "'");
  }
}

/// Parses a flat `key = value` file with '#' comments. Unknown keys and
/// out-of-range values are rejected with the offending line number.
inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view{line};
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = detail::trim(view);
    if (view.empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(where + ": expected 'key = value'");
    }
    const auto key = detail::trim(view.substr(0, eq));
    const auto value = detail::trim(view.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + ": empty key");
    apply_config_value(cfg, key, value, where);
  }
  return cfg;
}

}  // namespace edlat
