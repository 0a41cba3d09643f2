#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace edlat {

/// Identifies one reproducible random stream: the same (seed, stream_id)
/// always replays the same sample sequence, independent of thread layout.
struct RngStreamSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

/// Counter-based generator (Philox 2x64-10, Salmon et al. SC'11).
///
/// The key is the seed and the counter's high word is the stream id, so
/// distinct streams walk provably disjoint counter blocks.
class RngStream {
 public:
  explicit RngStream(RngStreamSpec spec) : key0_(spec.seed), ctr_hi_(spec.stream_id) {}
  RngStream(std::uint64_t seed, std::uint64_t stream_id) : RngStream(RngStreamSpec{seed, stream_id}) {}

  std::uint64_t next_u64() {
    if (buf_pos_ >= 2) {
      fill_block();
      buf_pos_ = 0;
    }
    return buf_[buf_pos_++];
  }

  /// Uniform double on the open interval (0, 1).
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound) via multiply-shift range reduction.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const unsigned __int128 wide = static_cast<unsigned __int128>(next_u64()) * bound;
    return static_cast<std::uint64_t>(wide >> 64);
  }

  /// Standard normal sample (Box-Muller, pairs cached within the stream).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  static constexpr std::uint64_t kMultiplier = 0xD2B74407B1CE6E93ULL;
  static constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ULL;

  void fill_block() {
    std::uint64_t x0 = ctr_lo_;
    std::uint64_t x1 = ctr_hi_;
    std::uint64_t key = key0_;
    for (int round = 0; round < 10; ++round) {
      const unsigned __int128 product = static_cast<unsigned __int128>(x0) * kMultiplier;
      const std::uint64_t hi = static_cast<std::uint64_t>(product >> 64);
      const std::uint64_t lo = static_cast<std::uint64_t>(product);
      x0 = hi ^ key ^ x1;
      x1 = lo;
      key += kWeyl;
    }
    buf_[0] = x0;
    buf_[1] = x1;
    ++ctr_lo_;
  }

  std::uint64_t key0_;
  std::uint64_t ctr_hi_;
  std::uint64_t ctr_lo_ = 0;
  std::uint64_t buf_[2] = {0, 0};
  int buf_pos_ = 2;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace edlat
