#pragma once

#include <cstdint>
#include <random>

namespace tailspace {

/// Seeded RNG with hand-rolled value mappings.  std::uniform_*_distribution
/// is not bit-reproducible across standard libraries; the raw mt19937_64
/// stream is, so every mapping here is defined on top of next().
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).  Rejection-free modulo is fine here: n is
  /// tiny relative to 2^64 in every call site, and determinism is what
  /// matters, not equidistribution at the 2^-40 level.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  int uniform_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1u) != 0; }

  /// Derives an independent stream; used to parallelize seeded searches
  /// without coupling trial order to thread count.
  Rng fork(std::uint64_t stream) {
    return Rng(next() ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace tailspace
