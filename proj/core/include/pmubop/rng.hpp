// Copyright 2026 the pmubop authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace pmubop {

/// Derives an independent stream seed from a base seed and a stream id
/// (SplitMix64 finalizer). Used so that e.g. each record and each channel
/// gets its own reproducible substream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Deterministic random source. std::mt19937_64's output sequence is pinned
/// by the standard, and the bit-to-double mappings here are explicit, so the
/// same seed yields the same values on every platform. The std <random>
/// distributions are implementation-defined and deliberately not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal (Box-Muller, pair cached).
  double gaussian();

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace pmubop
