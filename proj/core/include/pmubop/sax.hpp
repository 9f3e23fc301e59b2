// Copyright 2026 the pmubop authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <span>
#include <string>
#include <vector>

namespace pmubop {

/// Windows whose population standard deviation falls below this threshold
/// are treated as flat and normalize to all zeros.
inline constexpr double kFlatEpsilon = 1e-8;

/// Symbolization parameters: alphabet size, word size, sliding-window length.
struct SaxParams {
  int alpha = 4;
  int gamma = 4;
  int window = 25;

  bool operator==(const SaxParams&) const = default;
};

/// A word of exactly `gamma` letters drawn from the first `alpha` lowercase
/// letters ('a' is the lowest value band).
using SaxWord = std::string;

/// Throws std::invalid_argument unless 2 <= alpha <= 26, 1 <= gamma <= window,
/// and window >= 2.
void validate(const SaxParams& params);

/// Standard normal quantile (inverse CDF) for p in (0, 1).
/// Wichura's algorithm AS 241; absolute error is far below the 1e-6 needed
/// for large-alphabet breakpoint tables.
double normal_quantile(double p);

/// Breakpoints b_1 < ... < b_{alpha-1} splitting the standard normal into
/// `alpha` equal-probability bands: b_i = quantile(i / alpha).
std::vector<double> breakpoints(int alpha);

/// Shifts/scales the window to zero mean and unit population standard
/// deviation. A window with population std below flat_epsilon maps to all
/// zeros instead of dividing by (near) zero. Throws on non-finite samples.
std::vector<double> znormalize(std::span<const double> window,
                               double flat_epsilon = kFlatEpsilon);

/// Piecewise aggregate approximation: `gamma` equal-width segment means.
/// Segments have fractional width window_size / gamma; a sample straddling a
/// segment boundary contributes to both sides proportionally, so the mean of
/// the outputs always equals the mean of the input.
std::vector<double> paa(std::span<const double> window, int gamma);

/// Maps each value to its breakpoint band: value v gets letter j when
/// b_j <= v < b_{j+1} (b_0 = -inf). A value exactly at a breakpoint takes the
/// upper letter, which makes the all-zero flat window deterministic for even
/// alphabet sizes.
SaxWord symbolize(std::span<const double> paa_values, int alpha);

/// Full symbolization: one word per sliding-window position, n - window + 1
/// in total, each via znormalize -> paa -> symbolize. Consecutive duplicate
/// words are all kept.
std::vector<SaxWord> sax_words(std::span<const double> series,
                               const SaxParams& params,
                               double flat_epsilon = kFlatEpsilon);

}  // namespace pmubop
