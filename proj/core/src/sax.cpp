// Copyright 2026 the pmubop authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "pmubop/sax.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pmubop {

void validate(const SaxParams& params) {
  if (params.alpha < 2 || params.alpha > 26) {
    throw std::invalid_argument("alpha must be in [2, 26]");
  }
  if (params.window < 2) {
    throw std::invalid_argument("window must be >= 2");
  }
  if (params.gamma < 1 || params.gamma > params.window) {
    throw std::invalid_argument("gamma must be in [1, window]");
  }
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("normal_quantile: p must be in (0, 1)");
  }
  // Wichura, Algorithm AS 241, "The Percentage Points of the Normal
  // Distribution". Absolute error around 1e-15.
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                 6.7265770927008700853e4) * r +
                4.5921953931549871457e4) * r +
               1.3731693765509461125e4) * r +
              1.9715909503065514427e3) * r +
             1.3314166789178437745e2) * r +
            3.3871328727963666080e0) /
           (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                 3.9307895800092710610e4) * r +
                2.1213794301586595867e4) * r +
               5.3941960214247511077e3) * r +
              6.8718700749205790830e2) * r +
             4.2313330701600911252e1) * r +
            1.0);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r +
                 1.27045825245236838258e0) * r +
                3.64784832476320460504e0) * r +
               5.76949722146069140550e0) * r +
              4.63033784615654529590e0) * r +
             1.42343711074968357734e0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r +
                 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r +
               1.67638483018380384940e0) * r +
              2.05319162663775882187e0) * r +
             1.0);
  } else {
    r -= 5.0;
    value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r +
                 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r +
               1.78482653991729133580e0) * r +
              5.46378491116411436990e0) * r +
             6.65790464350110377720e0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r +
                 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r +
               1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r +
             1.0);
  }
  return std::copysign(value, q);
}

std::vector<double> breakpoints(int alpha) {
  if (alpha < 2 || alpha > 26) {
    throw std::invalid_argument("alpha must be in [2, 26]");
  }
  std::vector<double> cuts;
  cuts.reserve(alpha - 1);
  for (int i = 1; i < alpha; ++i) {
    cuts.push_back(normal_quantile(static_cast<double>(i) / alpha));
  }
  return cuts;
}

std::vector<double> znormalize(std::span<const double> window,
                               double flat_epsilon) {
  if (window.empty()) {
    throw std::invalid_argument("znormalize: window must not be empty");
  }
  if (!(flat_epsilon > 0.0)) {
    throw std::invalid_argument("znormalize: flat_epsilon must be > 0");
  }
  double sum = 0.0;
  for (double x : window) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("znormalize: non-finite sample");
    }
    sum += x;
  }
  const double mean = sum / static_cast<double>(window.size());
  double sq = 0.0;
  for (double x : window) {
    const double d = x - mean;
    sq += d * d;
  }
  const double stddev = std::sqrt(sq / static_cast<double>(window.size()));

  std::vector<double> out(window.size());
  if (stddev < flat_epsilon) {
    return out;  // flat window: all zeros
  }
  for (std::size_t i = 0; i < window.size(); ++i) {
    out[i] = (window[i] - mean) / stddev;
  }
  return out;
}

std::vector<double> paa(std::span<const double> window, int gamma) {
  const std::size_t m = window.size();
  if (gamma < 1 || static_cast<std::size_t>(gamma) > m) {
    throw std::invalid_argument("paa: gamma must be in [1, window length]");
  }
  if (static_cast<std::size_t>(gamma) == m) {
    return {window.begin(), window.end()};
  }
  // Equal-width segments of fractional length m / gamma; sample i covers
  // [i, i+1) and contributes to a segment in proportion to the overlap.
  const double seg = static_cast<double>(m) / gamma;
  std::vector<double> out(gamma);
  for (int s = 0; s < gamma; ++s) {
    const double lo = s * seg;
    const double hi = (s + 1) * seg;
    const auto first = static_cast<std::size_t>(lo);
    double acc = 0.0;
    for (std::size_t i = first; i < m && static_cast<double>(i) < hi; ++i) {
      const double overlap = std::min(hi, static_cast<double>(i) + 1.0) -
                             std::max(lo, static_cast<double>(i));
      acc += overlap * window[i];
    }
    out[s] = acc / seg;
  }
  return out;
}

SaxWord symbolize(std::span<const double> paa_values, int alpha) {
  const std::vector<double> cuts = breakpoints(alpha);
  SaxWord word;
  word.reserve(paa_values.size());
  for (double v : paa_values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("symbolize: non-finite value");
    }
    // Letter index = number of breakpoints <= v, so a value exactly at a
    // breakpoint takes the upper letter.
    const auto it = std::upper_bound(cuts.begin(), cuts.end(), v);
    word.push_back(static_cast<char>('a' + (it - cuts.begin())));
  }
  return word;
}

std::vector<SaxWord> sax_words(std::span<const double> series,
                               const SaxParams& params, double flat_epsilon) {
  validate(params);
  const std::size_t n = series.size();
  const auto omega = static_cast<std::size_t>(params.window);
  if (omega > n) {
    throw std::invalid_argument("sax_words: window exceeds series length");
  }
  const std::vector<double> cuts = breakpoints(params.alpha);
  std::vector<SaxWord> words;
  words.reserve(n - omega + 1);
  for (std::size_t start = 0; start + omega <= n; ++start) {
    const std::vector<double> z =
        znormalize(series.subspan(start, omega), flat_epsilon);
    const std::vector<double> means = paa(z, params.gamma);
    SaxWord word;
    word.reserve(means.size());
    for (double v : means) {
      const auto it = std::upper_bound(cuts.begin(), cuts.end(), v);
      word.push_back(static_cast<char>('a' + (it - cuts.begin())));
    }
    words.push_back(std::move(word));
  }
  return words;
}

}  // namespace pmubop
