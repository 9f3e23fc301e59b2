// Copyright 2026 the pmubop authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pmubop/sax.hpp"
#include "pmubop/types.hpp"

namespace pmubop {

/// Sparse word-frequency vector; words not present count zero. std::map keeps
/// lexicographic word order, which is the canonical row order.
using WordCounts = std::map<SaxWord, std::uint32_t>;

/// Word-frequency matrix for one group of channels: conceptually alpha^gamma
/// rows by channel_count columns, stored sparsely (only rows with at least
/// one nonzero count). Every column sums to n - window + 1.
struct BopMatrix {
  SaxParams params;
  std::size_t channel_count = 0;
  std::map<SaxWord, std::vector<std::uint32_t>> rows;
};

/// TF-DF weighted counterpart of a BopMatrix. Zero exactly where the count
/// is zero; weights are finite and non-negative.
struct WeightMatrix {
  SaxParams params;
  std::size_t channel_count = 0;
  std::map<SaxWord, std::vector<double>> rows;
};

/// Sparse feature vector of conceptual length 2 * alpha^gamma, laid out
/// [current block | voltage block]. Keys are "i:<word>" / "v:<word>".
struct FeatureVector {
  std::size_t dim = 0;
  std::map<std::string, double> values;

  bool operator==(const FeatureVector&) const = default;
};

/// Conceptual feature length 2 * alpha^gamma. Throws std::overflow_error when
/// it does not fit in std::size_t.
std::size_t feature_dim(const SaxParams& params);

/// Word-frequency vector of a word list. Every word must match params.
WordCounts bow(const std::vector<SaxWord>& words, const SaxParams& params);

/// One BOW column per channel. Channels must be non-empty and equal-length.
BopMatrix bop_matrix(const std::vector<TimeSeries>& channels,
                     const SaxParams& params,
                     double flat_epsilon = kFlatEpsilon);

/// Term frequency: 0 for count 0, else 1 + log10(count).
double tf(std::uint64_t count);

/// Scaled document frequency: e^(channels_containing / total_channels - 1).
/// Close to 1 for words shared by most channels, which is the emphasis this
/// weighting wants (the opposite of classical IDF).
double df(std::size_t channels_containing, std::size_t total_channels);

/// Classical inverse document frequency, log10(N / channels_containing).
/// Provided for comparison only; the pipeline weights with df().
double idf(std::size_t channels_containing, std::size_t total_channels);

/// weight(i,j) = tf(count(i,j)) * df(#channels containing word i, N).
WeightMatrix weight_matrix(const BopMatrix& m);

/// Row means of the weight matrix (divisor is the total channel count N).
std::map<SaxWord, double> feature_vector_block(const WeightMatrix& w);

/// Feature vector of one record: current block from the current channels,
/// voltage block from the voltage channels, concatenated current-first.
FeatureVector extract_features(const EventRecord& record,
                               const SaxParams& params,
                               double flat_epsilon = kFlatEpsilon);

/// One featurized record as serialized by the `featurize` command.
struct LabeledFeature {
  std::string id;
  std::optional<EventLabel> label;
  FeatureVector features;
};

/// JSON-Lines feature file:
/// {"id": ..., "label": ..., "features": {"<i|v>:<word>": value, ...}}
void save_features(const std::vector<LabeledFeature>& features,
                   const std::filesystem::path& path);

/// Loads and validates a feature file against the given params (key shape,
/// word length, alphabet range, finite non-negative values).
std::vector<LabeledFeature> load_features(const std::filesystem::path& path,
                                          const SaxParams& params);

}  // namespace pmubop
