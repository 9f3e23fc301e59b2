// Copyright 2026 the pmubop authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "pmubop/vectorize.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace pmubop {

namespace {

void check_word(const SaxWord& word, const SaxParams& params) {
  if (word.size() != static_cast<std::size_t>(params.gamma)) {
    throw std::invalid_argument("word '" + word + "' length != gamma");
  }
  for (char ch : word) {
    if (ch < 'a' || ch >= static_cast<char>('a' + params.alpha)) {
      throw std::invalid_argument("word '" + word + "' uses a letter outside the alphabet");
    }
  }
}

}  // namespace

std::size_t feature_dim(const SaxParams& params) {
  validate(params);
  std::size_t dim = 2;  // two blocks
  for (int i = 0; i < params.gamma; ++i) {
    const auto a = static_cast<std::size_t>(params.alpha);
    if (dim > std::numeric_limits<std::size_t>::max() / a) {
      throw std::overflow_error("feature dimension 2 * alpha^gamma overflows");
    }
    dim *= a;
  }
  return dim;
}

WordCounts bow(const std::vector<SaxWord>& words, const SaxParams& params) {
  validate(params);
  WordCounts counts;
  for (const SaxWord& word : words) {
    check_word(word, params);
    ++counts[word];
  }
  return counts;
}

BopMatrix bop_matrix(const std::vector<TimeSeries>& channels,
                     const SaxParams& params, double flat_epsilon) {
  validate(params);
  if (channels.empty()) {
    throw std::invalid_argument("bop_matrix: channel list must not be empty");
  }
  const std::size_t n = channels.front().size();
  BopMatrix m;
  m.params = params;
  m.channel_count = channels.size();
  for (std::size_t j = 0; j < channels.size(); ++j) {
    if (channels[j].size() != n) {
      throw std::invalid_argument("bop_matrix: channels differ in length");
    }
    for (const SaxWord& word : sax_words(channels[j], params, flat_epsilon)) {
      auto [it, inserted] = m.rows.try_emplace(
          word, std::vector<std::uint32_t>(channels.size(), 0));
      ++it->second[j];
    }
  }
  return m;
}

double tf(std::uint64_t count) {
  if (count == 0) return 0.0;
  return 1.0 + std::log10(static_cast<double>(count));
}

double df(std::size_t channels_containing, std::size_t total_channels) {
  if (total_channels == 0) {
    throw std::invalid_argument("df: total_channels must be > 0");
  }
  if (channels_containing > total_channels) {
    throw std::invalid_argument("df: channels_containing exceeds total_channels");
  }
  return std::exp(static_cast<double>(channels_containing) /
                      static_cast<double>(total_channels) -
                  1.0);
}

double idf(std::size_t channels_containing, std::size_t total_channels) {
  if (channels_containing == 0) {
    throw std::invalid_argument("idf: channels_containing must be > 0");
  }
  if (channels_containing > total_channels) {
    throw std::invalid_argument("idf: channels_containing exceeds total_channels");
  }
  return std::log10(static_cast<double>(total_channels) /
                    static_cast<double>(channels_containing));
}

WeightMatrix weight_matrix(const BopMatrix& m) {
  WeightMatrix w;
  w.params = m.params;
  w.channel_count = m.channel_count;
  for (const auto& [word, counts] : m.rows) {
    const auto containing = static_cast<std::size_t>(
        std::count_if(counts.begin(), counts.end(),
                      [](std::uint32_t c) { return c > 0; }));
    const double df_factor = df(containing, m.channel_count);
    std::vector<double> weights(counts.size(), 0.0);
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (counts[j] > 0) weights[j] = tf(counts[j]) * df_factor;
    }
    w.rows.emplace(word, std::move(weights));
  }
  return w;
}

std::map<SaxWord, double> feature_vector_block(const WeightMatrix& w) {
  std::map<SaxWord, double> block;
  std::vector<double> nonzero;
  for (const auto& [word, weights] : w.rows) {
    nonzero.clear();
    for (double value : weights) {
      if (value != 0.0) nonzero.push_back(value);
    }
    if (nonzero.empty()) continue;
    // Summing in sorted order makes the row mean independent of channel
    // order, so feature vectors are bit-identical under channel permutation.
    std::sort(nonzero.begin(), nonzero.end());
    double sum = 0.0;
    for (double value : nonzero) sum += value;
    block.emplace(word, sum / static_cast<double>(w.channel_count));
  }
  return block;
}

FeatureVector extract_features(const EventRecord& record,
                               const SaxParams& params, double flat_epsilon) {
  validate(record);
  FeatureVector f;
  f.dim = feature_dim(params);
  const auto add_block = [&](const std::vector<TimeSeries>& channels,
                             const char* prefix) {
    const WeightMatrix w = weight_matrix(bop_matrix(channels, params, flat_epsilon));
    for (const auto& [word, value] : feature_vector_block(w)) {
      f.values.emplace(std::string(prefix) + word, value);
    }
  };
  add_block(record.currents, "i:");
  add_block(record.voltages, "v:");
  return f;
}

namespace {

using nlohmann::json;

json features_to_json(const FeatureVector& f) {
  json obj = json::object();
  for (const auto& [key, value] : f.values) obj[key] = value;
  return obj;
}

}  // namespace

void save_features(const std::vector<LabeledFeature>& features,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  for (const LabeledFeature& item : features) {
    json line;
    line["id"] = item.id;
    if (item.label) line["label"] = std::string(to_string(*item.label));
    line["features"] = features_to_json(item.features);
    out << line.dump() << '\n';
  }
  if (!out) {
    throw std::runtime_error("write to '" + path.string() + "' failed");
  }
}

std::vector<LabeledFeature> load_features(const std::filesystem::path& path,
                                          const SaxParams& params) {
  validate(params);
  const std::size_t dim = feature_dim(params);
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }
  std::vector<LabeledFeature> result;
  std::string line;
  std::size_t line_no = 0;
  const auto fail = [&](const std::string& message) -> std::runtime_error {
    return std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                              ": " + message);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw fail(e.what());
    }
    LabeledFeature item;
    try {
      item.id = obj.at("id").get<std::string>();
      if (obj.contains("label")) {
        const auto name = obj.at("label").get<std::string>();
        const auto label = label_from_string(name);
        if (!label) throw fail("unknown label '" + name + "'");
        item.label = *label;
      }
      item.features.dim = dim;
      for (const auto& [key, value] : obj.at("features").items()) {
        if (key.size() < 3 || (key[0] != 'i' && key[0] != 'v') || key[1] != ':') {
          throw fail("feature key '" + key + "' is not '<i|v>:<word>'");
        }
        check_word(key.substr(2), params);
        const double v = value.get<double>();
        if (!std::isfinite(v) || v < 0.0) {
          throw fail("feature '" + key + "' must be finite and >= 0");
        }
        item.features.values.emplace(key, v);
      }
    } catch (const json::exception& e) {
      throw fail(e.what());
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
    result.push_back(std::move(item));
  }
  return result;
}

}  // namespace pmubop
