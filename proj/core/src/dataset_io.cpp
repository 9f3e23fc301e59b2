// Copyright 2026 the pmubop authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "pmubop/dataset_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace pmubop {

namespace {

using nlohmann::json;

std::vector<TimeSeries> channels_from_json(const json& arr) {
  std::vector<TimeSeries> channels;
  channels.reserve(arr.size());
  for (const json& channel : arr) {
    channels.push_back(channel.get<TimeSeries>());
  }
  return channels;
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }
  Dataset dataset;
  std::string line;
  std::size_t line_no = 0;
  const auto fail = [&](const std::string& message) -> std::runtime_error {
    return std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                              ": " + message);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    EventRecord record;
    try {
      const json obj = json::parse(line);
      record.id = obj.at("id").get<std::string>();
      const auto name = obj.at("label").get<std::string>();
      const auto label = label_from_string(name);
      if (!label) throw fail("unknown label '" + name + "'");
      record.label = *label;
      record.sample_rate_hz = obj.at("sample_rate_hz").get<double>();
      record.voltages = channels_from_json(obj.at("voltages"));
      record.currents = channels_from_json(obj.at("currents"));
    } catch (const json::exception& e) {
      throw fail(e.what());
    }
    try {
      validate(record);
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
    if (!dataset.empty()) {
      const EventRecord& first = dataset.records.front();
      if (record.voltages.size() != first.voltages.size() ||
          record.currents.size() != first.currents.size() ||
          record.length() != first.length()) {
        throw fail("channel count or length differs from the first record");
      }
    }
    dataset.records.push_back(std::move(record));
  }
  if (in.bad()) {
    throw std::runtime_error("read error on '" + path.string() + "'");
  }
  return dataset;
}

void save_dataset(const Dataset& dataset, const std::filesystem::path& path) {
  validate(dataset);  // reject before touching the file
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  for (const EventRecord& record : dataset.records) {
    json obj;
    obj["id"] = record.id;
    obj["label"] = std::string(to_string(record.label));
    obj["sample_rate_hz"] = record.sample_rate_hz;
    obj["voltages"] = record.voltages;
    obj["currents"] = record.currents;
    out << obj.dump() << '\n';
  }
  if (!out) {
    throw std::runtime_error("write to '" + path.string() + "' failed");
  }
}

}  // namespace pmubop
