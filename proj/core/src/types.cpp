// Copyright 2026 the pmubop authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "pmubop/types.hpp"

#include <cmath>
#include <stdexcept>

namespace pmubop {

std::string_view to_string(EventLabel label) {
  switch (label) {
    case EventLabel::FalseData: return "false_data";
    case EventLabel::Fault: return "fault";
    case EventLabel::GenerationLoss: return "generation_loss";
    case EventLabel::LoadChange: return "load_change";
    case EventLabel::LineTripping: return "line_tripping";
    case EventLabel::ShuntSwitching: return "shunt_switching";
  }
  throw std::invalid_argument("invalid EventLabel value");
}

std::optional<EventLabel> label_from_string(std::string_view name) {
  for (EventLabel label : kAllLabels) {
    if (to_string(label) == name) return label;
  }
  return std::nullopt;
}

std::size_t EventRecord::length() const {
  if (!voltages.empty()) return voltages.front().size();
  if (!currents.empty()) return currents.front().size();
  return 0;
}

namespace {

void check_channels(const std::vector<TimeSeries>& channels, std::size_t n,
                    const char* kind) {
  for (const TimeSeries& channel : channels) {
    if (channel.size() != n) {
      throw std::invalid_argument(std::string(kind) +
                                  " channel length differs from the record's");
    }
    for (double sample : channel) {
      if (!std::isfinite(sample)) {
        throw std::invalid_argument(std::string(kind) +
                                    " channel contains a non-finite sample");
      }
    }
  }
}

}  // namespace

void validate(const EventRecord& record) {
  if (record.voltages.empty() || record.currents.empty()) {
    throw std::invalid_argument("record needs at least one voltage and one current channel");
  }
  const std::size_t n = record.length();
  if (n == 0) {
    throw std::invalid_argument("record channels must have at least one sample");
  }
  if (!(record.sample_rate_hz > 0.0) || !std::isfinite(record.sample_rate_hz)) {
    throw std::invalid_argument("sample_rate_hz must be positive and finite");
  }
  check_channels(record.voltages, n, "voltage");
  check_channels(record.currents, n, "current");
}

void validate(const Dataset& dataset) {
  for (std::size_t i = 0; i < dataset.records.size(); ++i) {
    const EventRecord& record = dataset.records[i];
    try {
      validate(record);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("record " + std::to_string(i) + " (id '" +
                                  record.id + "'): " + e.what());
    }
    const EventRecord& first = dataset.records.front();
    if (record.voltages.size() != first.voltages.size() ||
        record.currents.size() != first.currents.size() ||
        record.length() != first.length()) {
      throw std::invalid_argument("record " + std::to_string(i) + " (id '" +
                                  record.id +
                                  "'): channel count or length differs from record 0");
    }
  }
}

}  // namespace pmubop
