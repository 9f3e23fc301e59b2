// Copyright 2026 the pmubop authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pmubop {

/// One channel's sampled magnitude sequence. Unit-agnostic: the pipeline
/// z-normalizes every window, so per-unit and physical scales behave the same.
using TimeSeries = std::vector<double>;

/// The six event classes. Enumerator order is canonical: it fixes
/// confusion-matrix axes, report layout, and tie-breaking everywhere.
enum class EventLabel {
  FalseData,
  Fault,
  GenerationLoss,
  LoadChange,
  LineTripping,
  ShuntSwitching,
};

inline constexpr std::size_t kLabelCount = 6;

inline constexpr std::array<EventLabel, kLabelCount> kAllLabels = {
    EventLabel::FalseData,      EventLabel::Fault,        EventLabel::GenerationLoss,
    EventLabel::LoadChange,     EventLabel::LineTripping, EventLabel::ShuntSwitching,
};

/// Canonical lowercase snake_case name ("false_data", "fault", ...).
std::string_view to_string(EventLabel label);

/// Inverse of to_string. Empty optional for unknown names.
std::optional<EventLabel> label_from_string(std::string_view name);

inline std::size_t label_index(EventLabel label) {
  return static_cast<std::size_t>(label);
}

/// One labeled multivariate event window: every sensor's voltage and current
/// magnitude channels over the same sample range.
struct EventRecord {
  std::string id;
  EventLabel label = EventLabel::Fault;
  double sample_rate_hz = 30.0;
  std::vector<TimeSeries> voltages;
  std::vector<TimeSeries> currents;

  /// Shared channel length. Zero for a record with no channels.
  std::size_t length() const;

  bool operator==(const EventRecord&) const = default;
};

struct Dataset {
  std::vector<EventRecord> records;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }

  bool operator==(const Dataset&) const = default;
};

/// Throws std::invalid_argument unless the record has at least one voltage
/// and one current channel, all channels share one length >= 1, every sample
/// is finite, and the sample rate is positive.
void validate(const EventRecord& record);

/// Validates every record and requires identical channel counts and channel
/// length across the whole dataset.
void validate(const Dataset& dataset);

}  // namespace pmubop
