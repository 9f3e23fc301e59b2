// Copyright 2026 the pmubop authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <filesystem>

#include "pmubop/types.hpp"

namespace pmubop {

// JSON-Lines dataset format, one event per line:
//   {"id": "<string>", "label": "fault|generation_loss|load_change|
//    line_tripping|shunt_switching|false_data", "sample_rate_hz": 30,
//    "voltages": [[...], ...], "currents": [[...], ...]}
// Samples are serialized with full round-trip precision, so save followed by
// load reproduces every numeric field bit-exactly.

/// Loads a dataset, preserving file order. Errors (malformed JSON, bad
/// fields, invariant violations, cross-record inconsistency) name the
/// offending line. Whitespace-only lines are ignored.
Dataset load_dataset(const std::filesystem::path& path);

/// Validates the dataset, then writes it. Nothing is written when
/// validation fails.
void save_dataset(const Dataset& dataset, const std::filesystem::path& path);

}  // namespace pmubop
