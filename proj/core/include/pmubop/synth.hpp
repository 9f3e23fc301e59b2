// Copyright 2026 the pmubop authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <array>
#include <cstdint>
#include <limits>

#include "pmubop/types.hpp"

namespace pmubop {

/// Parameters of the damped oscillation used for fabricated fault-like
/// waveforms: damping rate (1/s), angular frequency (rad/s), phase (rad),
/// amplitude (signal units).
struct DampingParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double k = 0.0;
};

/// V(t) = e^{-a t} (k cos(b t + c) + k sin(b t + c)), exactly this form with
/// the same amplitude on both terms.
double damped_oscillation(const DampingParams& p, double t_seconds);

/// Closed interval for a uniformly drawn template parameter.
struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

/// Ranges for randomized DampingParams: 1-5 Hz oscillation decaying within a
/// one-second post-event window, amplitude 5-30% of the channel baseline.
struct DampingRanges {
  Range rate{1.0, 5.0};
  Range freq_hz{1.0, 5.0};
  Range phase{0.0, 6.283185307179586};
  Range amplitude_frac{0.05, 0.30};
};

/// Per-class waveform template ranges. All values are relative to the channel
/// baseline magnitude.
struct EventTemplates {
  // fault: deep voltage dip with current surge, both with ringing
  Range fault_dip{0.30, 0.60};
  Range fault_surge{0.50, 1.50};
  Range fault_recovery_s{0.15, 0.40};
  // generation loss: downward step with a slow decaying swing
  Range gen_step{0.05, 0.15};
  Range gen_swing_rate{0.5, 1.5};
  Range gen_swing_hz{0.3, 1.0};
  Range gen_swing_frac{0.03, 0.10};
  // load change: small sustained first-order step, random sign
  Range load_step{0.02, 0.06};
  Range load_tau_s{0.10, 0.30};
  // line tripping: step plus ringing, concentrated on a current subset
  Range line_step{0.05, 0.20};
  Range line_ring_rate{1.0, 4.0};
  Range line_ring_hz{2.0, 6.0};
  Range line_ring_frac{0.05, 0.20};
  Range line_focus_atten{0.70, 1.00};
  Range line_background_atten{0.05, 0.30};
  // shunt switching: clean voltage step, faint current step
  Range shunt_step{0.03, 0.10};
  Range shunt_current_step{0.01, 0.03};
  // shared: per-channel response attenuation for system-wide events
  Range atten{0.30, 1.00};
};

struct SynthConfig {
  std::size_t n_samples = 45;
  double sample_rate_hz = 30.0;
  std::size_t pre_event_samples = 15;
  std::size_t voltage_channels = 7;
  std::size_t current_channels = 28;

  /// Per-class record counts in canonical label order
  /// (false_data, fault, generation_loss, load_change, line_tripping,
  /// shunt_switching).
  std::array<std::size_t, kLabelCount> class_counts = {600, 935, 115,
                                                       420, 163, 120};

  /// Falsified-channel subset size, drawn uniformly from [min, max].
  std::size_t false_channels_min = 2;
  std::size_t false_channels_max = 5;

  Range voltage_baseline{0.95, 1.05};
  Range current_baseline{0.30, 1.20};

  /// Steady-state jitter, as a fraction of the channel baseline. Always
  /// present so genuine steady segments never hit the flat-window rule.
  double jitter_frac = 0.001;

  DampingRanges damping;
  EventTemplates templates;

  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument on inconsistent sizes (pre-event segment not
/// shorter than the record, zero channels, subset range out of bounds, ...).
void validate(const SynthConfig& cfg);

/// Sentinel for add_awgn meaning "no noise".
inline constexpr double kNoNoise = std::numeric_limits<double>::infinity();

/// A record with every channel at steady state (baseline plus jitter).
/// Channel waveforms depend only on (cfg, rng_seed, channel index), so the
/// untouched channels of a falsified record match this record exactly.
EventRecord gen_steady(const SynthConfig& cfg, std::uint64_t rng_seed);

/// One labeled synthetic record. Genuine events drive every channel with a
/// shared post-event core scaled by a per-channel attenuation in (0, 1];
/// FalseData delegates to gen_false_data. Deterministic in (label, cfg, seed).
EventRecord gen_event(EventLabel label, const SynthConfig& cfg,
                      std::uint64_t rng_seed);

/// Injects independently randomized damped oscillations into a small random
/// channel subset; every other channel stays at steady state.
EventRecord gen_false_data(const SynthConfig& cfg, std::uint64_t rng_seed);

/// Adds white Gaussian noise per channel with variance chosen so that
/// mean-square(channel) / variance = 10^(snr_db / 10). Channels with zero
/// power, or snr_db = kNoNoise, pass through unchanged.
EventRecord add_awgn(const EventRecord& record, double snr_db,
                     std::uint64_t rng_seed);

/// add_awgn over every record, with per-record derived noise seeds.
Dataset add_awgn(const Dataset& dataset, double snr_db, std::uint64_t rng_seed);

/// Full labeled dataset with cfg.class_counts records per class, record
/// order shuffled by cfg.seed. Record i (in generation order) is produced
/// with seed derive_seed(cfg.seed, i), so batches are reproducible and
/// records independently regenerable.
Dataset gen_dataset(const SynthConfig& cfg);

}  // namespace pmubop
