// Copyright 2026 the pmubop authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "pmubop/types.hpp"
#include "pmubop/vectorize.hpp"

namespace pmubop {

enum class ClassifierKind {
  NearestCentroid,
  LinearSvmOvr,
};

std::string_view to_string(ClassifierKind kind);
std::optional<ClassifierKind> classifier_from_string(std::string_view name);

/// SVM hyperparameters. The step-size schedule is eta_t = 1 / (lambda * t).
struct TrainOptions {
  double lambda = 1e-4;
  int epochs = 50;
};

/// A trained multiclass model over sparse feature vectors. Features are
/// standardized with training-set statistics (zero-variance dimensions are
/// centered but left unscaled); class parameters are dense over the realized
/// vocabulary, the sorted set of feature keys seen during training.
struct ClassifierModel {
  ClassifierKind kind = ClassifierKind::LinearSvmOvr;
  std::size_t feature_dim = 0;
  int alpha = 0;  // featurization metadata; 0 when unknown
  int gamma = 0;
  TrainOptions options;
  std::uint64_t seed = 0;

  std::vector<std::string> vocab;
  std::vector<double> mean;
  std::vector<double> scale;

  std::vector<EventLabel> classes;         // classes present, canonical order
  std::vector<std::vector<double>> coef;   // per class: centroid or SVM weights
  std::vector<double> bias;                // per class; zero for centroids

  /// Per class, the SVM objective (lambda/2 |w|^2 + mean hinge) at the end of
  /// each epoch. Empty for NearestCentroid.
  std::vector<std::vector<double>> objective_history;
};

using Confusion = std::array<std::array<std::size_t, kLabelCount>, kLabelCount>;

/// Cross-validation (or any) evaluation result. Confusion rows are true
/// labels, columns predicted labels, both in canonical order.
struct EvalReport {
  double accuracy = 0.0;
  Confusion confusion{};
  std::array<double, kLabelCount> recall{};
  std::array<double, kLabelCount> ppv{};

  std::size_t total() const;
};

using TrainingSet = std::vector<std::pair<FeatureVector, EventLabel>>;

/// Trains a model. Requires at least two distinct labels and a consistent
/// feature dimension. Deterministic: the same data, options, and seed yield a
/// bit-identical model.
ClassifierModel train(const TrainingSet& data, ClassifierKind kind,
                      const TrainOptions& options, std::uint64_t seed);

/// Per-class decision scores in model.classes order (negative squared
/// distance for centroids, w.x + b for SVM).
std::vector<double> decision_values(const ClassifierModel& model,
                                    const FeatureVector& features);

/// Argmax of decision_values; exact ties go to the earlier class in
/// canonical label order.
EventLabel predict(const ClassifierModel& model, const FeatureVector& features);

/// Stratified k-fold cross validation over a dataset: features extracted at
/// `params`, records shuffled by seed and dealt so fold sizes differ by at
/// most one, each fold predicted by a model trained on the rest.
EvalReport kfold_evaluate(const Dataset& dataset, const SaxParams& params,
                          ClassifierKind kind, const TrainOptions& options,
                          int folds, std::uint64_t seed);

/// Per-class recall (diagonal / row sum), positive predictive value
/// (diagonal / column sum), and overall accuracy (trace / total). Empty rows
/// or columns yield zero.
EvalReport confusion_to_report(const Confusion& confusion);

/// Aligned text table: accuracy, confusion matrix, recall column, PPV row.
std::string format_report(const EvalReport& report);

/// CSV form of the same report.
std::string report_csv(const EvalReport& report);

void save_model(const ClassifierModel& model, const std::filesystem::path& path);
ClassifierModel load_model(const std::filesystem::path& path);

}  // namespace pmubop
