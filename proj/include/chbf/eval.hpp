#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "chbf/features.hpp"
#include "chbf/mlp.hpp"

namespace chbf {

inline constexpr int kNumClasses = 10;

struct EvalReport {
  std::size_t total = 0;
  // confusion[t][p]: samples of true class t predicted as p.
  std::array<std::array<std::size_t, kNumClasses>, kNumClasses> confusion{};
  std::array<std::size_t, kNumClasses> class_totals{};
  std::array<double, kNumClasses> per_class_accuracy_pct{};
  double overall_accuracy_pct = 0.0;
};

// Batch prediction; OpenMP across samples, output in sample order.
std::vector<int> predict_batch(const MlpModel& model,
                               std::span<const FeatureVector> features);

// Serial reference, kept for testing.
std::vector<int> predict_batch_serial(const MlpModel& model,
                                      std::span<const FeatureVector> features);

EvalReport evaluate(const MlpModel& model, std::span<const FeatureVector> features,
                    std::span<const int> labels);

std::string format_eval_report(const EvalReport& report);

// Space-delimited 10x10 confusion matrix behind a '#' comment header.
void write_confusion(std::ostream& out, const EvalReport& report);

}  // namespace chbf
