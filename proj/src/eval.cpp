#include "chbf/eval.hpp"

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "chbf/errors.hpp"

namespace chbf {

std::vector<int> predict_batch(const MlpModel& model,
                               std::span<const FeatureVector> features) {
  const std::int64_t n = static_cast<std::int64_t>(features.size());
  std::vector<int> out(features.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[i] = predict(model, features[i]);
  }
  return out;
}

std::vector<int> predict_batch_serial(const MlpModel& model,
                                      std::span<const FeatureVector> features) {
  std::vector<int> out(features.size());
  for (std::size_t i = 0; i < features.size(); ++i) {
    out[i] = predict(model, features[i]);
  }
  return out;
}

EvalReport evaluate(const MlpModel& model, std::span<const FeatureVector> features,
                    std::span<const int> labels) {
  if (features.size() != labels.size()) {
    raise(Errc::CountMismatch,
          std::to_string(features.size()) + " feature rows vs " +
              std::to_string(labels.size()) + " labels");
  }
  const std::vector<int> predicted = predict_batch(model, features);

  EvalReport report;
  report.total = labels.size();
  std::size_t correct = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int t = labels[i];
    const int p = predicted[i];
    if (t < 0 || t >= kNumClasses || p < 0 || p >= kNumClasses) {
      raise(Errc::ParseError, "class outside [0, 10) at sample " + std::to_string(i));
    }
    ++report.confusion[t][p];
    ++report.class_totals[t];
    correct += t == p;
  }
  for (int c = 0; c < kNumClasses; ++c) {
    if (report.class_totals[c] > 0) {
      report.per_class_accuracy_pct[c] =
          100.0 * static_cast<double>(report.confusion[c][c]) /
          static_cast<double>(report.class_totals[c]);
    }
  }
  if (report.total > 0) {
    report.overall_accuracy_pct =
        100.0 * static_cast<double>(correct) / static_cast<double>(report.total);
  }
  return report;
}

std::string format_eval_report(const EvalReport& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "samples " << r.total << '\n';
  out << "overall_accuracy_pct " << r.overall_accuracy_pct << '\n';
  for (int c = 0; c < kNumClasses; ++c) {
    out << "class " << c << " n=" << r.class_totals[c]
        << " accuracy_pct=" << r.per_class_accuracy_pct[c] << '\n';
  }
  out << "confusion rows=true cols=predicted\n";
  for (int t = 0; t < kNumClasses; ++t) {
    for (int p = 0; p < kNumClasses; ++p) {
      out << r.confusion[t][p] << (p + 1 < kNumClasses ? ' ' : '\n');
    }
  }
  return out.str();
}

void write_confusion(std::ostream& out, const EvalReport& r) {
  out << "# confusion matrix, rows = true class 0-9, cols = predicted\n";
  for (int t = 0; t < kNumClasses; ++t) {
    for (int p = 0; p < kNumClasses; ++p) {
      out << r.confusion[t][p] << (p + 1 < kNumClasses ? ' ' : '\n');
    }
  }
}

}  // namespace chbf
