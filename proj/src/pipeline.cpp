#include "chbf/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "chbf/errors.hpp"
#include "chbf/extract.hpp"
#include "chbf/feature_io.hpp"
#include "chbf/model_io.hpp"

namespace chbf {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

void run_extract(const ExtractOptions& opt, std::ostream& log) {
  const auto start = Clock::now();
  const DatasetSplit split =
      load_split(opt.images_path, opt.labels_path, opt.threshold, opt.limit);

  std::vector<BinaryImage> images;
  images.reserve(split.samples.size());
  FeatureSet set;
  set.labels.reserve(split.samples.size());
  for (const LabeledSample& s : split.samples) {
    images.push_back(s.image);
    set.labels.push_back(s.label);
  }

  ExtractStats stats;
  set.features = opt.serial ? extract_features_serial(images, &stats)
                            : extract_features(images, &stats);
  write_feature_file(opt.out_path, set);

  const double dt = seconds_since(start);
  log << "extracted " << stats.images << " samples (threshold "
      << opt.threshold << ", " << stats.degenerate_hulls
      << " degenerate hulls) in " << std::fixed << std::setprecision(2) << dt
      << " s";
  if (dt > 0) {
    log << " (" << std::setprecision(0) << stats.images / dt << " images/s)";
  }
  log << " -> " << opt.out_path << '\n';
}

void run_train(const TrainOptions& opt, std::ostream& log) {
  const auto start = Clock::now();
  const FeatureSet set = read_feature_file(opt.features_path);

  std::ostringstream epoch_log;
  const MlpModel model =
      train(set.rows(), set.labels, kNumClasses, opt.config, &epoch_log);

  save_model(opt.model_out, model);
  const std::string log_path =
      opt.log_out.empty() ? opt.model_out + ".log" : opt.log_out;
  {
    std::ofstream out(log_path);
    if (!out) raise(Errc::FileNotFound, "cannot write " + log_path);
    out << "# epoch mse train_accuracy_pct\n" << epoch_log.str();
  }

  log << "trained hidden_dim=" << opt.config.hidden_dim << " seed="
      << opt.config.seed << " epochs=" << model.epochs_trained << " on "
      << set.size() << " samples in " << std::fixed << std::setprecision(2)
      << seconds_since(start) << " s -> " << opt.model_out << '\n';
}

EvalReport run_eval(const EvalOptions& opt, std::ostream& log) {
  const MlpModel model = load_model(opt.model_path);
  const FeatureSet set = read_feature_file(opt.features_path);
  if (model.input_dim != kFeatureDim) {
    raise(Errc::LayoutVersionMismatch,
          "model expects " + std::to_string(model.input_dim) +
              " inputs, feature layout provides " + std::to_string(kFeatureDim));
  }
  const EvalReport report = evaluate(model, set.features, set.labels);

  log << format_eval_report(report);
  if (!opt.report_out.empty()) {
    std::ofstream out(opt.report_out);
    if (!out) raise(Errc::FileNotFound, "cannot write " + opt.report_out);
    out << format_eval_report(report);
  }
  if (!opt.confusion_out.empty()) {
    std::ofstream out(opt.confusion_out);
    if (!out) raise(Errc::FileNotFound, "cannot write " + opt.confusion_out);
    write_confusion(out, report);
  }
  return report;
}

std::vector<SweepRow> run_sweep(const SweepOptions& opt, std::ostream& log) {
  const auto start = Clock::now();
  const FeatureSet train_set = read_feature_file(opt.train_features_path);
  const FeatureSet test_set = read_feature_file(opt.test_features_path);
  const std::vector<std::vector<double>> train_rows = train_set.rows();

  std::vector<int> dims = opt.hidden_dims;
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

  const std::int64_t n = static_cast<std::int64_t>(dims.size());
  std::vector<SweepRow> rows(dims.size());
  std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(dynamic, 1) if (opt.parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      TrainConfig cfg = opt.base;
      cfg.hidden_dim = dims[i];
      cfg.seed = opt.base.seed + static_cast<std::uint64_t>(dims[i]);
      const MlpModel model = train(train_rows, train_set.labels, kNumClasses, cfg);
      const EvalReport test_report =
          evaluate(model, test_set.features, test_set.labels);
      const EvalReport train_report =
          evaluate(model, train_set.features, train_set.labels);
      rows[i] = {dims[i], test_report.overall_accuracy_pct,
                 train_report.overall_accuracy_pct, model.epochs_trained,
                 cfg.seed};
#pragma omp critical
      log << "hidden " << dims[i] << ": test "
          << std::fixed << std::setprecision(2)
          << test_report.overall_accuracy_pct << "%, train "
          << train_report.overall_accuracy_pct << "%\n";
    } catch (...) {
#pragma omp critical
      {
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::ofstream out(opt.out_path);
  if (!out) raise(Errc::FileNotFound, "cannot write " + opt.out_path);
  out << "# hidden_dim test_accuracy_pct train_accuracy_pct epochs seed\n";
  out << std::fixed << std::setprecision(2);
  for (const SweepRow& row : rows) {
    out << row.hidden_dim << ' ' << row.test_accuracy_pct << ' '
        << row.train_accuracy_pct << ' ' << row.epochs << ' ' << row.seed
        << '\n';
  }

  log << "sweep of " << rows.size() << " hidden sizes finished in "
      << std::fixed << std::setprecision(2) << seconds_since(start) << " s -> "
      << opt.out_path << '\n';
  return rows;
}

}  // namespace chbf
