#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chbf/dataset.hpp"
#include "chbf/eval.hpp"
#include "chbf/mlp.hpp"

namespace chbf {

// Workflow entry points behind the CLI subcommands. Everything is
// deterministic for a fixed seed/config: reruns produce byte-identical
// output files regardless of thread count.

struct ExtractOptions {
  std::string images_path;
  std::string labels_path;
  std::string out_path;
  int threshold = kDefaultThreshold;
  std::size_t limit = 0;  // 0 = all samples
  bool serial = false;    // use the serial reference kernel
};

void run_extract(const ExtractOptions& opt, std::ostream& log);

struct TrainOptions {
  std::string features_path;
  std::string model_out;
  std::string log_out;  // empty: model_out + ".log"
  TrainConfig config;
};

void run_train(const TrainOptions& opt, std::ostream& log);

struct EvalOptions {
  std::string model_path;
  std::string features_path;
  std::string confusion_out;  // empty: skip
  std::string report_out;     // empty: skip
};

EvalReport run_eval(const EvalOptions& opt, std::ostream& log);

struct SweepRow {
  int hidden_dim = 0;
  double test_accuracy_pct = 0.0;
  double train_accuracy_pct = 0.0;
  int epochs = 0;
  std::uint64_t seed = 0;
};

struct SweepOptions {
  std::string train_features_path;
  std::string test_features_path;
  std::string out_path;
  std::vector<int> hidden_dims = {80, 85, 90, 95, 100, 105, 110, 115, 120};
  TrainConfig base;       // hidden_dim ignored; seed is the base seed
  bool parallel = true;   // train the sweep points in parallel workers
};

// Trains one model per hidden size (per-run seed = base seed + hidden_dim),
// evaluates on the test features and writes the accuracy table.
std::vector<SweepRow> run_sweep(const SweepOptions& opt, std::ostream& log);

}  // namespace chbf
