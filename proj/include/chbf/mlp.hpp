#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

namespace chbf {

// Min-max feature scaling fitted on training data. Stored with the model so
// train and test features always go through the same transform.
struct NormParams {
  std::vector<double> min;
  std::vector<double> max;

  // (x - min) / (max - min), clamped to [0, 1]; constant features map to 0.
  std::vector<double> apply(std::span<const double> x) const;

  friend bool operator==(const NormParams&, const NormParams&) = default;
};

NormParams fit_norm_params(const std::vector<std::vector<double>>& rows);

struct TrainConfig {
  double learning_rate = 0.8;
  double momentum = 0.7;
  int epochs = 50;
  int hidden_dim = 110;
  std::uint64_t seed = 1;
  bool shuffle = true;
  // Stop once training accuracy has not improved for `patience` epochs.
  bool early_stop = false;
  int patience = 5;

  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

// One-hidden-layer perceptron with logistic sigmoid on both layers, trained
// online by backpropagation with momentum on the squared error
// E = sum_k (o_k - t_k)^2 against one-hot targets.
struct MlpModel {
  int input_dim = 0;
  int hidden_dim = 0;
  int output_dim = 0;
  std::vector<double> w1, b1;  // w1: hidden_dim x input_dim, row-major
  std::vector<double> w2, b2;  // w2: output_dim x hidden_dim, row-major
  std::vector<double> vw1, vb1, vw2, vb2;  // momentum buffers
  NormParams norm;
  TrainConfig config;     // hyperparameters this model was trained with
  int epochs_trained = 0;

  friend bool operator==(const MlpModel&, const MlpModel&) = default;
};

// Weights and biases drawn uniformly from [-0.5, 0.5] with a seeded
// generator; momentum buffers start at zero.
MlpModel make_mlp(int input_dim, int hidden_dim, int output_dim,
                  std::uint64_t seed);

// Deterministic uniform double in [0, 1); used for init and shuffling so
// results do not depend on the standard library's distribution code.
double uniform01(std::mt19937_64& rng);

std::vector<double> forward(const MlpModel& model, std::span<const double> x);

struct Gradients {
  std::vector<double> w1, b1, w2, b2;
};

// Analytic dE/dw on a single sample.
Gradients backprop(const MlpModel& model, std::span<const double> x,
                   std::span<const double> target);

double sample_loss(const MlpModel& model, std::span<const double> x,
                   std::span<const double> target);

// Max relative error between analytic gradients and central finite
// differences over every parameter.
double gradient_check(const MlpModel& model, std::span<const double> x,
                      std::span<const double> target, double h = 1e-5);

struct EpochMetrics {
  double mse = 0.0;           // mean per-sample squared error, pre-update
  double accuracy_pct = 0.0;  // argmax match rate, pre-update
};

// One online pass: per-sample update dw = -lr * grad + momentum * dw_prev,
// visiting samples in shuffled order when config.shuffle is set.
EpochMetrics train_epoch(MlpModel& model,
                         const std::vector<std::vector<double>>& inputs,
                         const std::vector<std::vector<double>>& targets,
                         const TrainConfig& config, std::mt19937_64& rng);

// Full classifier training: fits normalization on `inputs`, initializes
// from config.seed and runs config.epochs passes (fewer when early_stop
// triggers). Logs one "epoch mse accuracy" line per epoch when `log` is
// given. Labels must lie in [0, output_dim).
MlpModel train(const std::vector<std::vector<double>>& inputs,
               std::span<const int> labels, int output_dim,
               const TrainConfig& config, std::ostream* log = nullptr);

// Applies the stored normalization, runs the network and returns the argmax
// class; ties break toward the lowest class index.
int predict(const MlpModel& model, std::span<const double> raw_features);

}  // namespace chbf
