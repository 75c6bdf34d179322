#include "chbf/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "chbf/errors.hpp"

namespace chbf {

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

struct Activations {
  std::vector<double> hidden;
  std::vector<double> output;
};

Activations run_forward(const MlpModel& m, std::span<const double> x) {
  Activations act;
  act.hidden.resize(m.hidden_dim);
  for (int j = 0; j < m.hidden_dim; ++j) {
    double z = m.b1[j];
    const double* row = m.w1.data() + static_cast<std::size_t>(j) * m.input_dim;
    for (int i = 0; i < m.input_dim; ++i) z += row[i] * x[i];
    act.hidden[j] = sigmoid(z);
  }
  act.output.resize(m.output_dim);
  for (int k = 0; k < m.output_dim; ++k) {
    double z = m.b2[k];
    const double* row = m.w2.data() + static_cast<std::size_t>(k) * m.hidden_dim;
    for (int j = 0; j < m.hidden_dim; ++j) z += row[j] * act.hidden[j];
    act.output[k] = sigmoid(z);
  }
  return act;
}

int argmax(std::span<const double> v) {
  return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
}

// Single-sample backprop given the activations of the forward pass.
Gradients gradients_from(const MlpModel& m, std::span<const double> x,
                         std::span<const double> target,
                         const Activations& act) {
  Gradients g;
  g.w1.assign(m.w1.size(), 0.0);
  g.b1.assign(m.b1.size(), 0.0);
  g.w2.assign(m.w2.size(), 0.0);
  g.b2.assign(m.b2.size(), 0.0);

  std::vector<double> delta_out(m.output_dim);
  for (int k = 0; k < m.output_dim; ++k) {
    const double o = act.output[k];
    delta_out[k] = 2.0 * (o - target[k]) * o * (1.0 - o);
  }
  for (int k = 0; k < m.output_dim; ++k) {
    g.b2[k] = delta_out[k];
    double* row = g.w2.data() + static_cast<std::size_t>(k) * m.hidden_dim;
    for (int j = 0; j < m.hidden_dim; ++j) row[j] = delta_out[k] * act.hidden[j];
  }
  for (int j = 0; j < m.hidden_dim; ++j) {
    double back = 0.0;
    for (int k = 0; k < m.output_dim; ++k) {
      back += delta_out[k] * m.w2[static_cast<std::size_t>(k) * m.hidden_dim + j];
    }
    const double h = act.hidden[j];
    const double delta_hid = back * h * (1.0 - h);
    g.b1[j] = delta_hid;
    double* row = g.w1.data() + static_cast<std::size_t>(j) * m.input_dim;
    for (int i = 0; i < m.input_dim; ++i) row[i] = delta_hid * x[i];
  }
  return g;
}

void momentum_step(std::vector<double>& w, std::vector<double>& v,
                   const std::vector<double>& g, double lr, double alpha) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    v[i] = -lr * g[i] + alpha * v[i];
    w[i] += v[i];
  }
}

}  // namespace

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> NormParams::apply(std::span<const double> x) const {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double range = max[i] - min[i];
    const double v = range > 0.0 ? (x[i] - min[i]) / range : 0.0;
    out[i] = std::clamp(v, 0.0, 1.0);
  }
  return out;
}

NormParams fit_norm_params(const std::vector<std::vector<double>>& rows) {
  NormParams p;
  const std::size_t dim = rows.empty() ? 0 : rows.front().size();
  p.min.assign(dim, 0.0);
  p.max.assign(dim, 0.0);
  if (!rows.empty()) {
    p.min = rows.front();
    p.max = rows.front();
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < dim; ++i) {
        p.min[i] = std::min(p.min[i], row[i]);
        p.max[i] = std::max(p.max[i], row[i]);
      }
    }
  }
  return p;
}

MlpModel make_mlp(int input_dim, int hidden_dim, int output_dim,
                  std::uint64_t seed) {
  MlpModel m;
  m.input_dim = input_dim;
  m.hidden_dim = hidden_dim;
  m.output_dim = output_dim;
  m.w1.resize(static_cast<std::size_t>(hidden_dim) * input_dim);
  m.b1.resize(hidden_dim);
  m.w2.resize(static_cast<std::size_t>(output_dim) * hidden_dim);
  m.b2.resize(output_dim);
  std::mt19937_64 rng(seed);
  for (auto* vec : {&m.w1, &m.b1, &m.w2, &m.b2}) {
    for (double& w : *vec) w = uniform01(rng) - 0.5;
  }
  m.vw1.assign(m.w1.size(), 0.0);
  m.vb1.assign(m.b1.size(), 0.0);
  m.vw2.assign(m.w2.size(), 0.0);
  m.vb2.assign(m.b2.size(), 0.0);
  // Identity-on-[0,1] normalization until a fit replaces it.
  m.norm.min.assign(input_dim, 0.0);
  m.norm.max.assign(input_dim, 1.0);
  m.config.seed = seed;
  m.config.hidden_dim = hidden_dim;
  return m;
}

std::vector<double> forward(const MlpModel& model, std::span<const double> x) {
  return run_forward(model, x).output;
}

Gradients backprop(const MlpModel& model, std::span<const double> x,
                   std::span<const double> target) {
  return gradients_from(model, x, target, run_forward(model, x));
}

double sample_loss(const MlpModel& model, std::span<const double> x,
                   std::span<const double> target) {
  const std::vector<double> out = forward(model, x);
  double e = 0.0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double d = out[k] - target[k];
    e += d * d;
  }
  return e;
}

double gradient_check(const MlpModel& model, std::span<const double> x,
                      std::span<const double> target, double h) {
  MlpModel m = model;
  const Gradients g = backprop(m, x, target);
  double max_rel = 0.0;

  auto check = [&](std::vector<double>& params, const std::vector<double>& grads) {
    for (std::size_t i = 0; i < params.size(); ++i) {
      const double orig = params[i];
      params[i] = orig + h;
      const double ep = sample_loss(m, x, target);
      params[i] = orig - h;
      const double em = sample_loss(m, x, target);
      params[i] = orig;
      const double numeric = (ep - em) / (2.0 * h);
      const double analytic = grads[i];
      const double scale = std::max(std::abs(analytic), std::abs(numeric));
      if (scale < 1e-10) continue;  // both gradients vanish
      max_rel = std::max(max_rel, std::abs(analytic - numeric) / scale);
    }
  };
  check(m.w1, g.w1);
  check(m.b1, g.b1);
  check(m.w2, g.w2);
  check(m.b2, g.b2);
  return max_rel;
}

EpochMetrics train_epoch(MlpModel& model,
                         const std::vector<std::vector<double>>& inputs,
                         const std::vector<std::vector<double>>& targets,
                         const TrainConfig& config, std::mt19937_64& rng) {
  const std::size_t n = inputs.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (config.shuffle) {
    // Fisher-Yates with our own draws, so the order is reproducible across
    // standard libraries.
    for (std::size_t i = n; i > 1; --i) {
      const std::size_t j = rng() % i;
      std::swap(order[i - 1], order[j]);
    }
  }

  double loss_sum = 0.0;
  std::size_t correct = 0;
  for (const std::size_t s : order) {
    const auto& x = inputs[s];
    const auto& t = targets[s];
    const Activations act = run_forward(model, x);
    double e = 0.0;
    for (int k = 0; k < model.output_dim; ++k) {
      const double d = act.output[k] - t[k];
      e += d * d;
    }
    loss_sum += e;
    if (model.output_dim > 1) {
      correct += argmax(act.output) == argmax(t);
    } else {
      correct += (act.output[0] >= 0.5) == (t[0] >= 0.5);
    }

    const Gradients g = gradients_from(model, x, t, act);
    momentum_step(model.w1, model.vw1, g.w1, config.learning_rate, config.momentum);
    momentum_step(model.b1, model.vb1, g.b1, config.learning_rate, config.momentum);
    momentum_step(model.w2, model.vw2, g.w2, config.learning_rate, config.momentum);
    momentum_step(model.b2, model.vb2, g.b2, config.learning_rate, config.momentum);
  }

  EpochMetrics metrics;
  if (n > 0) {
    metrics.mse = loss_sum / static_cast<double>(n);
    metrics.accuracy_pct = 100.0 * static_cast<double>(correct) / static_cast<double>(n);
  }
  return metrics;
}

MlpModel train(const std::vector<std::vector<double>>& inputs,
               std::span<const int> labels, int output_dim,
               const TrainConfig& config, std::ostream* log) {
  if (inputs.empty()) raise(Errc::EmptyImage, "no training samples");
  if (inputs.size() != labels.size()) {
    raise(Errc::CountMismatch,
          std::to_string(inputs.size()) + " feature rows vs " +
              std::to_string(labels.size()) + " labels");
  }

  const int input_dim = static_cast<int>(inputs.front().size());
  MlpModel model = make_mlp(input_dim, config.hidden_dim, output_dim, config.seed);
  model.config = config;
  model.norm = fit_norm_params(inputs);

  std::vector<std::vector<double>> normalized;
  normalized.reserve(inputs.size());
  for (const auto& row : inputs) normalized.push_back(model.norm.apply(row));

  std::vector<std::vector<double>> targets;
  targets.reserve(labels.size());
  for (const int label : labels) {
    if (label < 0 || label >= output_dim) {
      raise(Errc::ParseError, "label " + std::to_string(label) +
                                  " outside [0, " + std::to_string(output_dim) + ")");
    }
    std::vector<double> t(output_dim, 0.0);
    t[label] = 1.0;
    targets.push_back(std::move(t));
  }

  std::mt19937_64 rng(config.seed);
  double best_accuracy = -1.0;
  int stale = 0;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    const EpochMetrics m = train_epoch(model, normalized, targets, config, rng);
    model.epochs_trained = epoch + 1;
    if (log) {
      *log << epoch + 1 << ' ' << m.mse << ' ' << m.accuracy_pct << '\n';
    }
    if (config.early_stop) {
      if (m.accuracy_pct > best_accuracy) {
        best_accuracy = m.accuracy_pct;
        stale = 0;
      } else if (++stale >= config.patience) {
        break;
      }
    }
  }
  return model;
}

int predict(const MlpModel& model, std::span<const double> raw_features) {
  const std::vector<double> x = model.norm.apply(raw_features);
  const std::vector<double> out = forward(model, x);
  return argmax(out);
}

}  // namespace chbf
