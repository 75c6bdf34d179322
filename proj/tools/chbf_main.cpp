// chbf: convex-hull bay features for handwritten digits.
//
// Subcommands: extract (IDX images -> feature matrix), train (feature
// matrix -> MLP model), eval (model + features -> accuracy report), sweep
// (hidden-layer size study), show (render one sample's deficiency map).

#include <omp.h>

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chbf/dataset.hpp"
#include "chbf/deficiency.hpp"
#include "chbf/errors.hpp"
#include "chbf/pipeline.hpp"

namespace {

int run_show(const std::string& images_path, int index, int threshold) {
  const chbf::IdxImages images = chbf::load_idx_images(images_path);
  if (index < 0 || index >= images.count) {
    chbf::raise(chbf::Errc::CountMismatch,
                "index " + std::to_string(index) + " outside file with " +
                    std::to_string(images.count) + " images");
  }
  const chbf::BinaryImage img =
      chbf::binarize(images.image(index), images.rows, images.cols, threshold);
  const auto map = chbf::build_deficiency_map(img);
  if (!map) {
    chbf::raise(chbf::Errc::EmptyImage,
                "sample " + std::to_string(index) +
                    " has no usable hull at threshold " + std::to_string(threshold));
  }
  std::cout << chbf::render_deficiency_map(*map);
  std::cout << "perimeter_contacts " << chbf::perimeter_contact_count(*map) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convex-hull bay features + MLP digit classifier"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from an INI file");

  int threads = 0;
  app.add_option("--threads", threads, "worker thread count (0 = OpenMP default)");

  chbf::ExtractOptions extract_opt;
  CLI::App* extract = app.add_subcommand("extract", "extract features from IDX data");
  extract->add_option("--images", extract_opt.images_path, "IDX image file")->required();
  extract->add_option("--labels", extract_opt.labels_path, "IDX label file")->required();
  extract->add_option("--out", extract_opt.out_path, "feature matrix output")->required();
  extract->add_option("--threshold", extract_opt.threshold, "binarization threshold (object iff gray > t)");
  extract->add_option("--limit", extract_opt.limit, "use only the first N samples");
  extract->add_flag("--serial", extract_opt.serial, "use the serial reference kernel");

  chbf::TrainOptions train_opt;
  CLI::App* train = app.add_subcommand("train", "train the MLP on a feature matrix");
  train->add_option("--features", train_opt.features_path, "training feature matrix")->required();
  train->add_option("--model", train_opt.model_out, "model output path")->required();
  train->add_option("--log", train_opt.log_out, "per-epoch metrics log (default: <model>.log)");
  train->add_option("--hidden", train_opt.config.hidden_dim, "hidden layer size");
  train->add_option("--lr", train_opt.config.learning_rate, "learning rate");
  train->add_option("--momentum", train_opt.config.momentum, "momentum term");
  train->add_option("--epochs", train_opt.config.epochs, "training epochs");
  train->add_option("--seed", train_opt.config.seed, "RNG seed (init + shuffling)");
  train->add_flag("!--no-shuffle", train_opt.config.shuffle, "disable per-epoch shuffling");
  train->add_flag("--early-stop", train_opt.config.early_stop, "stop on training-accuracy plateau");
  train->add_option("--patience", train_opt.config.patience, "plateau epochs before early stop");

  chbf::EvalOptions eval_opt;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a model on a feature matrix");
  eval->add_option("--model", eval_opt.model_path, "model file")->required();
  eval->add_option("--features", eval_opt.features_path, "feature matrix")->required();
  eval->add_option("--confusion", eval_opt.confusion_out, "write delimited confusion matrix here");
  eval->add_option("--report", eval_opt.report_out, "write the text report here");

  chbf::SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand("sweep", "hidden-layer size sweep");
  sweep->add_option("--train-features", sweep_opt.train_features_path, "training feature matrix")->required();
  sweep->add_option("--test-features", sweep_opt.test_features_path, "test feature matrix")->required();
  sweep->add_option("--out", sweep_opt.out_path, "sweep table output")->required();
  sweep->add_option("--hidden", sweep_opt.hidden_dims, "hidden sizes (default 80..120 step 5)");
  sweep->add_option("--lr", sweep_opt.base.learning_rate, "learning rate");
  sweep->add_option("--momentum", sweep_opt.base.momentum, "momentum term");
  sweep->add_option("--epochs", sweep_opt.base.epochs, "training epochs per point");
  sweep->add_option("--seed", sweep_opt.base.seed, "base seed; per-run seed = base + hidden");
  sweep->add_flag("!--no-parallel", sweep_opt.parallel, "train sweep points sequentially");

  std::string show_images;
  int show_index = 0;
  int show_threshold = chbf::kDefaultThreshold;
  CLI::App* show = app.add_subcommand("show", "render one sample's deficiency map");
  show->add_option("--images", show_images, "IDX image file")->required();
  show->add_option("--index", show_index, "sample index")->required();
  show->add_option("--threshold", show_threshold, "binarization threshold");

  CLI11_PARSE(app, argc, argv);

  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (*extract) {
      chbf::run_extract(extract_opt, std::cout);
    } else if (*train) {
      chbf::run_train(train_opt, std::cout);
    } else if (*eval) {
      chbf::run_eval(eval_opt, std::cout);
    } else if (*sweep) {
      chbf::run_sweep(sweep_opt, std::cout);
    } else if (*show) {
      return run_show(show_images, show_index, show_threshold);
    }
  } catch (const chbf::ChbfError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
