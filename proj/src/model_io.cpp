#include "chbf/model_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "chbf/errors.hpp"

namespace chbf {

namespace {

void write_vector(std::ostream& out, std::string_view name,
                  const std::vector<double>& v) {
  out << name << ' ' << v.size();
  for (const double x : v) out << ' ' << x;
  out << '\n';
}

class FieldReader {
 public:
  explicit FieldReader(std::istream& in) : in_(in) {}

  template <typename T>
  T scalar(std::string_view name) {
    expect_name(name);
    T value{};
    if (!(in_ >> value)) corrupt("unreadable value for field " + std::string(name));
    return value;
  }

  std::vector<double> vector(std::string_view name, std::size_t expected) {
    expect_name(name);
    std::size_t n = 0;
    if (!(in_ >> n)) corrupt("unreadable length for field " + std::string(name));
    if (n != expected) {
      corrupt("field " + std::string(name) + " has " + std::to_string(n) +
              " values, expected " + std::to_string(expected));
    }
    std::vector<double> v(n);
    for (double& x : v) {
      if (!(in_ >> x)) corrupt("truncated field " + std::string(name));
    }
    return v;
  }

 private:
  void expect_name(std::string_view name) {
    std::string token;
    if (!(in_ >> token)) corrupt("file ends before field " + std::string(name));
    if (token != name) {
      corrupt("expected field " + std::string(name) + ", got " + token);
    }
  }

  [[noreturn]] void corrupt(const std::string& why) {
    raise(Errc::CorruptModelFile, why);
  }

  std::istream& in_;
};

}  // namespace

void save_model(std::ostream& out, const MlpModel& m) {
  out << std::setprecision(17);
  out << kModelFormatTag << '\n';
  out << "dims " << m.input_dim << ' ' << m.hidden_dim << ' ' << m.output_dim << '\n';
  out << "learning_rate " << m.config.learning_rate << '\n';
  out << "momentum " << m.config.momentum << '\n';
  out << "epochs " << m.config.epochs << '\n';
  out << "seed " << m.config.seed << '\n';
  out << "shuffle " << (m.config.shuffle ? 1 : 0) << '\n';
  out << "early_stop " << (m.config.early_stop ? 1 : 0) << '\n';
  out << "patience " << m.config.patience << '\n';
  out << "epochs_trained " << m.epochs_trained << '\n';
  write_vector(out, "norm_min", m.norm.min);
  write_vector(out, "norm_max", m.norm.max);
  write_vector(out, "w1", m.w1);
  write_vector(out, "b1", m.b1);
  write_vector(out, "w2", m.w2);
  write_vector(out, "b2", m.b2);
  write_vector(out, "vw1", m.vw1);
  write_vector(out, "vb1", m.vb1);
  write_vector(out, "vw2", m.vw2);
  write_vector(out, "vb2", m.vb2);
}

void save_model(const std::filesystem::path& path, const MlpModel& model) {
  std::ofstream out(path);
  if (!out) raise(Errc::FileNotFound, "cannot write " + path.string());
  save_model(out, model);
  if (!out) raise(Errc::FileNotFound, "short write to " + path.string());
}

MlpModel load_model(std::istream& in) {
  std::string tag;
  if (!(in >> tag)) raise(Errc::CorruptModelFile, "empty model file");
  if (tag != kModelFormatTag) {
    raise(Errc::ModelVersionMismatch,
          "model format tag '" + tag + "', this build reads '" +
              std::string(kModelFormatTag) + "'");
  }

  FieldReader fields(in);
  MlpModel m;
  {
    std::string token;
    if (!(in >> token) || token != "dims") {
      raise(Errc::CorruptModelFile, "expected field dims");
    }
    if (!(in >> m.input_dim >> m.hidden_dim >> m.output_dim)) {
      raise(Errc::CorruptModelFile, "unreadable dims");
    }
    if (m.input_dim <= 0 || m.hidden_dim <= 0 || m.output_dim <= 0) {
      raise(Errc::CorruptModelFile, "non-positive dims");
    }
  }
  m.config.learning_rate = fields.scalar<double>("learning_rate");
  m.config.momentum = fields.scalar<double>("momentum");
  m.config.epochs = fields.scalar<int>("epochs");
  m.config.seed = fields.scalar<std::uint64_t>("seed");
  m.config.shuffle = fields.scalar<int>("shuffle") != 0;
  m.config.early_stop = fields.scalar<int>("early_stop") != 0;
  m.config.patience = fields.scalar<int>("patience");
  m.config.hidden_dim = m.hidden_dim;
  m.epochs_trained = fields.scalar<int>("epochs_trained");

  const std::size_t in_dim = m.input_dim;
  const std::size_t hid = m.hidden_dim;
  const std::size_t out_dim = m.output_dim;
  m.norm.min = fields.vector("norm_min", in_dim);
  m.norm.max = fields.vector("norm_max", in_dim);
  m.w1 = fields.vector("w1", hid * in_dim);
  m.b1 = fields.vector("b1", hid);
  m.w2 = fields.vector("w2", out_dim * hid);
  m.b2 = fields.vector("b2", out_dim);
  m.vw1 = fields.vector("vw1", hid * in_dim);
  m.vb1 = fields.vector("vb1", hid);
  m.vw2 = fields.vector("vw2", out_dim * hid);
  m.vb2 = fields.vector("vb2", out_dim);
  return m;
}

MlpModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::FileNotFound, "cannot open " + path.string());
  try {
    return load_model(in);
  } catch (const ChbfError& e) {
    raise(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace chbf
