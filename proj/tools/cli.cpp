#include "cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "crossn/compound.hpp"
#include "crossn/crossprod.hpp"
#include "crossn/error.hpp"
#include "crossn/io.hpp"
#include "crossn/metric.hpp"
#include "crossn/oracles.hpp"

namespace crossn::cli {
namespace {

using io::Json;

struct Options {
  std::vector<std::string> inputs;
  std::string matrix;
  std::string metric;
  std::string format;
  std::string output;
  double tolerance = 1e-9;
  int k = 0;
  int theorem = 1;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  int max_dim = 6;
  bool complex = false;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

struct LoadedMatrix {
  Matrix matrix;
  Json record;
};

LoadedMatrix load(const std::string& path, const std::string& format_flag, const char* role) {
  const std::string text = io::read_file(path);
  io::MatrixFormat fmt = io::detect_format(path, text);
  if (!format_flag.empty()) fmt = *io::parse_format(format_flag);
  Matrix m = io::parse_matrix(text, fmt);
  Json rec = {{"role", role},
              {"path", path},
              {"format", fmt == io::MatrixFormat::Json ? "json" : "csv"},
              {"sha256", sha256_hex(text)}};
  return {std::move(m), std::move(rec)};
}

// One file: its columns are the vectors. Several files: each holds a single
// vector, written either as one column or one row.
Matrix load_vectors(const Options& opts, Json& inputs) {
  if (opts.inputs.size() == 1) {
    auto loaded = load(opts.inputs.front(), opts.format, "vectors");
    inputs.push_back(std::move(loaded.record));
    return std::move(loaded.matrix);
  }
  std::vector<Vector> columns;
  for (const auto& path : opts.inputs) {
    auto loaded = load(path, opts.format, "vector");
    inputs.push_back(std::move(loaded.record));
    const Matrix& v = loaded.matrix;
    if (v.cols() != 1 && v.rows() != 1)
      raise(ErrorKind::Dimension, path + " holds a " + std::to_string(v.rows()) + "x" +
                                      std::to_string(v.cols()) + " matrix, not a single vector");
    columns.push_back(Vector(v.data().begin(), v.data().end()));
  }
  return Matrix::from_columns(columns);
}

std::optional<MetricSpace> load_metric(const Options& opts, Json& inputs) {
  if (opts.metric.empty()) return std::nullopt;
  auto loaded = load(opts.metric, opts.format, "metric");
  inputs.push_back(std::move(loaded.record));
  return validate_metric(loaded.matrix, opts.tolerance);
}

Json labels_json(const std::vector<Combination>& labels) {
  Json out = Json::array();
  for (const auto& c : labels) {
    Json l = Json::array();
    for (int i : c.indices()) l.push_back(i);
    out.push_back(std::move(l));
  }
  return out;
}

Json signed_volume_json(const SignedVolume& sv) {
  return {{"squared", sv.squared}, {"magnitude", sv.magnitude}, {"sign", sv.sign}};
}

void require_vectors_fit(const Matrix& x) {
  if (x.cols() > x.rows())
    raise(ErrorKind::Dimension, std::to_string(x.cols()) + " vectors in " +
                                    std::to_string(x.rows()) +
                                    " dimensions: need m <= n (files hold vectors as columns)");
}

Json cmd_cross(const Options& opts, Json doc) {
  Json inputs = Json::array();
  const Matrix x = load_vectors(opts, inputs);
  require_vectors_fit(x);
  const auto metric = load_metric(opts, inputs);
  const CrossVector v = row_minor_vector(x);
  doc["inputs"] = std::move(inputs);
  doc["n"] = v.n();
  doc["m"] = v.m();
  doc["components"] = io::cross_vector_to_json(v);
  Json projections = Json::array();
  for (const auto& [label, mag] : pythagorean_decomposition(v)) {
    Json l = Json::array();
    for (int i : label.indices()) l.push_back(i);
    projections.push_back({{"label", std::move(l)}, {"volume", mag}});
  }
  doc["projections"] = std::move(projections);
  doc["norm"] = v.norm();
  if (metric) doc["metric"] = signed_volume_json(signed_squared_volume(x, *metric));
  return doc;
}

Json cmd_volume(const Options& opts, Json doc) {
  Json inputs = Json::array();
  const Matrix x = load_vectors(opts, inputs);
  require_vectors_fit(x);
  const auto metric = load_metric(opts, inputs);
  doc["inputs"] = std::move(inputs);
  doc["n"] = x.rows();
  doc["m"] = x.cols();
  if (metric) {
    const auto sv = signed_squared_volume(x, *metric);
    doc["volume"] = sv.magnitude;
    doc["squared"] = sv.squared;
    doc["sign"] = sv.sign;
  } else {
    doc["volume"] = euclidean_volume(x, opts.tolerance);
  }
  return doc;
}

Json cmd_gram(const Options& opts, Json doc) {
  Json inputs = Json::array();
  const Matrix x = load_vectors(opts, inputs);
  auto metric = load_metric(opts, inputs);
  if (!metric) metric = validate_metric(Matrix::identity(x.rows()), opts.tolerance);
  const Matrix g = gram(x, *metric);
  doc["inputs"] = std::move(inputs);
  doc["n"] = x.rows();
  doc["m"] = x.cols();
  doc["gram"] = io::matrix_to_json(g);
  doc["determinant"] = io::scalar_to_json(determinant(g));
  return doc;
}

Json cmd_hodge(const Options& opts, Json doc) {
  Json inputs = Json::array();
  const Matrix x = load_vectors(opts, inputs);
  require_vectors_fit(x);
  const CrossVector v = row_minor_vector(x);
  const Vector h = hodge_dual(v);
  doc["inputs"] = std::move(inputs);
  doc["n"] = v.n();
  doc["m"] = v.m();
  Json dual = Json::array();
  for (const auto& z : h) dual.push_back(io::scalar_to_json(z));
  doc["dual"] = std::move(dual);
  return doc;
}

Json cmd_compound(const Options& opts, Json doc) {
  auto loaded = load(opts.matrix, opts.format, "matrix");
  const auto c = compound_matrix(loaded.matrix, opts.k);
  doc["inputs"] = Json::array({std::move(loaded.record)});
  doc["k"] = c.k;
  doc["source_rows"] = c.source_rows;
  doc["source_cols"] = c.source_cols;
  doc["row_labels"] = labels_json(c.row_labels);
  doc["col_labels"] = labels_json(c.col_labels);
  doc["matrix"] = io::matrix_to_json(c.matrix);
  return doc;
}

Json cmd_verify(const Options& opts, Json doc, bool& passed) {
  oracles::VerifyOptions vo;
  vo.theorem = opts.theorem == 1 ? oracles::Theorem::CauchyBinet
                                 : oracles::Theorem::CompoundProduct;
  vo.trials = opts.trials;
  vo.seed = opts.seed;
  vo.max_dim = opts.max_dim;
  vo.tolerance = opts.tolerance;
  vo.complex = opts.complex;
  const auto r = oracles::run_verification(vo);
  passed = r.passed();
  doc["theorem"] = opts.theorem;
  doc["trials"] = r.trials;
  doc["seed"] = opts.seed;
  doc["max_dim"] = opts.max_dim;
  doc["tolerance"] = opts.tolerance;
  doc["complex"] = opts.complex;
  doc["failures"] = r.failures;
  doc["worst_gap"] = r.worst_gap;
  doc["worst_seed"] = r.worst_seed;
  doc["failing_seed"] = r.has_failure ? Json(r.first_failing_seed) : Json(nullptr);
  doc["passed"] = passed;
  return doc;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return kUsage;
    case ErrorKind::InvalidMetric: return kInvalidMetric;
    case ErrorKind::Numeric: return kNumeric;
    default: return kDimension;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Cross products of m vectors in n-dimensional spaces", "crossn"};
  app.require_subcommand(1);

  const auto add_io = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "Input matrix format (default: by extension)")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", opts.output, "Write the result document here");
    sub->add_option("--tolerance", opts.tolerance, "Numerical tolerance")
        ->check(CLI::NonNegativeNumber);
  };
  const auto add_vectors = [&](CLI::App* sub, bool with_metric) {
    sub->add_option("inputs", opts.inputs,
                    "One matrix file (columns are vectors) or one file per vector")
        ->required()
        ->check(CLI::ExistingFile);
    if (with_metric)
      sub->add_option("--metric", opts.metric, "Hermitian metric matrix file")
          ->check(CLI::ExistingFile);
    add_io(sub);
  };

  auto* cross_cmd = app.add_subcommand("cross", "Cross product (all m x m row minors)");
  add_vectors(cross_cmd, true);
  auto* volume_cmd = app.add_subcommand("volume", "Parallelotope volume");
  add_vectors(volume_cmd, true);
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix X^H G X");
  add_vectors(gram_cmd, true);
  auto* hodge_cmd = app.add_subcommand("hodge", "Classical dual of n-1 vectors");
  add_vectors(hodge_cmd, false);

  auto* compound_cmd = app.add_subcommand("compound", "Compound matrix of order k");
  compound_cmd->add_option("matrix", opts.matrix, "Matrix file")
      ->required()
      ->check(CLI::ExistingFile);
  compound_cmd->add_option("k", opts.k, "Minor order")->required()->check(CLI::PositiveNumber);
  add_io(compound_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Randomized check against brute-force oracles");
  verify_cmd->add_option("--theorem", opts.theorem, "1: Cauchy-Binet, 2: compound product")
      ->check(CLI::IsMember({1, 2}));
  verify_cmd->add_option("--trials", opts.trials, "Number of random instances")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", opts.seed, "Base seed");
  verify_cmd->add_option("--max-dim", opts.max_dim, "Largest random dimension")
      ->check(CLI::Range(1, oracles::kNaiveMaxDim));
  verify_cmd->add_flag("--complex", opts.complex, "Complex entries");
  verify_cmd->add_option("--output", opts.output, "Write the result document here");
  verify_cmd->add_option("--tolerance", opts.tolerance, "Relative tolerance")
      ->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "crossn: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  Json doc;
  doc["command"] = sub->get_name();
  doc["args"] = args;

  int status = kOk;
  try {
    const std::string& name = sub->get_name();
    if (name == "cross") doc = cmd_cross(opts, std::move(doc));
    else if (name == "volume") doc = cmd_volume(opts, std::move(doc));
    else if (name == "gram") doc = cmd_gram(opts, std::move(doc));
    else if (name == "hodge") doc = cmd_hodge(opts, std::move(doc));
    else if (name == "compound") doc = cmd_compound(opts, std::move(doc));
    else {
      bool passed = false;
      doc = cmd_verify(opts, std::move(doc), passed);
      if (!passed) status = kVerificationFailed;
    }
  } catch (const Error& e) {
    err << "crossn: " << to_string(e.kind()) << " error: " << e.what() << '\n';
    return exit_code(e.kind());
  }

  const std::string text = io::dump(doc);
  if (opts.output.empty()) {
    out << text;
  } else {
    std::ofstream f(opts.output, std::ios::binary);
    if (!f) {
      err << "crossn: cannot write " << opts.output << '\n';
      return kUsage;
    }
    f << text;
  }
  return status;
}

}  // namespace crossn::cli
