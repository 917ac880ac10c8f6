#include "crossn/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "crossn/error.hpp"

namespace crossn::io {

using json = Json;

std::optional<MatrixFormat> parse_format(std::string_view name) {
  if (name == "json") return MatrixFormat::Json;
  if (name == "csv") return MatrixFormat::Csv;
  return std::nullopt;
}

MatrixFormat detect_format(const std::filesystem::path& path, std::string_view text) {
  const auto ext = path.extension().string();
  if (ext == ".json") return MatrixFormat::Json;
  if (ext == ".csv") return MatrixFormat::Csv;
  const auto first = text.find_first_not_of(" \t\r\n");
  return (first != std::string_view::npos && text[first] == '{') ? MatrixFormat::Json
                                                                  : MatrixFormat::Csv;
}

namespace {

double finite_or_throw(double v) {
  if (!std::isfinite(v)) raise(ErrorKind::Parse, "matrix file contains a non-finite value");
  return v;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
    raise(ErrorKind::Parse,
          "line " + std::to_string(line) + ": '" + std::string(field) + "' is not a number");
  return finite_or_throw(v);
}

std::size_t dimension_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer())
    raise(ErrorKind::Parse, std::string("matrix json needs an integer \"") + key + "\" field");
  const auto v = doc[key].get<long long>();
  if (v < 1) raise(ErrorKind::Parse, std::string("\"") + key + "\" must be >= 1");
  return static_cast<std::size_t>(v);
}

void write_json(std::ostream& os, const json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << pad << json(key).dump() << ": ";
        write_json(os, value, depth + 1);
      }
      os << '\n' << close_pad << '}';
      return;
    }
    case json::value_t::array: {
      // Arrays of scalars stay on one line: labels and [re, im] pairs.
      const bool flat = std::none_of(j.begin(), j.end(), [](const json& e) {
        return e.is_structured();
      });
      if (j.empty() || flat) {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          write_json(os, j[i], depth + 1);
        }
        os << ']';
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write_json(os, j[i], depth + 1);
      }
      os << '\n' << close_pad << ']';
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        os << "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      std::string s(buf);
      // Keep floats recognizable as floats when read back.
      if (s.find_first_of(".eE") == std::string::npos) s += ".0";
      os << s;
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

Matrix parse_matrix_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorKind::Parse, std::string("invalid json: ") + e.what());
  }
  return matrix_from_json(doc);
}

Matrix parse_matrix_csv(std::string_view text) {
  std::vector<Scalar> data;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    std::size_t fields = 0;
    for (;;) {
      const auto comma = line.find(',');
      data.emplace_back(parse_real(line.substr(0, comma), line_no), 0.0);
      ++fields;
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (rows == 0) cols = fields;
    if (fields != cols)
      raise(ErrorKind::Parse, "line " + std::to_string(line_no) + " has " +
                                  std::to_string(fields) + " fields, expected " +
                                  std::to_string(cols));
    ++rows;
  }
  if (rows == 0) raise(ErrorKind::Parse, "csv matrix is empty");
  return Matrix(rows, cols, std::move(data));
}

Matrix parse_matrix(std::string_view text, MatrixFormat format) {
  return format == MatrixFormat::Json ? parse_matrix_json(text) : parse_matrix_csv(text);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json scalar_to_json(const Scalar& z) { return json::array({z.real(), z.imag()}); }

Scalar scalar_from_json(const json& j) {
  if (j.is_number()) return {finite_or_throw(j.get<double>()), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    raise(ErrorKind::Parse, "expected a [re, im] pair, got " + j.dump());
  return {finite_or_throw(j[0].get<double>()), finite_or_throw(j[1].get<double>())};
}

json matrix_to_json(const Matrix& a) {
  json data = json::array();
  for (const auto& z : a.data()) data.push_back(scalar_to_json(z));
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const json& doc) {
  if (!doc.is_object()) raise(ErrorKind::Parse, "matrix json must be an object");
  const auto rows = dimension_field(doc, "rows");
  const auto cols = dimension_field(doc, "cols");
  if (!doc.contains("data") || !doc["data"].is_array())
    raise(ErrorKind::Parse, "matrix json needs a \"data\" array");
  const auto& data = doc["data"];
  if (data.size() != rows * cols)
    raise(ErrorKind::Parse, "\"data\" holds " + std::to_string(data.size()) +
                                " entries but rows*cols = " + std::to_string(rows * cols));
  std::vector<Scalar> values;
  values.reserve(data.size());
  for (const auto& e : data) values.push_back(scalar_from_json(e));
  return Matrix(rows, cols, std::move(values));
}

json cross_vector_to_json(const CrossVector& v) {
  json out = json::array();
  for (const auto& c : v.components()) {
    json label = json::array();
    for (int idx : c.label.indices()) label.push_back(idx);
    out.push_back({{"label", std::move(label)}, {"value", scalar_to_json(c.value)}});
  }
  return out;
}

CrossVector cross_vector_from_json(const json& components, int n, int m) {
  if (!components.is_array()) raise(ErrorKind::Parse, "components must be an array");
  std::vector<Scalar> values;
  values.reserve(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (!c.is_object() || !c.contains("label") || !c.contains("value"))
      raise(ErrorKind::Parse, "component needs \"label\" and \"value\"");
    const Combination label(c["label"].get<std::vector<int>>());
    label.require_fits(n);
    if (label.size() != m || rank_combination(label, n) != i)
      raise(ErrorKind::Parse, "component " + label.to_string() + " is out of order");
    values.push_back(scalar_from_json(c["value"]));
  }
  return CrossVector(n, m, std::move(values));
}

std::string dump(const json& j) {
  std::ostringstream os;
  write_json(os, j, 0);
  os << '\n';
  return os.str();
}

}  // namespace crossn::io
