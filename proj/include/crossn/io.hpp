#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "crossn/cross_vector.hpp"
#include "crossn/matrix.hpp"

namespace crossn::io {

using Json = nlohmann::ordered_json;

// Matrix files
//
//   json: {"rows": R, "cols": C, "data": [[re, im], ...]}  row-major, R*C pairs.
//         A bare number is accepted in place of [re, 0].
//   csv:  one matrix row per line, comma-separated reals. Blank lines are
//         ignored. Real-valued only.
//
// Columns are vectors: a file holding X = (X1 ... Xm) has n rows, m columns.

enum class MatrixFormat { Json, Csv };

std::optional<MatrixFormat> parse_format(std::string_view name);

/// Extension first (.json / .csv), then content: a leading '{' means json.
MatrixFormat detect_format(const std::filesystem::path& path, std::string_view text);

Matrix parse_matrix_json(std::string_view text);
Matrix parse_matrix_csv(std::string_view text);
Matrix parse_matrix(std::string_view text, MatrixFormat format);

std::string read_file(const std::filesystem::path& path);

Json scalar_to_json(const Scalar& z);
Scalar scalar_from_json(const Json& j);

Json matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const Json& j);

/// [{"label": [1, 2], "value": [re, im]}, ...] in label order.
Json cross_vector_to_json(const CrossVector& v);
/// Inverse of cross_vector_to_json. Labels must be the lexicographic
/// enumeration for (n, m).
CrossVector cross_vector_from_json(const Json& components, int n, int m);

/// Serializes with two-space indentation, floating-point values printed
/// with 17 significant digits.
std::string dump(const Json& j);

}  // namespace crossn::io
