#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "hcube/bitmatrix.hpp"
#include "hcube/hypercube.hpp"

namespace hcube {

/// One row per line, '0'/'1' only, every line newline-terminated.
std::string format_matrix_text(const BinaryMatrix& x);
/// Accepts leading '#' comment lines and a missing final newline; rejects
/// trailing whitespace, other characters, ragged or missing rows.
BinaryMatrix parse_matrix_text(const std::string& text);

/// {"rows": m, "cols": n, "data": ["0110", ...]}
std::string format_matrix_json(const BinaryMatrix& x, int indent = -1);
BinaryMatrix parse_matrix_json(const std::string& text);

/// Either format: JSON when the first non-blank character is '{'.
BinaryMatrix parse_matrix(const std::string& text);

/// One vertex per line; `n` is checked against every vertex when given.
std::string format_label_class_text(const LabelClass& s);
LabelClass parse_label_class_text(const std::string& text, std::optional<std::size_t> n = std::nullopt);

/// {"n": n, "vertices": [...]}
std::string format_label_class_json(const LabelClass& s, int indent = -1);
LabelClass parse_label_class_json(const std::string& text);

/// {"sigma": [...], "pi": [...], "flips": [...]}, 0-based; "flips" lists the
/// flipped source columns in increasing order.
std::string format_symmetry_json(const Symmetry& s, int indent = -1);
Symmetry parse_symmetry_json(const std::string& text);

/// Whole file, or standard input for "-". PreconditionError (kParse) when the
/// file cannot be read.
std::string read_file(const std::string& path);

}  // namespace hcube
