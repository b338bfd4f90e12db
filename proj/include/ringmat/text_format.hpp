#pragma once

/**
 * @file text_format.hpp
 * @brief Text syntax for ring elements and matrix files.
 *
 * Element syntax by ring:
 *   integers     optionally signed decimal:  -12
 *   rationals    p/q or p:                   3/4, -2
 *   zmod m       optionally signed decimal, reduced into [0, m) on read
 *   poly over R  [c0,c1,...,ck] with ci in R's syntax, low degree first; [] is 0
 *
 * Matrix file:
 *   ring <descriptor>
 *   dims <m> <n>
 *   <m lines of n whitespace separated entries>
 *
 * Blank lines and lines starting with '#' are ignored.
 */

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "ringmat/matrix.hpp"
#include "ringmat/ring.hpp"

namespace ringmat {

std::string format_element(const Ring& ring, const Element& x);

/// Parses one element. Sets *reduced when a zmod literal was outside [0, m).
/// Throws parse_error with a 1-based column into `text`.
Element parse_element(const Ring& ring, std::string_view text, bool* reduced = nullptr);

struct MatrixFile {
  Ring ring;
  Matrix matrix;
  /// Informational messages, e.g. zmod entries that were reduced on read.
  std::vector<std::string> notes;
};

/// Throws parse_error carrying the line and column of the first problem.
MatrixFile read_matrix(std::istream& in);
MatrixFile read_matrix(std::string_view text);
MatrixFile read_matrix_file(const std::filesystem::path& path);

std::string write_matrix(const Ring& ring, const Matrix& a);

}  // namespace ringmat
