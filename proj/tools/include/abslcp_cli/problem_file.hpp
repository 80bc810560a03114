#pragma once

#include "abslcp/problem.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace abslcp::cli {

/// Malformed or inconsistent problem document. what() names the field (and,
/// for syntax errors, the line and column).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n": int, "M": [[...]], "q": [...], "x0"?: [...], "name"?: string}
struct ProblemFile {
  int n = 0;
  Matrix M;
  Vector q;
  std::optional<Vector> x0;
  std::optional<std::string> name;

  LcpProblem problem() const { return LcpProblem(M, q); }
};

ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::filesystem::path& path);

/// Inverse of parse_problem; values written with full precision.
std::string to_json(const ProblemFile& file);

/// "v1,v2,...,vn" -> vector. Throws ParseError.
Vector parse_vector_list(std::string_view text);

}  // namespace abslcp::cli
