#include "abslcp_cli/problem_file.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace abslcp::cli {

namespace {

using json = nlohmann::json;

double number_at(const json& v, const std::string& field) {
  if (!v.is_number()) {
    throw ParseError(field + ": expected a number, got " + std::string(v.type_name()));
  }
  return v.get<double>();
}

Vector read_vector(const json& doc, const std::string& field, int n) {
  const json& arr = doc.at(field);
  if (!arr.is_array()) {
    throw ParseError(field + ": expected an array");
  }
  if (static_cast<int>(arr.size()) != n) {
    throw ParseError(field + ": expected " + std::to_string(n) + " entries, got " +
                     std::to_string(arr.size()));
  }
  Vector v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = number_at(arr[static_cast<std::size_t>(i)], field + "[" + std::to_string(i) + "]");
  }
  return v;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("top level: expected an object");
  }
  for (const char* key : {"n", "M", "q"}) {
    if (!doc.contains(key)) {
      throw ParseError(std::string(key) + ": missing required field");
    }
  }

  ProblemFile out;
  const json& n = doc["n"];
  if (!n.is_number_integer() || n.get<long long>() < 1) {
    throw ParseError("n: expected a positive integer");
  }
  out.n = n.get<int>();

  const json& M = doc["M"];
  if (!M.is_array()) {
    throw ParseError("M: expected an array of rows");
  }
  if (static_cast<int>(M.size()) != out.n) {
    throw ParseError("M: expected " + std::to_string(out.n) + " rows, got " +
                     std::to_string(M.size()));
  }
  out.M.resize(out.n, out.n);
  for (int r = 0; r < out.n; ++r) {
    const json& row = M[static_cast<std::size_t>(r)];
    const std::string where = "M[" + std::to_string(r) + "]";
    if (!row.is_array()) {
      throw ParseError(where + ": expected an array");
    }
    if (static_cast<int>(row.size()) != out.n) {
      throw ParseError(where + ": expected " + std::to_string(out.n) + " entries, got " +
                       std::to_string(row.size()));
    }
    for (int c = 0; c < out.n; ++c) {
      out.M(r, c) = number_at(row[static_cast<std::size_t>(c)],
                              where + "[" + std::to_string(c) + "]");
    }
  }

  out.q = read_vector(doc, "q", out.n);
  if (doc.contains("x0") && !doc["x0"].is_null()) {
    out.x0 = read_vector(doc, "x0", out.n);
  }
  if (doc.contains("name") && !doc["name"].is_null()) {
    if (!doc["name"].is_string()) {
      throw ParseError("name: expected a string");
    }
    out.name = doc["name"].get<std::string>();
  }
  return out;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_problem(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string to_json(const ProblemFile& file) {
  json doc;
  doc["n"] = file.n;
  json M = json::array();
  for (Eigen::Index r = 0; r < file.M.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < file.M.cols(); ++c) row.push_back(file.M(r, c));
    M.push_back(std::move(row));
  }
  doc["M"] = std::move(M);
  doc["q"] = std::vector<double>(file.q.begin(), file.q.end());
  if (file.x0) doc["x0"] = std::vector<double>(file.x0->begin(), file.x0->end());
  if (file.name) doc["name"] = *file.name;
  return doc.dump();
}

Vector parse_vector_list(std::string_view text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw ParseError("vector entry " + std::to_string(values.size()) + ": '" +
                       std::string(item) + "' is not a number");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

}  // namespace abslcp::cli
